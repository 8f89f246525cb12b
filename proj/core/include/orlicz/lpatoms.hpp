// Copyright 2026 The orlicz-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Littlewood-Paley filter bank: low-pass symbol Phi_hat equal to 1 on
// B(0, 1/2), supported in B(0, 1), glued with the standard exp(-1/t) bump;
// band symbols phi_hat_k(xi) = Phi_hat(2^{-k} xi) - Phi_hat(2^{-k+1} xi) are
// supported in 2^{k-2} <= |xi| <= 2^k and telescope exactly:
// Phi_hat + sum_{k<=K} phi_hat_k = Phi_hat(2^{-K} .).
struct FilterBank {
  int K = 0;
  Grid grid;

  static double transition(double r);  // the C^inf profile of Phi_hat
  double low_pass(double r) const { return transition(r); }
  double band(int k, double r) const {
    return transition(std::scalbn(r, -k)) - transition(std::scalbn(r, -k + 1));
  }
};

// Requires 2^K <= pi / h (finest band resolvable on the grid).
FilterBank build_filter_bank(int K, const Grid& grid);

// [0] = Phi * u, [k] = phi_k * u for k = 1..K, via spectral multiplication.
std::vector<Field> lp_pieces(const FilterBank& bank, const Field& u);

// ||Phi * u||_{L^A} + || (sum_k |2^{sk} phi_k * u|^q)^{1/q} ||_{L^A}, q > 1.
double triebel_norm(const YoungFunction& A, double s, double q, const Field& u,
                    const FilterBank& bank);

// One C^m-atom: coefficient s_ik plus the atom samples over its (wrapped)
// triple-cube window.
struct Atom {
  std::array<int, 3> k = {0, 0, 0};       // dyadic cube index
  double coeff = 0.0;                      // s_ik >= 0
  std::array<int, 3> window_start = {0, 0, 0};  // grid index, pre-wrap
  std::array<int, 3> window_extent = {1, 1, 1};
  std::vector<double> local;               // row-major over the window
};

struct AtomicDecomposition {
  Grid grid;
  double s = 0.0;
  int m = 0;
  int I_max = 0;
  std::vector<std::vector<Atom>> scales;  // index i = 0..I_max
  double dropped_mass = 0.0;   // L1 mass of sub-threshold pieces
  double recon_defect = 0.0;   // max |u - sum 2^{-is} u_i| over the grid
};

// Constructive decomposition u = sum_i 2^{-is} sum_k s_ik a_ik following the
// eta-partition construction; coefficients are the scale-weighted derivative
// maxima over the triple cubes, derivatives spectral on the full grid.
AtomicDecomposition atomic_decompose(const Field& u, double s, int m, const FilterBank& bank,
                                     int I_max);

struct AtomCheck {
  bool valid = false;
  double max_ratio = 0.0;     // worst 2^{-i|g|} |D^g a| over the triple cube
  double support_leak = 0.0;  // largest |a| more than one cell outside it
};

// Support and size validation of a candidate atom for cube (i, k).
AtomCheck atom_validate(const Field& a, int scale_i, const std::array<int, 3>& cube_k, int m);

// Materializes one atom onto the full grid.
Field atom_field(const AtomicDecomposition& d, int scale_i, const Atom& atom);

// Step field s_i(x) = sum_k s_ik chi_ik(x).
Field coefficient_field(const AtomicDecomposition& d, int scale_i);

// || (sum_i |s_i(x)|^q)^{1/q} ||_{L^A}.
double coefficient_norm(const AtomicDecomposition& d, const YoungFunction& A, double q);

// sum_i 2^{-is} sum_k s_ik a_ik
Field reconstruct(const AtomicDecomposition& d);

// JSON index {s, m, I_max, per-scale cube list with coefficients}; when
// include_atoms is set (refused above 512 atoms) each atom is also written in
// the Field format next to the index.
void write_decomposition(const AtomicDecomposition& d, const std::string& dir,
                         bool include_atoms = false);

}  // namespace orlicz
