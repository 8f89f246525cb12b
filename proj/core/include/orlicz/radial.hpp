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

#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Radial profile u0(r) on a uniform grid over [0, R_max]; lifts to the
// ambient dimension as u(x) = u0(|x|).
struct RadialProfile {
  int n = 2;                   // ambient dimension
  double r_max = 0.0;
  std::vector<double> values;  // samples at r_j = j * r_max / (count - 1)

  double operator()(double r) const;  // linear interpolation
  static RadialProfile make(int n, double r_max, std::vector<double> values);
};

// Samples u0(|x|) on the grid; requires R_max >= sqrt(n) L.
Field lift(const RadialProfile& p, const Grid& grid);

// f * chi_{B(0,R)}(x) for radial f by the reduced one-dimensional shell
// integral (spherical-cap section for n >= 2, direct integral for n = 1).
double ball_convolution(const RadialProfile& f, double R, double rho);

// Pointwise Strauss ratios along the +e1 axis:
//   ratio(rho) = |u(rho e1)| Ahat^{-1}(rho^{1-n}) / (rho^{1-n} ||u||_{H^{s,A}})
// for rho in [2h, L/2]. hypothesis_ok records s p^- > 1.
struct StraussProfile {
  std::vector<double> rho;
  std::vector<double> u_abs;
  std::vector<double> bound;  // rho^{1-n} / Ahat^{-1}(rho^{1-n}) * ||u||
  std::vector<double> ratio;
  double sup_ratio = 0.0;
  double hs_norm_value = 0.0;
  bool hypothesis_ok = true;
};

StraussProfile strauss_ratio(const YoungFunction& A, double s, const Field& u_radial);

// CSV export: rho, |u|, bound, ratio.
void write_strauss_csv(const StraussProfile& p, const std::string& path);

}  // namespace orlicz
