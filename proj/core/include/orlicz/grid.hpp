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
#include <cstddef>
#include <string>
#include <vector>

namespace orlicz {

// Uniform periodic grid on the box [-L, L)^n, N points per axis (power of
// two). Physical points are x_j = -L + j h with h = 2L/N; the frequency grid
// is xi_k = pi k / L for k = -N/2 .. N/2-1.
struct Grid {
  int n = 1;
  int N = 0;
  double L = 0.0;

  double h() const { return 2.0 * L / N; }
  std::size_t size() const {
    std::size_t s = 1;
    for (int d = 0; d < n; ++d) s *= static_cast<std::size_t>(N);
    return s;
  }
  // volume of the n-dimensional unit ball
  double omega_n() const;
  double box_volume() const;

  int signed_index(int k) const { return k < N / 2 ? k : k - N; }
  double freq(int k) const;   // pi * signed_index(k) / L
  double coord(int j) const { return -L + j * h(); }
  int origin_index() const { return N / 2; }

  bool operator==(const Grid&) const = default;

  // Validates n in {1,2,3}, N >= 8 power of two, L > 0.
  static Grid make(int n, int N, double L);
};

struct Field {
  Grid grid;
  std::vector<double> v;  // row-major, last axis fastest

  Field() = default;
  explicit Field(const Grid& g) : grid(g), v(g.size(), 0.0) {}

  double& at(std::size_t flat) { return v[flat]; }
  double at(std::size_t flat) const { return v[flat]; }

  std::size_t flat(int i0) const { return static_cast<std::size_t>(i0); }
  std::size_t flat(int i0, int i1) const {
    return static_cast<std::size_t>(i0) * grid.N + i1;
  }
  std::size_t flat(int i0, int i1, int i2) const {
    return (static_cast<std::size_t>(i0) * grid.N + i1) * grid.N + i2;
  }
};

// Sampled function on a product lattice grid_x x grid_t (same dimension);
// carries v(x, t) for the |t|^{-n} dx dt measure. Only n = 1 is supported.
struct ProductField {
  Grid grid_x;
  Grid grid_t;
  std::vector<double> v;  // [t-index][x-index]

  ProductField() = default;
  ProductField(const Grid& gx, const Grid& gt);
  double& at(int it, int ix) { return v[static_cast<std::size_t>(it) * grid_x.N + ix]; }
  double at(int it, int ix) const { return v[static_cast<std::size_t>(it) * grid_x.N + ix]; }
};

Field delta_field(const Grid& g);  // 1/h^n at the origin cell

// Largest |u| on the outermost layer (index 0 along any axis); the periodic
// truncation model requires test fields to decay below tolerance there.
double boundary_max(const Field& u);

// Serialization: JSON header {n, N, L, samples, dtype, order} next to a raw
// row-major float64 sidecar. Given "dir/name.bin" writes "dir/name.bin" and
// "dir/name.json"; any other path gets ".bin"/".json" appended.
void write_field(const Field& u, const std::string& path);
Field read_field(const std::string& path);  // accepts the .json or .bin path
void write_field_csv(const Field& u, const std::string& path);  // n = 1 only

}  // namespace orlicz
