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

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "orlicz/grid.hpp"

namespace orlicz {

using RealSymbol = std::function<double(std::span<const double>)>;
using ComplexSymbol = std::function<std::complex<double>(std::span<const double>)>;

// Midpoint rule h^n sum(u); exact for constants, spectrally accurate for
// smooth periodic integrands.
double integrate(const Field& u);

// Spectral-side energy h^n/N^n sum |DFT(u)|^2; equals h^n sum u^2 (Parseval).
double parseval_energy(const Field& u);

// Periodic convolution h^n * (circular convolution), centered so that
// convolving with delta_field is the identity. Same grid required.
Field convolve(const Field& u, const Field& v);

// F^{-1}(symbol(xi) F(u)) under F(u)(xi) = int u e^{-i x xi} dx. The symbol
// must be finite on the frequency grid.
Field spectral_multiply(const Field& u, const RealSymbol& symbol);
Field apply_multiplier(const Field& u, const ComplexSymbol& symbol);

// Spectral derivative along one axis (symbol i xi_d); exact on band-limited
// fields.
Field derivative(const Field& u, int axis);
std::vector<Field> gradient(const Field& u);
Field gradient_magnitude(const Field& u);

// Translation u(. + delta) by the spectral phase shift e^{i xi . delta};
// exact for band-limited fields, any real delta.
Field shift(const Field& u, std::span<const double> delta);

// Exact circular shift by whole cells: result(j) = u(j + cells).
Field roll(const Field& u, std::span<const int> cells);

// Centered discrete Hardy-Littlewood maximal function: sup over dyadic radii
// r = h 2^j (j = 0 .. log2(N/2)) of the average of |u| over the open discrete
// ball |d| < r (j = 0 is the singleton, so M u >= |u|).
Field maximal_function(const Field& u);

// Triple sum h_z h_x h_t sum K(z, x, t) v(x, t) w(z) / |t|, skipping the
// t = 0 row. n = 1 only, all extents <= 128 (cost guard).
double product_weighted_pair(const ProductField& v,
                             const std::function<double(double, double, double)>& kernel,
                             const Field& w);

// small arithmetic helpers
Field abs_field(const Field& u);
Field scaled(const Field& u, double c);
Field added(const Field& u, const Field& v);
Field subtracted(const Field& u, const Field& v);
double max_abs(const Field& u);
double rel_l2_error(const Field& got, const Field& want);

}  // namespace orlicz
