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

#include <span>

#include "orlicz/grid.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Sampled Bessel kernel G_s together with its Fourier symbol
// (1 + |xi|^2)^{-s/2}.
//
// Spatial samples come from an inverse FFT of the symbol on a frequency grid
// oversampled by `oversample` per axis (pointwise-accurate periodized
// kernel), after which the origin cell absorbs the quadrature defect so that
// integrate(samples) is exactly one. oversample = 1 skips both steps and
// yields the raw band-limited kernel, which is the exact spatial counterpart
// of the discrete symbol (convolving with it reproduces spectral
// multiplication bit-for-bit).
struct BesselKernel {
  double s = 0.0;
  Grid grid;
  Field samples;
  int oversample = 1;
  double origin_refill = 0.0;   // amount added to the origin cell
  double fitted_origin = 0.0;   // two-shell |x|^{s-n} cell-average diagnostic (0 < s < n)

  double symbol(std::span<const double> xi) const;
};

// oversample = 0 picks a per-dimension default (64 / 8 / 2).
BesselKernel synthesize_kernel(double s, const Grid& grid, int oversample = 0);

// u = G_s * f via the symbol; exact on the periodic grid.
Field potential(const BesselKernel& kernel, const Field& f);
Field potential(double s, const Field& f);

// Spectral multiply by (1 + |xi|^2)^{+s/2}; inverts `potential` to roundoff.
Field bessel_inverse(double s, const Field& u);

// ||u||_{H^{s,A}} = ||G_{-s} u||_{L^A}.
NormResult hs_norm(const YoungFunction& A, double s, const Field& u);

// int |G_s(x + h) - G_s(x)| dx for a grid-aligned shift h; requires
// 0 < s < 1.
double l1_modulus(const BesselKernel& kernel, std::span<const double> h);

// Truncated singular convolution T_i^eps u = int_{|y| > eps} D_i G_1(y)
// u(. - y) dy with the spectrally differentiated kernel; eps >= 2 h.
Field singular_gradient_apply(int axis, double eps, const Field& u);

// G_1 * u + sum_i T_i(D_i u) with T_i extrapolated from the eps, eps/2
// truncation pair; approximates bessel_inverse(1, u) on smooth fields.
Field calderon_inversion(const Field& u);

// Increment-kernel operator (Tv)(z) = iint K(z,x,t) v(x,t) |t|^{-n} dx dt,
// K = (G_alpha(z-x) - G_alpha(z-x+t)) |t|^{-gamma}. n = 1, N <= 128.
struct IncrementKernelConfig {
  double alpha = 0.9;
  double gamma = 0.5;
  Grid grid;  // shared by z, x and t

  static IncrementKernelConfig make(double alpha, double gamma, const Grid& grid);
};

Field increment_kernel_apply(const IncrementKernelConfig& cfg, const ProductField& v);

}  // namespace orlicz
