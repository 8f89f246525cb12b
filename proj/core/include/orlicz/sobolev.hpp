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

#include "orlicz/grid.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Quadrature for the increment variable of the Gagliardo modular: the
// |h|^{-n} dh measure is sampled on logarithmic rings between inner_cut and
// h_max, equal direction count per ring.
struct GagliardoQuadrature {
  double h_max = 0.0;      // truncation radius, <= L
  int ring_count = 32;
  double inner_cut = 0.0;  // smallest ring radius, >= grid spacing
  int directions = 0;      // samples per ring; 0 = per-dimension default

  static GagliardoQuadrature standard(const Grid& g);
  void validate(const Grid& g) const;
  int direction_count(int n) const;
};

// Phi_{s,A}(u) = iint A(|u(x+h) - u(x)| / |h|^s) |h|^{-n} dh dx over
// |h| in [inner_cut, h_max]; 0 < s < 1.
double gagliardo_modular(const YoungFunction& A, double s, const Field& u,
                         const GagliardoQuadrature& q);

// Convexity bound on the |h| > h_max far tail that the quadrature truncates:
// (n omega_n / s) int A(2 |u| / h_max^s) dx. Reported as the upper end of the
// interval [value, value + tail].
double gagliardo_tail_bound(const YoungFunction& A, double s, const Field& u,
                            const GagliardoQuadrature& q);

// [u]_{W^{s,A}} = inf{lambda : Phi_{s,A}(u/lambda) <= 1}.
NormResult gagliardo_seminorm(const YoungFunction& A, double s, const Field& u,
                              const GagliardoQuadrature& q);

// [u]_{W^{1,A}}: Luxemburg norm of |grad u|.
NormResult w1_seminorm(const YoungFunction& A, const Field& u);

// ||u||_{W^{s,A}} = ||u||_{L^A} + [u]_{W^{s,A}}, s in (0, 1].
double sobolev_norm(const YoungFunction& A, double s, const Field& u,
                    const GagliardoQuadrature& q);

}  // namespace orlicz
