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
#include "orlicz/young.hpp"

namespace orlicz {

struct NormResult {
  double value = 0.0;
  double modular_at_value = 0.0;
  int iterations = 0;
};

// Phi_A(u) = int A(|u|) dx by the midpoint rule.
double modular(const YoungFunction& A, const Field& u);

// Luxemburg norm inf{lambda > 0 : Phi_A(u/lambda) <= 1} by bisection on
// lambda; relative bracket width 1e-8 or 200 iterations. The zero field
// returns value 0 without error. When A is doubling the recorded modular at
// the returned value lies in [1 - 1e-6, 1].
NormResult luxemburg_norm(const YoungFunction& A, const Field& u);

// int |u w| dx. The pairing that Hoelder's inequality bounds by
// 2 ||u||_{L^A} ||w||_{L^{conj A}}; A is carried for reporting only.
double holder_pairing(const YoungFunction& A, const Field& u, const Field& w);

// Weighted discrete modular sum_i weight_i A(|value_i| / lambda) and the
// corresponding Luxemburg norm; shared by the Gagliardo seminorm and the
// product-measure norms.
double modular_weighted(const YoungFunction& A, std::span<const double> values,
                        std::span<const double> weights, double lambda);
NormResult luxemburg_weighted(const YoungFunction& A, std::span<const double> values,
                              std::span<const double> weights);

// Luxemburg norm of v(x, t) for the measure |t|^{-1} dx dt (t = 0 row
// excluded).
NormResult product_luxemburg(const YoungFunction& A, const ProductField& v);

}  // namespace orlicz
