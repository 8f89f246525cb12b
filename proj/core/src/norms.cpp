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

#include "orlicz/norms.hpp"

#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Weighted modular that treats above-table evaluations of tabulated Young
// functions as +inf. Sound for bracketing: any sample beyond the table top
// contributes far more than 1 to the modular for every table this library
// produces.
double modular_or_inf(const YoungFunction& A, std::span<const double> values,
                      std::span<const double> weights, double lambda) {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = std::abs(values[i]) / lambda;
    if (t == 0.0) continue;
    double a;
    try {
      a = A(t);
    } catch (const std::range_error&) {
      return kInf;
    } catch (const numeric_error&) {
      return kInf;
    }
    s += weights[i] * a;
    if (s == kInf) return kInf;
  }
  return s;
}

NormResult luxemburg_impl(const YoungFunction& A, std::span<const double> values,
                          std::span<const double> weights, double box_scale) {
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::abs(v));
  if (vmax == 0.0) return NormResult{0.0, 0.0, 0};

  const auto phi = [&](double lambda) { return modular_or_inf(A, values, weights, lambda); };

  int iters = 0;
  double hi = vmax * std::max(1.0, box_scale);
  while (phi(hi) > 1.0) {
    hi *= 4.0;
    if (++iters > 600) throw numeric_error("luxemburg: failed to bracket from above");
  }
  double lo = hi * 1e-16;
  while (phi(lo) <= 1.0) {
    // the modular at lo is already <= 1, so the norm is below lo
    hi = lo;
    lo *= 1e-4;
    if (++iters > 600) throw numeric_error("luxemburg: failed to bracket from below");
    if (lo < 1e-300) return NormResult{0.0, phi(hi), iters};
  }
  // invariant: phi(lo) > 1 >= phi(hi)
  for (int it = 0; it < 200 && (hi - lo) > 1e-8 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (phi(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iters;
  }
  return NormResult{hi, phi(hi), iters};
}

}  // namespace

double modular(const YoungFunction& A, const Field& u) {
  const double hn = std::pow(u.grid.h(), u.grid.n);
  double s = 0.0;
  for (double x : u.v) {
    if (x == 0.0) continue;
    s += A(std::abs(x));
  }
  s *= hn;
  if (!std::isfinite(s)) throw numeric_error("modular: overflow");
  return s;
}

NormResult luxemburg_norm(const YoungFunction& A, const Field& u) {
  const double hn = std::pow(u.grid.h(), u.grid.n);
  std::vector<double> weights(u.v.size(), hn);
  return luxemburg_impl(A, u.v, weights, u.grid.box_volume());
}

double holder_pairing(const YoungFunction&, const Field& u, const Field& w) {
  if (!(u.grid == w.grid)) throw config_error("holder_pairing: grid mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.v.size(); ++i) s += std::abs(u.v[i] * w.v[i]);
  return s * std::pow(u.grid.h(), u.grid.n);
}

double modular_weighted(const YoungFunction& A, std::span<const double> values,
                        std::span<const double> weights, double lambda) {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = std::abs(values[i]) / lambda;
    if (t == 0.0) continue;
    s += weights[i] * A(t);
  }
  if (!std::isfinite(s)) throw numeric_error("weighted modular: overflow");
  return s;
}

NormResult luxemburg_weighted(const YoungFunction& A, std::span<const double> values,
                              std::span<const double> weights) {
  double wsum = 0.0;
  for (double w : weights) wsum += w;
  return luxemburg_impl(A, values, weights, wsum);
}

NormResult product_luxemburg(const YoungFunction& A, const ProductField& v) {
  const double cell = v.grid_x.h() * v.grid_t.h();
  std::vector<double> values, weights;
  values.reserve(v.v.size());
  weights.reserve(v.v.size());
  double wsum = 0.0;
  for (int it = 0; it < v.grid_t.N; ++it) {
    const double t = v.grid_t.coord(it);
    if (t == 0.0) continue;
    const double w = cell / std::abs(t);
    for (int ix = 0; ix < v.grid_x.N; ++ix) {
      values.push_back(v.at(it, ix));
      weights.push_back(w);
      wsum += w;
    }
  }
  return luxemburg_impl(A, values, weights, wsum);
}

}  // namespace orlicz
