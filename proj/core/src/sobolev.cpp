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

#include "orlicz/sobolev.hpp"

#include <cmath>
#include <numbers>

#include "orlicz/errors.hpp"
#include "orlicz/field_ops.hpp"

namespace orlicz {

GagliardoQuadrature GagliardoQuadrature::standard(const Grid& g) {
  GagliardoQuadrature q;
  q.h_max = g.L / 2.0;
  q.ring_count = 32;
  q.inner_cut = g.h();
  q.directions = 0;
  return q;
}

int GagliardoQuadrature::direction_count(int n) const {
  if (directions > 0) return directions;
  switch (n) {
    case 1: return 2;
    case 2: return 16;
    default: return 12;
  }
}

void GagliardoQuadrature::validate(const Grid& g) const {
  if (!(inner_cut >= g.h())) throw config_error("gagliardo: inner_cut below grid spacing");
  if (!(h_max <= g.L)) throw config_error("gagliardo: h_max beyond box half-extent");
  if (!(h_max > inner_cut)) throw config_error("gagliardo: h_max must exceed inner_cut");
  if (ring_count < 2) throw config_error("gagliardo: need at least two rings");
}

namespace {

// Unit directions for the ring samples (n = 3: Fibonacci sphere).
std::vector<std::array<double, 3>> ring_directions(int n, int count) {
  std::vector<std::array<double, 3>> dirs;
  dirs.reserve(count);
  if (n == 1) {
    dirs.push_back({1.0, 0.0, 0.0});
    dirs.push_back({-1.0, 0.0, 0.0});
    return dirs;
  }
  if (n == 2) {
    for (int m = 0; m < count; ++m) {
      const double a = 2.0 * std::numbers::pi * m / count;
      dirs.push_back({std::cos(a), std::sin(a), 0.0});
    }
    return dirs;
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int m = 0; m < count; ++m) {
    const double z = 1.0 - 2.0 * (m + 0.5) / count;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden * m;
    dirs.push_back({rho * std::cos(a), rho * std::sin(a), z});
  }
  return dirs;
}

struct IncrementSamples {
  std::vector<double> values;
  std::vector<double> weights;
};

// Increment fields (u(x+delta) - u(x)) / |delta|^s for every ring sample,
// flattened with their quadrature weights.
IncrementSamples build_increments(double s, const Field& u, const GagliardoQuadrature& q) {
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("gagliardo: s must lie in (0,1)");
  q.validate(u.grid);
  const Grid& g = u.grid;
  const int dirs = q.direction_count(g.n);
  const auto dir_list = ring_directions(g.n, dirs);
  const std::size_t shifts = static_cast<std::size_t>(q.ring_count) * dir_list.size();
  if (shifts * g.size() > 40'000'000ULL) {
    throw resource_error("gagliardo: ring_count x directions x grid too large");
  }

  const double dlog = std::log(q.h_max / q.inner_cut) / q.ring_count;
  const double n_omega = g.n * g.omega_n();
  const double hn = std::pow(g.h(), g.n);

  IncrementSamples out;
  out.values.reserve(shifts * g.size());
  out.weights.reserve(shifts * g.size());
  for (int ring = 0; ring < q.ring_count; ++ring) {
    const double r = q.inner_cut * std::exp(dlog * (ring + 0.5));
    const double ring_weight = n_omega * dlog / dir_list.size();
    const double inv_rs = std::pow(r, -s);
    for (const auto& dir : dir_list) {
      double delta[3] = {r * dir[0], r * dir[1], r * dir[2]};
      const Field shifted = shift(u, std::span<const double>(delta, g.n));
      for (std::size_t i = 0; i < u.v.size(); ++i) {
        out.values.push_back((shifted.v[i] - u.v[i]) * inv_rs);
        out.weights.push_back(ring_weight * hn);
      }
    }
  }
  return out;
}

}  // namespace

double gagliardo_modular(const YoungFunction& A, double s, const Field& u,
                         const GagliardoQuadrature& q) {
  const IncrementSamples inc = build_increments(s, u, q);
  return modular_weighted(A, inc.values, inc.weights, 1.0);
}

double gagliardo_tail_bound(const YoungFunction& A, double s, const Field& u,
                            const GagliardoQuadrature& q) {
  const double scale = 2.0 * std::pow(q.h_max, -s);
  const double hn = std::pow(u.grid.h(), u.grid.n);
  double m = 0.0;
  for (double x : u.v) {
    if (x == 0.0) continue;
    m += A(scale * std::abs(x));
  }
  return u.grid.n * u.grid.omega_n() / s * m * hn;
}

NormResult gagliardo_seminorm(const YoungFunction& A, double s, const Field& u,
                              const GagliardoQuadrature& q) {
  const IncrementSamples inc = build_increments(s, u, q);
  return luxemburg_weighted(A, inc.values, inc.weights);
}

NormResult w1_seminorm(const YoungFunction& A, const Field& u) {
  return luxemburg_norm(A, gradient_magnitude(u));
}

double sobolev_norm(const YoungFunction& A, double s, const Field& u,
                    const GagliardoQuadrature& q) {
  if (!(s > 0.0 && s <= 1.0)) throw std::domain_error("sobolev_norm: s must lie in (0,1]");
  const double lux = luxemburg_norm(A, u).value;
  const double semi =
      s == 1.0 ? w1_seminorm(A, u).value : gagliardo_seminorm(A, s, u, q).value;
  return lux + semi;
}

}  // namespace orlicz
