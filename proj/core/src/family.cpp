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

#include "orlicz/family.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "orlicz/errors.hpp"
#include "orlicz/fft.hpp"
#include "orlicz/field_ops.hpp"
#include "orlicz/rng.hpp"

namespace orlicz {

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "gaussians") return FamilyKind::kGaussians;
  if (name == "bumps") return FamilyKind::kBumps;
  if (name == "bandlimited-random") return FamilyKind::kBandlimitedRandom;
  if (name == "radial-gaussians") return FamilyKind::kRadialGaussians;
  throw config_error("family: unknown kind '" + std::string(name) + "'");
}

std::string_view family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::kGaussians: return "gaussians";
    case FamilyKind::kBumps: return "bumps";
    case FamilyKind::kBandlimitedRandom: return "bandlimited-random";
    case FamilyKind::kRadialGaussians: return "radial-gaussians";
  }
  return "?";
}

namespace {

constexpr double kBoundaryTol = 1e-8;

template <typename PointFn>
Field sample_pointwise(const Grid& g, PointFn&& f) {
  Field u(g);
  if (g.n == 1) {
    for (int j = 0; j < g.N; ++j) {
      const double x[1] = {g.coord(j)};
      u.v[j] = f(x);
    }
  } else if (g.n == 2) {
    for (int j0 = 0; j0 < g.N; ++j0) {
      for (int j1 = 0; j1 < g.N; ++j1) {
        const double x[2] = {g.coord(j0), g.coord(j1)};
        u.v[u.flat(j0, j1)] = f(x);
      }
    }
  } else {
    for (int j0 = 0; j0 < g.N; ++j0) {
      for (int j1 = 0; j1 < g.N; ++j1) {
        for (int j2 = 0; j2 < g.N; ++j2) {
          const double x[3] = {g.coord(j0), g.coord(j1), g.coord(j2)};
          u.v[u.flat(j0, j1, j2)] = f(x);
        }
      }
    }
  }
  return u;
}

Field draw_gaussian(Rng& rng, const Grid& g) {
  double c[3], w[3];
  for (int d = 0; d < g.n; ++d) {
    c[d] = rng.uniform(-g.L / 4.0, g.L / 4.0);
    w[d] = rng.uniform(0.5, 1.5) * std::min(1.0, g.L / 16.0);
  }
  const double amp = rng.uniform(0.5, 2.0);
  return sample_pointwise(g, [&](const double* x) {
    double e = 0.0;
    for (int d = 0; d < g.n; ++d) {
      const double z = (x[d] - c[d]) / w[d];
      e += z * z;
    }
    return amp * std::exp(-e);
  });
}

Field draw_bump(Rng& rng, const Grid& g) {
  double c[3];
  for (int d = 0; d < g.n; ++d) c[d] = rng.uniform(-g.L / 4.0, g.L / 4.0);
  const double radius = rng.uniform(g.L / 8.0, g.L / 4.0);
  const double amp = rng.uniform(0.5, 2.0);
  return sample_pointwise(g, [&](const double* x) {
    double r2 = 0.0;
    for (int d = 0; d < g.n; ++d) {
      const double z = x[d] - c[d];
      r2 += z * z;
    }
    const double q = r2 / (radius * radius);
    if (q >= 1.0) return 0.0;
    return amp * std::exp(-1.0 / (1.0 - q)) * std::numbers::e;  // peak 1 * amp
  });
}

Field draw_bandlimited(Rng& rng, const Grid& g, double cutoff) {
  if (!(cutoff > 0.0)) throw config_error("family: bandlimited-random needs a spectral cutoff");
  const double dxi = std::numbers::pi / g.L;
  if (cutoff > std::numbers::pi / g.h() / 2.0) {
    throw config_error("family: bandlimited cutoff beyond half the grid Nyquist");
  }
  // The Gaussian envelope that enforces boundary decay widens the spectrum
  // by a computable margin: with sigma = 0.225 L the envelope is 2.6e-9 at
  // the faces and its transform falls below 1e-14 beyond 11.4 / sigma. Draw
  // modes inside cutoff - margin; the final hard projection then removes
  // only sub-1e-14 dust.
  const double sigma = 0.225 * g.L;
  const double margin = 11.4 / sigma;
  const double draw_radius = cutoff - margin;
  if (!(draw_radius >= dxi)) {
    throw config_error("family: bandlimited cutoff too small for the boundary margin");
  }
  const int kmax = static_cast<int>(draw_radius / dxi);

  std::vector<std::complex<double>> spec(g.size(), 0.0);
  const auto unsigned_of = [&](int sk) { return sk >= 0 ? sk : sk + g.N; };
  // deterministic mode order, independent of N
  if (g.n == 1) {
    for (int k = -kmax; k <= kmax; ++k) {
      const double re = rng.normal(), im = rng.normal();
      if (k == 0) continue;
      if (std::abs(k) * dxi > draw_radius) continue;
      spec[unsigned_of(k)] += std::complex<double>(re, im);
      spec[unsigned_of(-k)] += std::complex<double>(re, -im);
    }
  } else if (g.n == 2) {
    for (int k0 = -kmax; k0 <= kmax; ++k0) {
      for (int k1 = -kmax; k1 <= kmax; ++k1) {
        const double re = rng.normal(), im = rng.normal();
        if (k0 == 0 && k1 == 0) continue;
        if (std::hypot(k0 * dxi, k1 * dxi) > draw_radius) continue;
        const std::size_t a = static_cast<std::size_t>(unsigned_of(k0)) * g.N + unsigned_of(k1);
        const std::size_t b = static_cast<std::size_t>(unsigned_of(-k0)) * g.N + unsigned_of(-k1);
        spec[a] += std::complex<double>(re, im);
        spec[b] += std::complex<double>(re, -im);
      }
    }
  } else {
    for (int k0 = -kmax; k0 <= kmax; ++k0) {
      for (int k1 = -kmax; k1 <= kmax; ++k1) {
        for (int k2 = -kmax; k2 <= kmax; ++k2) {
          const double re = rng.normal(), im = rng.normal();
          if (k0 == 0 && k1 == 0 && k2 == 0) continue;
          if (std::sqrt(k0 * k0 + k1 * k1 + k2 * k2) * dxi > draw_radius) continue;
          const std::size_t a =
              (static_cast<std::size_t>(unsigned_of(k0)) * g.N + unsigned_of(k1)) * g.N +
              unsigned_of(k2);
          const std::size_t b =
              (static_cast<std::size_t>(unsigned_of(-k0)) * g.N + unsigned_of(-k1)) * g.N +
              unsigned_of(-k2);
          spec[a] += std::complex<double>(re, im);
          spec[b] += std::complex<double>(re, -im);
        }
      }
    }
  }
  const std::vector<int> shape(g.n, g.N);
  fft_nd(spec, shape, true);
  Field u(g);
  for (std::size_t i = 0; i < u.v.size(); ++i) u.v[i] = spec[i].real();

  // Alternating projections between the boundary-decaying class (Gaussian
  // envelope sized above) and the band-limited class (hard spectral cut);
  // the margin makes the first pass land inside both, the loop is a guard.
  const Field env = sample_pointwise(g, [&](const double* x) {
    double e = 0.0;
    for (int d = 0; d < g.n; ++d) e += (x[d] / sigma) * (x[d] / sigma);
    return std::exp(-e);
  });
  const auto project = [&](Field f) {
    return spectral_multiply(f, [cutoff](std::span<const double> xi) {
      double x2 = 0.0;
      for (double x : xi) x2 += x * x;
      return std::sqrt(x2) <= cutoff ? 1.0 : 0.0;
    });
  };
  for (int round = 0; round < 6; ++round) {
    for (std::size_t i = 0; i < u.v.size(); ++i) u.v[i] *= env.v[i];
    u = project(u);
    if (boundary_max(u) <= 0.5 * kBoundaryTol * max_abs(u)) break;
  }
  const double m = max_abs(u);
  if (m > 0.0) {
    for (auto& x : u.v) x /= m;
  }
  return u;
}

RadialProfile draw_radial_shell(Rng& rng, const Grid& g, int member, int size) {
  // log-spaced shell centers with jitter; widths proportional to the center
  // so each member saturates the decay bound at its own scale
  const double c_lo = std::max(3.0 * g.h(), 0.025 * g.L);  // grid-independent once resolved
  const double c_hi = 0.45 * g.L;
  const double frac = size > 1 ? static_cast<double>(member) / (size - 1) : 0.5;
  const double jitter = rng.uniform(0.97, 1.03);
  const double c = c_lo * std::pow(c_hi / c_lo, frac) * jitter;
  const double w = std::clamp(0.3 * c, 2.5 * g.h(), 1.0);
  const double r_max = std::sqrt(static_cast<double>(g.n)) * g.L * 1.01;
  const int count = 4096;
  std::vector<double> vals(count);
  for (int j = 0; j < count; ++j) {
    const double r = r_max * j / (count - 1);
    const double z = (r - c) / w;
    vals[j] = std::exp(-z * z);
  }
  return RadialProfile::make(g.n, r_max, std::move(vals));
}

}  // namespace

std::vector<RadialProfile> make_radial_family(int size, std::uint64_t seed, const Grid& grid) {
  Rng rng(seed ^ 0x5261646961ULL);
  std::vector<RadialProfile> out;
  out.reserve(size);
  for (int i = 0; i < size; ++i) out.push_back(draw_radial_shell(rng, grid, i, size));
  return out;
}

std::vector<Field> make_family(FamilyKind kind, int size, std::uint64_t seed, const Grid& grid,
                               double cutoff) {
  if (size < 0) throw config_error("family: negative size");
  std::vector<Field> out;
  out.reserve(size);
  if (kind == FamilyKind::kRadialGaussians) {
    const auto profiles = make_radial_family(size, seed, grid);
    for (const auto& p : profiles) {
      Field u = lift(p, grid);
      if (boundary_max(u) > kBoundaryTol) {
        throw numeric_error("family: radial member fails boundary decay");
      }
      out.push_back(std::move(u));
    }
    return out;
  }

  Rng rng(seed);
  int budget = 100 * std::max(size, 1);
  for (int i = 0; i < size; ++i) {
    for (;;) {
      if (budget-- <= 0) throw numeric_error("family: rejection budget exceeded");
      Field u;
      switch (kind) {
        case FamilyKind::kGaussians: u = draw_gaussian(rng, grid); break;
        case FamilyKind::kBumps: u = draw_bump(rng, grid); break;
        case FamilyKind::kBandlimitedRandom: u = draw_bandlimited(rng, grid, cutoff); break;
        default: throw config_error("family: unreachable kind");
      }
      if (boundary_max(u) <= kBoundaryTol) {
        out.push_back(std::move(u));
        break;
      }
    }
  }
  return out;
}

}  // namespace orlicz
