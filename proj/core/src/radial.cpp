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

#include "orlicz/radial.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "orlicz/bessel.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

RadialProfile RadialProfile::make(int n, double r_max, std::vector<double> values) {
  if (n < 1 || n > 3) throw config_error("radial profile: dimension must be 1, 2 or 3");
  if (!(r_max > 0.0) || values.size() < 2) {
    throw config_error("radial profile: need r_max > 0 and at least two samples");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw numeric_error("radial profile: non-finite sample");
  }
  return RadialProfile{n, r_max, std::move(values)};
}

double RadialProfile::operator()(double r) const {
  if (r < 0.0) r = -r;
  const double hr = r_max / (values.size() - 1);
  if (r > r_max) {
    throw std::range_error("radial profile: radius " + std::to_string(r) + " beyond r_max");
  }
  const double p = r / hr;
  const std::size_t j = std::min(static_cast<std::size_t>(p), values.size() - 2);
  const double f = p - j;
  return (1.0 - f) * values[j] + f * values[j + 1];
}

Field lift(const RadialProfile& p, const Grid& grid) {
  if (grid.n != p.n) throw config_error("lift: profile and grid dimensions differ");
  if (!(p.r_max >= std::sqrt(static_cast<double>(grid.n)) * grid.L)) {
    throw config_error("lift: profile must cover radius sqrt(n) L");
  }
  Field u(grid);
  if (grid.n == 1) {
    for (int j = 0; j < grid.N; ++j) u.v[j] = p(std::abs(grid.coord(j)));
  } else if (grid.n == 2) {
    for (int j0 = 0; j0 < grid.N; ++j0) {
      const double x0 = grid.coord(j0);
      for (int j1 = 0; j1 < grid.N; ++j1) {
        const double x1 = grid.coord(j1);
        u.v[u.flat(j0, j1)] = p(std::hypot(x0, x1));
      }
    }
  } else {
    for (int j0 = 0; j0 < grid.N; ++j0) {
      const double x0 = grid.coord(j0);
      for (int j1 = 0; j1 < grid.N; ++j1) {
        const double x1 = grid.coord(j1);
        for (int j2 = 0; j2 < grid.N; ++j2) {
          const double x2 = grid.coord(j2);
          u.v[u.flat(j0, j1, j2)] = p(std::sqrt(x0 * x0 + x1 * x1 + x2 * x2));
        }
      }
    }
  }
  return u;
}

double ball_convolution(const RadialProfile& f, double R, double rho) {
  if (!(R > 0.0)) throw std::domain_error("ball_convolution: R must be positive");
  rho = std::abs(rho);
  const int n = f.n;
  const int quad_points = 4000;

  if (n == 1) {
    // direct integral of f0(|r|) over [rho - R, rho + R]
    const double a = rho - R, b = rho + R;
    const double dq = (b - a) / quad_points;
    double s = 0.0;
    for (int j = 0; j < quad_points; ++j) {
      const double r = a + (j + 0.5) * dq;
      const double ar = std::abs(r);
      s += ar <= f.r_max ? f(ar) : 0.0;
    }
    return s * dq;
  }

  const double surface = n == 2 ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi;  // |S^{n-1}|
  if (rho < 1e-12) {
    // at the center the cap is the full sphere
    const double dq = R / quad_points;
    double s = 0.0;
    for (int j = 0; j < quad_points; ++j) {
      const double r = (j + 0.5) * dq;
      if (r > f.r_max) break;
      s += f(r) * std::pow(r, n - 1);
    }
    return s * dq * surface;
  }

  // shell integral with the cap-section factor; t0 from the law of cosines
  const double a = std::max(0.0, rho - R), b = rho + R;
  const double dq = (b - a) / quad_points;
  double s = 0.0;
  for (int j = 0; j < quad_points; ++j) {
    const double r = a + (j + 0.5) * dq;
    if (r <= 0.0 || r > f.r_max) continue;
    double t0 = (r * r + rho * rho - R * R) / (2.0 * r * rho);
    t0 = std::clamp(t0, -1.0, 1.0);
    double cap;
    if (n == 2) {
      cap = 2.0 * std::acos(t0);  // |S^0| int_{t0}^1 (1-t^2)^{-1/2} dt
    } else {
      cap = 2.0 * std::numbers::pi * (1.0 - t0);  // |S^1| int_{t0}^1 dt
    }
    s += f(r) * cap * std::pow(r, n - 1);
  }
  return s * dq;
}

StraussProfile strauss_ratio(const YoungFunction& A, double s, const Field& u_radial) {
  const Grid& g = u_radial.grid;
  if (g.n < 2) throw config_error("strauss_ratio: requires n >= 2");
  const GrowthIndices idx = A.delta2_indices();
  const YoungFunction conj = A.conjugate();

  StraussProfile prof;
  prof.hypothesis_ok = s * idx.p_minus > 1.0;
  prof.hs_norm_value = hs_norm(A, s, u_radial).value;

  const double h = g.h();
  const int o = g.origin_index();
  for (int m = 2; m <= g.N / 2; ++m) {
    const double rho = m * h;
    if (rho > g.L / 2.0) break;
    double uval;
    if (g.n == 2) {
      uval = u_radial.v[u_radial.flat(o + m, o)];
    } else {
      uval = u_radial.v[u_radial.flat(o + m, o, o)];
    }
    const double decay = std::pow(rho, 1.0 - g.n);
    const double bound = decay / conj.inverse(decay) * prof.hs_norm_value;
    const double ratio = bound > 0.0 ? std::abs(uval) / bound : 0.0;
    prof.rho.push_back(rho);
    prof.u_abs.push_back(std::abs(uval));
    prof.bound.push_back(bound);
    prof.ratio.push_back(ratio);
    prof.sup_ratio = std::max(prof.sup_ratio, ratio);
  }
  return prof;
}

void write_strauss_csv(const StraussProfile& p, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_strauss_csv: cannot open " + path);
  f << "rho,u_abs,bound,ratio\n";
  char buf[128];
  for (std::size_t i = 0; i < p.rho.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", p.rho[i], p.u_abs[i],
                  p.bound[i], p.ratio[i]);
    f << buf;
  }
}

}  // namespace orlicz
