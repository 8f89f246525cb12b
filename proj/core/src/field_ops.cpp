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

#include "orlicz/field_ops.hpp"

#include <cmath>
#include <cstdlib>

#include "orlicz/errors.hpp"
#include "orlicz/fft.hpp"

namespace orlicz {

namespace {

std::vector<int> grid_shape(const Grid& g) { return std::vector<int>(g.n, g.N); }

std::vector<std::complex<double>> to_complex(const Field& u) {
  std::vector<std::complex<double>> a(u.v.size());
  for (std::size_t i = 0; i < u.v.size(); ++i) a[i] = u.v[i];
  return a;
}

Field real_part(const Grid& g, const std::vector<std::complex<double>>& a) {
  Field f(g);
  for (std::size_t i = 0; i < a.size(); ++i) f.v[i] = a[i].real();
  return f;
}

// Walk the flat frequency lattice, handing (flat index, xi vector, parity).
template <typename F>
void for_each_frequency(const Grid& g, F&& fn) {
  double xi[3] = {0, 0, 0};
  if (g.n == 1) {
    for (int k = 0; k < g.N; ++k) {
      xi[0] = g.freq(k);
      fn(static_cast<std::size_t>(k), std::span<const double>(xi, 1),
         (g.signed_index(k) & 1) != 0);
    }
    return;
  }
  if (g.n == 2) {
    std::size_t idx = 0;
    for (int k0 = 0; k0 < g.N; ++k0) {
      xi[0] = g.freq(k0);
      const bool p0 = (g.signed_index(k0) & 1) != 0;
      for (int k1 = 0; k1 < g.N; ++k1, ++idx) {
        xi[1] = g.freq(k1);
        fn(idx, std::span<const double>(xi, 2), p0 != ((g.signed_index(k1) & 1) != 0));
      }
    }
    return;
  }
  std::size_t idx = 0;
  for (int k0 = 0; k0 < g.N; ++k0) {
    xi[0] = g.freq(k0);
    const bool p0 = (g.signed_index(k0) & 1) != 0;
    for (int k1 = 0; k1 < g.N; ++k1) {
      xi[1] = g.freq(k1);
      const bool p1 = p0 != ((g.signed_index(k1) & 1) != 0);
      for (int k2 = 0; k2 < g.N; ++k2, ++idx) {
        xi[2] = g.freq(k2);
        fn(idx, std::span<const double>(xi, 3), p1 != ((g.signed_index(k2) & 1) != 0));
      }
    }
  }
}

void require_same_grid(const Field& u, const Field& v, const char* op) {
  if (!(u.grid == v.grid)) throw config_error(std::string(op) + ": grid mismatch");
}

}  // namespace

double integrate(const Field& u) {
  double s = 0.0;
  for (double x : u.v) s += x;
  return s * std::pow(u.grid.h(), u.grid.n);
}

double parseval_energy(const Field& u) {
  auto a = to_complex(u);
  fft_nd(a, grid_shape(u.grid), false);
  double s = 0.0;
  for (const auto& z : a) s += std::norm(z);
  return s * std::pow(u.grid.h(), u.grid.n) / static_cast<double>(u.grid.size());
}

Field convolve(const Field& u, const Field& v) {
  require_same_grid(u, v, "convolve");
  auto a = to_complex(u);
  auto b = to_complex(v);
  const auto shape = grid_shape(u.grid);
  fft_nd(a, shape, false);
  fft_nd(b, shape, false);
  const double hn = std::pow(u.grid.h(), u.grid.n);
  // centered convolution: the origin sits at index N/2, hence the parity twist
  for_each_frequency(u.grid, [&](std::size_t i, std::span<const double>, bool odd) {
    a[i] *= b[i] * (odd ? -hn : hn);
  });
  fft_nd(a, shape, true);
  return real_part(u.grid, a);
}

Field apply_multiplier(const Field& u, const ComplexSymbol& symbol) {
  auto a = to_complex(u);
  const auto shape = grid_shape(u.grid);
  fft_nd(a, shape, false);
  bool bad = false;
  for_each_frequency(u.grid, [&](std::size_t i, std::span<const double> xi, bool) {
    const std::complex<double> s = symbol(xi);
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) bad = true;
    a[i] *= s;
  });
  if (bad) throw numeric_error("spectral multiply: symbol not finite on the frequency grid");
  fft_nd(a, shape, true);
  return real_part(u.grid, a);
}

Field spectral_multiply(const Field& u, const RealSymbol& symbol) {
  return apply_multiplier(
      u, [&symbol](std::span<const double> xi) { return std::complex<double>(symbol(xi), 0.0); });
}

Field derivative(const Field& u, int axis) {
  if (axis < 0 || axis >= u.grid.n) throw config_error("derivative: axis out of range");
  return apply_multiplier(u, [axis](std::span<const double> xi) {
    return std::complex<double>(0.0, xi[axis]);
  });
}

std::vector<Field> gradient(const Field& u) {
  std::vector<Field> g;
  g.reserve(u.grid.n);
  for (int d = 0; d < u.grid.n; ++d) g.push_back(derivative(u, d));
  return g;
}

Field gradient_magnitude(const Field& u) {
  const auto g = gradient(u);
  Field m(u.grid);
  for (std::size_t i = 0; i < m.v.size(); ++i) {
    double s = 0.0;
    for (const auto& gd : g) s += gd.v[i] * gd.v[i];
    m.v[i] = std::sqrt(s);
  }
  return m;
}

Field shift(const Field& u, std::span<const double> delta) {
  if (static_cast<int>(delta.size()) != u.grid.n) throw config_error("shift: bad delta size");
  return apply_multiplier(u, [&delta](std::span<const double> xi) {
    double phase = 0.0;
    for (std::size_t d = 0; d < delta.size(); ++d) phase += xi[d] * delta[d];
    return std::polar(1.0, phase);
  });
}

Field roll(const Field& u, std::span<const int> cells) {
  if (static_cast<int>(cells.size()) != u.grid.n) throw config_error("roll: bad cells size");
  const int N = u.grid.N;
  const auto wrap = [N](int i) {
    int r = i % N;
    return r < 0 ? r + N : r;
  };
  Field out(u.grid);
  if (u.grid.n == 1) {
    for (int j = 0; j < N; ++j) out.v[j] = u.v[wrap(j + cells[0])];
  } else if (u.grid.n == 2) {
    for (int j0 = 0; j0 < N; ++j0) {
      const int s0 = wrap(j0 + cells[0]);
      for (int j1 = 0; j1 < N; ++j1) {
        out.v[out.flat(j0, j1)] = u.v[u.flat(s0, wrap(j1 + cells[1]))];
      }
    }
  } else {
    for (int j0 = 0; j0 < N; ++j0) {
      const int s0 = wrap(j0 + cells[0]);
      for (int j1 = 0; j1 < N; ++j1) {
        const int s1 = wrap(j1 + cells[1]);
        for (int j2 = 0; j2 < N; ++j2) {
          out.v[out.flat(j0, j1, j2)] = u.v[u.flat(s0, s1, wrap(j2 + cells[2]))];
        }
      }
    }
  }
  return out;
}

Field maximal_function(const Field& u) {
  const Grid& g = u.grid;
  Field best = abs_field(u);  // j = 0: the singleton ball
  const Field au = best;

  int levels = 0;
  while ((1 << (levels + 1)) <= g.N / 2) ++levels;

  auto a = to_complex(au);
  const auto shape = grid_shape(g);
  fft_nd(a, shape, false);

  for (int j = 1; j <= levels; ++j) {
    const int r = 1 << j;  // open ball of radius r cells
    Field ball(g);
    std::size_t count = 0;
    const auto inside = [&](int d0, int d1, int d2) {
      return d0 * d0 + d1 * d1 + d2 * d2 < r * r;
    };
    const int half = g.N / 2;
    if (g.n == 1) {
      for (int d = -r + 1; d <= r - 1; ++d) {
        ball.v[(d + half + g.N) % g.N] = 1.0;
        ++count;
      }
    } else if (g.n == 2) {
      for (int d0 = -r + 1; d0 <= r - 1; ++d0) {
        for (int d1 = -r + 1; d1 <= r - 1; ++d1) {
          if (!inside(d0, d1, 0)) continue;
          ball.v[ball.flat((d0 + half + g.N) % g.N, (d1 + half + g.N) % g.N)] = 1.0;
          ++count;
        }
      }
    } else {
      for (int d0 = -r + 1; d0 <= r - 1; ++d0) {
        for (int d1 = -r + 1; d1 <= r - 1; ++d1) {
          for (int d2 = -r + 1; d2 <= r - 1; ++d2) {
            if (!inside(d0, d1, d2)) continue;
            ball.v[ball.flat((d0 + half + g.N) % g.N, (d1 + half + g.N) % g.N,
                             (d2 + half + g.N) % g.N)] = 1.0;
            ++count;
          }
        }
      }
    }
    auto b = to_complex(ball);
    fft_nd(b, shape, false);
    const double inv = 1.0 / static_cast<double>(count);
    std::vector<std::complex<double>> prod(a.size());
    for_each_frequency(g, [&](std::size_t i, std::span<const double>, bool odd) {
      prod[i] = a[i] * b[i] * (odd ? -inv : inv);
    });
    fft_nd(prod, shape, true);
    for (std::size_t i = 0; i < best.v.size(); ++i) {
      best.v[i] = std::max(best.v[i], prod[i].real());
    }
  }
  return best;
}

double product_weighted_pair(const ProductField& v,
                             const std::function<double(double, double, double)>& kernel,
                             const Field& w) {
  if (v.grid_x.n != 1 || w.grid.n != 1) {
    throw resource_error("product_weighted_pair: restricted to n = 1");
  }
  if (v.grid_x.N > 128 || v.grid_t.N > 128 || w.grid.N > 128) {
    throw resource_error("product_weighted_pair: cost guard N <= 128 exceeded");
  }
  const Grid& gx = v.grid_x;
  const Grid& gt = v.grid_t;
  const Grid& gz = w.grid;
  double total = 0.0;
  for (int it = 0; it < gt.N; ++it) {
    const double t = gt.coord(it);
    if (t == 0.0) continue;  // the t = 0 cell is excluded from the measure
    const double wt = 1.0 / std::abs(t);
    double inner = 0.0;
    for (int iz = 0; iz < gz.N; ++iz) {
      const double z = gz.coord(iz);
      if (w.v[iz] == 0.0) continue;
      double row = 0.0;
      for (int ix = 0; ix < gx.N; ++ix) {
        row += std::abs(kernel(z, gx.coord(ix), t) * v.at(it, ix));
      }
      inner += row * std::abs(w.v[iz]);
    }
    total += inner * wt;
  }
  return total * gx.h() * gt.h() * gz.h();
}

Field abs_field(const Field& u) {
  Field r(u.grid);
  for (std::size_t i = 0; i < u.v.size(); ++i) r.v[i] = std::abs(u.v[i]);
  return r;
}

Field scaled(const Field& u, double c) {
  Field r(u.grid);
  for (std::size_t i = 0; i < u.v.size(); ++i) r.v[i] = c * u.v[i];
  return r;
}

Field added(const Field& u, const Field& v) {
  require_same_grid(u, v, "add");
  Field r(u.grid);
  for (std::size_t i = 0; i < u.v.size(); ++i) r.v[i] = u.v[i] + v.v[i];
  return r;
}

Field subtracted(const Field& u, const Field& v) {
  require_same_grid(u, v, "subtract");
  Field r(u.grid);
  for (std::size_t i = 0; i < u.v.size(); ++i) r.v[i] = u.v[i] - v.v[i];
  return r;
}

double max_abs(const Field& u) {
  double m = 0.0;
  for (double x : u.v) m = std::max(m, std::abs(x));
  return m;
}

double rel_l2_error(const Field& got, const Field& want) {
  require_same_grid(got, want, "rel_l2_error");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < got.v.size(); ++i) {
    const double d = got.v[i] - want.v[i];
    num += d * d;
    den += want.v[i] * want.v[i];
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

}  // namespace orlicz
