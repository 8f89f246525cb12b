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

#include "orlicz/lpatoms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "orlicz/errors.hpp"
#include "orlicz/fft.hpp"
#include "orlicz/field_ops.hpp"

namespace orlicz {

double FilterBank::transition(double r) {
  r = std::abs(r);
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  const double t = 2.0 * (1.0 - r);  // in (0, 1)
  const double g0 = std::exp(-1.0 / t);
  const double g1 = std::exp(-1.0 / (1.0 - t));
  return g0 / (g0 + g1);
}

FilterBank build_filter_bank(int K, const Grid& grid) {
  if (K < 1) throw config_error("filter bank: K must be >= 1");
  const double nyquist = std::scalbn(1.0, K);  // finest band reaches |xi| = 2^K
  if (!(nyquist <= std::numbers::pi / grid.h())) {
    throw config_error("filter bank: 2^K exceeds the grid's resolvable frequency");
  }
  return FilterBank{K, grid};
}

namespace {

double norm2(std::span<const double> xi) {
  double s = 0.0;
  for (double x : xi) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::vector<Field> lp_pieces(const FilterBank& bank, const Field& u) {
  if (!(bank.grid == u.grid)) throw config_error("lp_pieces: grid mismatch");
  std::vector<Field> out;
  out.reserve(bank.K + 1);
  out.push_back(spectral_multiply(u, [&bank](std::span<const double> xi) {
    return bank.low_pass(norm2(xi));
  }));
  for (int k = 1; k <= bank.K; ++k) {
    out.push_back(spectral_multiply(u, [&bank, k](std::span<const double> xi) {
      return bank.band(k, norm2(xi));
    }));
  }
  return out;
}

double triebel_norm(const YoungFunction& A, double s, double q, const Field& u,
                    const FilterBank& bank) {
  if (!(q > 1.0)) throw config_error("triebel_norm: q must exceed 1");
  const auto pieces = lp_pieces(bank, u);
  Field agg(u.grid);
  for (int k = 1; k <= bank.K; ++k) {
    const double w = std::pow(2.0, s * k);
    for (std::size_t i = 0; i < agg.v.size(); ++i) {
      agg.v[i] += std::pow(w * std::abs(pieces[k].v[i]), q);
    }
  }
  for (auto& x : agg.v) x = std::pow(x, 1.0 / q);
  return luxemburg_norm(A, pieces[0]).value + luxemburg_norm(A, agg).value;
}

namespace {

// Normalized C0^inf bump on (0, 1) and its antiderivative table.
struct BumpTable {
  std::vector<double> B;  // B(j / M), j = 0..M
  int M = 8192;
  double norm = 0.0;

  BumpTable() {
    const auto raw = [](double t) {
      if (t <= 0.0 || t >= 1.0) return 0.0;
      return std::exp(-1.0 / (t * (1.0 - t)));
    };
    // composite Simpson cumulative
    B.assign(M + 1, 0.0);
    const double h = 1.0 / M;
    double acc = 0.0;
    for (int j = 0; j < M; ++j) {
      const double a = j * h;
      acc += h / 6.0 * (raw(a) + 4.0 * raw(a + 0.5 * h) + raw(a + h));
      B[j + 1] = acc;
    }
    norm = acc;
    for (auto& x : B) x /= norm;
  }

  // CDF of the normalized bump
  double cdf(double y) const {
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    const double p = y * M;
    const int j = std::min(static_cast<int>(p), M - 1);
    const double f = p - j;
    // Hermite segment with the bump itself as the derivative
    const double h = 1.0 / M;
    const double d0 = pdf(j * h), d1 = pdf((j + 1) * h);
    const double y0 = B[j], y1 = B[j + 1];
    const double f2 = f * f, f3 = f2 * f;
    return (2 * f3 - 3 * f2 + 1) * y0 + (f3 - 2 * f2 + f) * h * d0 +
           (-2 * f3 + 3 * f2) * y1 + (f3 - f2) * h * d1;
  }

  double pdf(double t) const {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return std::exp(-1.0 / (t * (1.0 - t))) / norm;
  }
};

const BumpTable& bump() {
  static const BumpTable table;
  return table;
}

struct CubeGeom {
  double side = 0.0;   // 2^{-i}
  int cells = 0;       // side / h
  int k_lo = 0;        // cube indices k_lo .. k_hi per axis
  int k_hi = 0;
};

CubeGeom cube_geometry(const Grid& g, int i) {
  CubeGeom geo;
  geo.side = std::scalbn(1.0, -i);
  const double cells = geo.side / g.h();
  geo.cells = static_cast<int>(std::llround(cells));
  if (geo.cells < 1 || std::abs(cells - geo.cells) > 1e-9) {
    throw resource_error("atoms: dyadic scale " + std::to_string(i) +
                         " below grid resolution");
  }
  const double klo = -g.L / geo.side;
  geo.k_lo = static_cast<int>(std::llround(klo));
  if (std::abs(klo - geo.k_lo) > 1e-9) {
    throw config_error("atoms: box extent incompatible with dyadic cubes");
  }
  geo.k_hi = -geo.k_lo - 1;
  return geo;
}

std::vector<std::array<int, 3>> multi_indices(int n, int m) {
  std::vector<std::array<int, 3>> out;
  for (int g0 = 0; g0 <= m; ++g0) {
    for (int g1 = 0; g1 <= (n > 1 ? m - g0 : 0); ++g1) {
      for (int g2 = 0; g2 <= (n > 2 ? m - g0 - g1 : 0); ++g2) {
        out.push_back({g0, g1, g2});
      }
    }
  }
  return out;
}

// max over the wrapped window of 2^{-i |gamma|} |D^gamma f| for all |gamma|
// <= m, derivatives spectral on the full grid.
double window_derivative_max(const Field& f, int scale_i, int m,
                             const std::array<int, 3>& start, const std::array<int, 3>& extent) {
  const Grid& g = f.grid;
  const auto gammas = multi_indices(g.n, m);
  std::vector<std::complex<double>> fhat(f.v.size());
  for (std::size_t i = 0; i < f.v.size(); ++i) fhat[i] = f.v[i];
  fft_nd(fhat, std::vector<int>(g.n, g.N), false);

  const auto window_max = [&](const Field& d) {
    double mx = 0.0;
    const auto wrap = [&](int j) { return ((j % g.N) + g.N) % g.N; };
    if (g.n == 1) {
      for (int a = 0; a < extent[0]; ++a) mx = std::max(mx, std::abs(d.v[wrap(start[0] + a)]));
    } else if (g.n == 2) {
      for (int a = 0; a < extent[0]; ++a) {
        for (int b = 0; b < extent[1]; ++b) {
          mx = std::max(mx, std::abs(d.v[d.flat(wrap(start[0] + a), wrap(start[1] + b))]));
        }
      }
    } else {
      for (int a = 0; a < extent[0]; ++a) {
        for (int b = 0; b < extent[1]; ++b) {
          for (int c = 0; c < extent[2]; ++c) {
            mx = std::max(mx, std::abs(d.v[d.flat(wrap(start[0] + a), wrap(start[1] + b),
                                                  wrap(start[2] + c))]));
          }
        }
      }
    }
    return mx;
  };

  double best = 0.0;
  for (const auto& gamma : gammas) {
    const int order = gamma[0] + gamma[1] + gamma[2];
    Field d(g);
    if (order == 0) {
      d = f;
    } else {
      auto buf = fhat;
      std::size_t idx = 0;
      double xi[3] = {0, 0, 0};
      const int N = g.N;
      const auto apply = [&](std::size_t i, std::span<const double> x) {
        std::complex<double> mult(1.0, 0.0);
        for (int dct = 0; dct < g.n; ++dct) {
          for (int rep = 0; rep < gamma[dct]; ++rep) mult *= std::complex<double>(0.0, x[dct]);
        }
        buf[i] *= mult;
      };
      if (g.n == 1) {
        for (int k = 0; k < N; ++k) {
          xi[0] = g.freq(k);
          apply(static_cast<std::size_t>(k), std::span<const double>(xi, 1));
        }
      } else if (g.n == 2) {
        for (int k0 = 0; k0 < N; ++k0) {
          xi[0] = g.freq(k0);
          for (int k1 = 0; k1 < N; ++k1, ++idx) {
            xi[1] = g.freq(k1);
            apply(idx, std::span<const double>(xi, 2));
          }
        }
      } else {
        for (int k0 = 0; k0 < N; ++k0) {
          xi[0] = g.freq(k0);
          for (int k1 = 0; k1 < N; ++k1) {
            xi[1] = g.freq(k1);
            for (int k2 = 0; k2 < N; ++k2, ++idx) {
              xi[2] = g.freq(k2);
              apply(idx, std::span<const double>(xi, 3));
            }
          }
        }
      }
      fft_nd(buf, std::vector<int>(g.n, g.N), true);
      for (std::size_t i = 0; i < d.v.size(); ++i) d.v[i] = buf[i].real();
    }
    best = std::max(best, std::scalbn(window_max(d), -scale_i * order));
  }
  return best;
}

}  // namespace

AtomicDecomposition atomic_decompose(const Field& u, double s, int m, const FilterBank& bank,
                                     int I_max) {
  if (!(s > 0.0)) throw std::domain_error("atomic_decompose: s must be positive");
  if (!(m > s)) throw std::domain_error("atomic_decompose: needs integer m > s");
  if (I_max > bank.K) throw config_error("atomic_decompose: I_max beyond bank resolution");
  const Grid& g = u.grid;

  const auto pieces = lp_pieces(bank, u);
  AtomicDecomposition dec;
  dec.grid = g;
  dec.s = s;
  dec.m = m;
  dec.I_max = I_max;
  dec.scales.resize(I_max + 1);

  // reconstruction defect of the truncated telescoping sum
  {
    Field recon(g);
    for (int i = 0; i <= I_max; ++i) {
      for (std::size_t j = 0; j < recon.v.size(); ++j) recon.v[j] += pieces[i].v[j];
    }
    dec.recon_defect = max_abs(subtracted(u, recon));
  }

  const auto& bt = bump();
  for (int i = 0; i <= I_max; ++i) {
    // u_i = 2^{is} (i-th piece), so u = sum 2^{-is} u_i
    Field ui = scaled(pieces[i], std::pow(2.0, s * i));
    const CubeGeom geo = cube_geometry(g, i);
    const double lam = geo.side;
    const double scale_pow = std::scalbn(1.0, i);  // 2^i

    std::vector<Atom> atoms;
    std::vector<double> bmass;  // L1 mass per candidate, for the drop report
    double smax = 0.0;

    const auto wrap = [&](int j) { return ((j % g.N) + g.N) % g.N; };
    const int cells = geo.cells;
    const int wext = 3 * cells;

    // enumerate cubes; n-dimensional loops flattened by hand
    const int K0 = geo.k_hi - geo.k_lo + 1;
    const int total_cubes = g.n == 1 ? K0 : (g.n == 2 ? K0 * K0 : K0 * K0 * K0);
    for (int cube = 0; cube < total_cubes; ++cube) {
      std::array<int, 3> k = {0, 0, 0};
      int rem = cube;
      for (int d = g.n - 1; d >= 0; --d) {
        k[d] = geo.k_lo + rem % K0;
        rem /= K0;
      }
      // window = triple cube, starting one cube before the anchor
      std::array<int, 3> start = {0, 0, 0};
      std::array<int, 3> extent = {1, 1, 1};
      for (int d = 0; d < g.n; ++d) {
        start[d] = static_cast<int>(std::llround(((k[d] - 1) * lam + g.L) / g.h()));
        extent[d] = wext;
      }

      // b_ik = eta_ik u_i on the window; eta factors from the bump CDF
      Field b(g);
      bool any = false;
      const auto eta_factor = [&](int d, int cell) {
        const double x = (k[d] - 1) * lam + (cell + 0.5) * g.h();
        const double y = scale_pow * (x - k[d] * lam);
        return bt.cdf(y) - bt.cdf(y - 1.0);
      };
      if (g.n == 1) {
        for (int a = 0; a < wext; ++a) {
          const double e = eta_factor(0, a);
          if (e == 0.0) continue;
          const std::size_t idx = wrap(start[0] + a);
          const double val = e * ui.v[idx];
          if (val != 0.0) any = true;
          b.v[idx] = val;
        }
      } else if (g.n == 2) {
        for (int a = 0; a < wext; ++a) {
          const double e0 = eta_factor(0, a);
          if (e0 == 0.0) continue;
          const int j0 = wrap(start[0] + a);
          for (int c = 0; c < wext; ++c) {
            const double e = e0 * eta_factor(1, c);
            if (e == 0.0) continue;
            const std::size_t idx = b.flat(j0, wrap(start[1] + c));
            const double val = e * ui.v[idx];
            if (val != 0.0) any = true;
            b.v[idx] = val;
          }
        }
      } else {
        for (int a = 0; a < wext; ++a) {
          const double e0 = eta_factor(0, a);
          if (e0 == 0.0) continue;
          const int j0 = wrap(start[0] + a);
          for (int c = 0; c < wext; ++c) {
            const double e1 = e0 * eta_factor(1, c);
            if (e1 == 0.0) continue;
            const int j1 = wrap(start[1] + c);
            for (int e2i = 0; e2i < wext; ++e2i) {
              const double e = e1 * eta_factor(2, e2i);
              if (e == 0.0) continue;
              const std::size_t idx = b.flat(j0, j1, wrap(start[2] + e2i));
              const double val = e * ui.v[idx];
              if (val != 0.0) any = true;
              b.v[idx] = val;
            }
          }
        }
      }
      if (!any) continue;

      const double sik = window_derivative_max(b, i, m, start, extent);
      if (!(sik > 0.0)) continue;
      Atom atom;
      atom.k = k;
      atom.coeff = sik;
      atom.window_start = start;
      atom.window_extent = {g.n > 0 ? wext : 1, g.n > 1 ? wext : 1, g.n > 2 ? wext : 1};
      atom.local.reserve(static_cast<std::size_t>(wext) * (g.n > 1 ? wext : 1) *
                         (g.n > 2 ? wext : 1));
      double mass = 0.0;
      if (g.n == 1) {
        for (int a = 0; a < wext; ++a) {
          const double val = b.v[wrap(start[0] + a)];
          atom.local.push_back(val / sik);
          mass += std::abs(val);
        }
      } else if (g.n == 2) {
        for (int a = 0; a < wext; ++a) {
          for (int c = 0; c < wext; ++c) {
            const double val = b.v[b.flat(wrap(start[0] + a), wrap(start[1] + c))];
            atom.local.push_back(val / sik);
            mass += std::abs(val);
          }
        }
      } else {
        for (int a = 0; a < wext; ++a) {
          for (int c = 0; c < wext; ++c) {
            for (int e = 0; e < wext; ++e) {
              const double val =
                  b.v[b.flat(wrap(start[0] + a), wrap(start[1] + c), wrap(start[2] + e))];
              atom.local.push_back(val / sik);
              mass += std::abs(val);
            }
          }
        }
      }
      atoms.push_back(std::move(atom));
      bmass.push_back(mass * std::pow(g.h(), g.n));
      smax = std::max(smax, sik);
    }

    // drop near-zero coefficients; their mass goes into the report
    std::vector<Atom> kept;
    kept.reserve(atoms.size());
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (atoms[a].coeff <= 1e-14 * smax) {
        dec.dropped_mass += bmass[a] * std::pow(2.0, -s * i);
      } else {
        kept.push_back(std::move(atoms[a]));
      }
    }
    dec.scales[i] = std::move(kept);
  }
  return dec;
}

AtomCheck atom_validate(const Field& a, int scale_i, const std::array<int, 3>& cube_k, int m) {
  const Grid& g = a.grid;
  const CubeGeom geo = cube_geometry(g, scale_i);
  const double lam = geo.side;
  std::array<int, 3> start = {0, 0, 0};
  std::array<int, 3> extent = {1, 1, 1};
  for (int d = 0; d < g.n; ++d) {
    start[d] = static_cast<int>(std::llround(((cube_k[d] - 1) * lam + g.L) / g.h()));
    extent[d] = 3 * geo.cells;
  }

  AtomCheck check;
  check.max_ratio = window_derivative_max(a, scale_i, m, start, extent);

  // support leak: anything more than one grid cell outside the triple cube
  const auto wrap = [&](int j) { return ((j % g.N) + g.N) % g.N; };
  std::vector<char> inside(a.v.size(), 0);
  const auto mark = [&](int j0, int j1, int j2) {
    if (g.n == 1) {
      inside[wrap(j0)] = 1;
    } else if (g.n == 2) {
      inside[a.flat(wrap(j0), wrap(j1))] = 1;
    } else {
      inside[a.flat(wrap(j0), wrap(j1), wrap(j2))] = 1;
    }
  };
  const int margin = 1;
  for (int j0 = start[0] - margin; j0 < start[0] + extent[0] + margin; ++j0) {
    if (g.n == 1) {
      mark(j0, 0, 0);
      continue;
    }
    for (int j1 = start[1] - margin; j1 < start[1] + extent[1] + margin; ++j1) {
      if (g.n == 2) {
        mark(j0, j1, 0);
        continue;
      }
      for (int j2 = start[2] - margin; j2 < start[2] + extent[2] + margin; ++j2) {
        mark(j0, j1, j2);
      }
    }
  }
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    if (!inside[i]) check.support_leak = std::max(check.support_leak, std::abs(a.v[i]));
  }
  check.valid = check.max_ratio <= 1.0 + 1e-6 && check.support_leak <= 1e-12 * max_abs(a);
  return check;
}

Field atom_field(const AtomicDecomposition& d, int scale_i, const Atom& atom) {
  Field f(d.grid);
  const Grid& g = d.grid;
  const auto wrap = [&](int j) { return ((j % g.N) + g.N) % g.N; };
  (void)scale_i;
  std::size_t idx = 0;
  if (g.n == 1) {
    for (int a = 0; a < atom.window_extent[0]; ++a) {
      f.v[wrap(atom.window_start[0] + a)] = atom.local[idx++];
    }
  } else if (g.n == 2) {
    for (int a = 0; a < atom.window_extent[0]; ++a) {
      for (int b = 0; b < atom.window_extent[1]; ++b) {
        f.v[f.flat(wrap(atom.window_start[0] + a), wrap(atom.window_start[1] + b))] =
            atom.local[idx++];
      }
    }
  } else {
    for (int a = 0; a < atom.window_extent[0]; ++a) {
      for (int b = 0; b < atom.window_extent[1]; ++b) {
        for (int c = 0; c < atom.window_extent[2]; ++c) {
          f.v[f.flat(wrap(atom.window_start[0] + a), wrap(atom.window_start[1] + b),
                     wrap(atom.window_start[2] + c))] = atom.local[idx++];
        }
      }
    }
  }
  return f;
}

Field coefficient_field(const AtomicDecomposition& d, int scale_i) {
  const Grid& g = d.grid;
  Field f(g);
  const CubeGeom geo = cube_geometry(g, scale_i);
  const auto wrap = [&](int j) { return ((j % g.N) + g.N) % g.N; };
  for (const Atom& atom : d.scales[scale_i]) {
    std::array<int, 3> cube_start = {0, 0, 0};
    for (int dd = 0; dd < g.n; ++dd) {
      cube_start[dd] =
          static_cast<int>(std::llround((atom.k[dd] * geo.side + g.L) / g.h()));
    }
    if (g.n == 1) {
      for (int a = 0; a < geo.cells; ++a) f.v[wrap(cube_start[0] + a)] = atom.coeff;
    } else if (g.n == 2) {
      for (int a = 0; a < geo.cells; ++a) {
        for (int b = 0; b < geo.cells; ++b) {
          f.v[f.flat(wrap(cube_start[0] + a), wrap(cube_start[1] + b))] = atom.coeff;
        }
      }
    } else {
      for (int a = 0; a < geo.cells; ++a) {
        for (int b = 0; b < geo.cells; ++b) {
          for (int c = 0; c < geo.cells; ++c) {
            f.v[f.flat(wrap(cube_start[0] + a), wrap(cube_start[1] + b),
                       wrap(cube_start[2] + c))] = atom.coeff;
          }
        }
      }
    }
  }
  return f;
}

double coefficient_norm(const AtomicDecomposition& d, const YoungFunction& A, double q) {
  if (!(q > 0.0)) throw config_error("coefficient_norm: q must be positive");
  Field agg(d.grid);
  bool empty = true;
  for (int i = 0; i <= d.I_max; ++i) {
    if (!d.scales[i].empty()) empty = false;
    const Field si = coefficient_field(d, i);
    for (std::size_t j = 0; j < agg.v.size(); ++j) agg.v[j] += std::pow(std::abs(si.v[j]), q);
  }
  if (empty) return 0.0;
  for (auto& x : agg.v) x = std::pow(x, 1.0 / q);
  return luxemburg_norm(A, agg).value;
}

Field reconstruct(const AtomicDecomposition& d) {
  const Grid& g = d.grid;
  Field out(g);
  const auto wrap = [&](int j) { return ((j % g.N) + g.N) % g.N; };
  for (int i = 0; i <= d.I_max; ++i) {
    const double w = std::pow(2.0, -d.s * i);
    for (const Atom& atom : d.scales[i]) {
      std::size_t idx = 0;
      const double c = w * atom.coeff;
      if (g.n == 1) {
        for (int a = 0; a < atom.window_extent[0]; ++a) {
          out.v[wrap(atom.window_start[0] + a)] += c * atom.local[idx++];
        }
      } else if (g.n == 2) {
        for (int a = 0; a < atom.window_extent[0]; ++a) {
          for (int b = 0; b < atom.window_extent[1]; ++b) {
            out.v[out.flat(wrap(atom.window_start[0] + a), wrap(atom.window_start[1] + b))] +=
                c * atom.local[idx++];
          }
        }
      } else {
        for (int a = 0; a < atom.window_extent[0]; ++a) {
          for (int b = 0; b < atom.window_extent[1]; ++b) {
            for (int cc = 0; cc < atom.window_extent[2]; ++cc) {
              out.v[out.flat(wrap(atom.window_start[0] + a), wrap(atom.window_start[1] + b),
                             wrap(atom.window_start[2] + cc))] += c * atom.local[idx++];
            }
          }
        }
      }
    }
  }
  return out;
}

void write_decomposition(const AtomicDecomposition& d, const std::string& dir,
                         bool include_atoms) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json j;
  j["s"] = d.s;
  j["m"] = d.m;
  j["I_max"] = d.I_max;
  j["grid"] = {{"n", d.grid.n}, {"N", d.grid.N}, {"L", d.grid.L}};
  j["dropped_mass"] = d.dropped_mass;
  j["recon_defect"] = d.recon_defect;
  auto scales = nlohmann::ordered_json::array();
  std::size_t atom_count = 0;
  for (int i = 0; i <= d.I_max; ++i) {
    nlohmann::ordered_json si;
    si["i"] = i;
    auto list = nlohmann::ordered_json::array();
    for (const Atom& a : d.scales[i]) {
      std::vector<int> k(a.k.begin(), a.k.begin() + d.grid.n);
      list.push_back({{"k", k}, {"coeff", a.coeff}});
      ++atom_count;
    }
    si["atoms"] = std::move(list);
    scales.push_back(std::move(si));
  }
  j["scales"] = std::move(scales);
  std::ofstream f(dir + "/decomposition.json");
  if (!f) throw std::runtime_error("write_decomposition: cannot open index in " + dir);
  f << j.dump(2) << "\n";

  if (include_atoms) {
    if (atom_count > 512) {
      throw resource_error("write_decomposition: refusing to export " +
                           std::to_string(atom_count) + " atom fields (> 512)");
    }
    for (int i = 0; i <= d.I_max; ++i) {
      for (const Atom& a : d.scales[i]) {
        std::string name = dir + "/atom_" + std::to_string(i);
        for (int dd = 0; dd < d.grid.n; ++dd) name += "_" + std::to_string(a.k[dd]);
        write_field(atom_field(d, i, a), name + ".bin");
      }
    }
  }
}

}  // namespace orlicz
