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

#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fritsch-Carlson monotone cubic interpolant on strictly increasing data.
struct Pchip {
  std::vector<double> x, y, d;  // nodes, values, node derivatives

  void build() {
    const std::size_t n = x.size();
    d.assign(n, 0.0);
    if (n < 2) return;
    std::vector<double> h(n - 1), s(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = x[i + 1] - x[i];
      s[i] = (y[i + 1] - y[i]) / h[i];
    }
    d[0] = s[0];
    d[n - 1] = s[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (s[i - 1] * s[i] <= 0.0) {
        d[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        d[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
      }
    }
  }

  std::size_t segment(double q) const {
    auto it = std::upper_bound(x.begin(), x.end(), q);
    std::size_t i = static_cast<std::size_t>(it - x.begin());
    if (i == 0) return 0;
    if (i >= x.size()) return x.size() - 2;
    return i - 1;
  }

  double value(double q) const {
    const std::size_t i = segment(q);
    const double h = x[i + 1] - x[i];
    const double t = (q - x[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y[i] + h10 * h * d[i] + h01 * y[i + 1] + h11 * h * d[i + 1];
  }

  double derivative(double q) const {
    const std::size_t i = segment(q);
    const double h = x[i + 1] - x[i];
    const double t = (q - x[i]) / h;
    const double t2 = t * t;
    const double h00 = 6 * t2 - 6 * t;
    const double h10 = 3 * t2 - 4 * t + 1;
    const double h01 = -6 * t2 + 6 * t;
    const double h11 = 3 * t2 - 2 * t;
    return (h00 * y[i] + h01 * y[i + 1]) / h + h10 * d[i] + h11 * d[i + 1];
  }
};

double require_nonneg(double t, const char* op) {
  if (!(t >= 0.0)) {
    throw std::domain_error(std::string(op) + ": argument must be nonnegative");
  }
  return t;
}

}  // namespace

struct YoungFunction::Impl {
  YoungKind kind = YoungKind::kPower;
  std::string name;
  double p = 2.0, q = 0.0, r = 0.0;  // family parameters; meaning per kind

  // log-log interpolant for kTabulated and kPowerLogIntegral
  Pchip interp;           // x = log t, y = log A
  double t_min = 0.0, t_max = kInf;
  bool throw_above_range = false;  // user tables error above range

  double eval(double t) const;
  double density(double t) const;

  double interp_eval(double t) const {
    if (t == 0.0) return 0.0;
    const double lt = std::log(t);
    if (lt < interp.x.front()) {
      // power-law continuation toward zero with the first segment's slope
      const double slope = std::max(interp.d.front(), 1.0);
      return std::exp(interp.y.front() + slope * (lt - interp.x.front()));
    }
    if (lt > interp.x.back()) {
      if (throw_above_range) {
        throw std::range_error("young: tabulated evaluation above table range, t = " +
                               std::to_string(t));
      }
      const double slope = std::max(interp.d.back(), 1.0);
      return std::exp(interp.y.back() + slope * (lt - interp.x.back()));
    }
    return std::exp(interp.value(lt));
  }

  double interp_density(double t) const {
    if (t == 0.0) return 0.0;
    const double lt = std::log(t);
    double slope;
    if (lt < interp.x.front()) {
      slope = std::max(interp.d.front(), 1.0);
    } else if (lt > interp.x.back()) {
      if (throw_above_range) {
        throw std::range_error("young: tabulated density above table range, t = " +
                               std::to_string(t));
      }
      slope = std::max(interp.d.back(), 1.0);
    } else {
      slope = interp.derivative(lt);
    }
    return interp_eval(t) * slope / t;  // a = A * dlogA/dlogt / t
  }
};

double YoungFunction::Impl::eval(double t) const {
  switch (kind) {
    case YoungKind::kPower:
      return std::pow(t, p);
    case YoungKind::kPowerSum:
      return std::pow(t, p) + std::pow(t, q);
    case YoungKind::kZygmund:
      return std::pow(t, p) * std::pow(std::log1p(std::pow(t, r)), q);
    case YoungKind::kIterLog: {
      const double l1 = std::log1p(t);
      const double l2 = std::log1p(l1);
      if (t == 0.0) return 0.0;
      return std::pow(t, p) * std::pow(l1, q) * std::pow(l2, r);
    }
    case YoungKind::kPowerLogIntegral:
    case YoungKind::kTabulated:
      return interp_eval(t);
  }
  return 0.0;
}

double YoungFunction::Impl::density(double t) const {
  switch (kind) {
    case YoungKind::kPower:
      return p * std::pow(t, p - 1.0);
    case YoungKind::kPowerSum:
      return p * std::pow(t, p - 1.0) + q * std::pow(t, q - 1.0);
    case YoungKind::kZygmund: {
      if (t == 0.0) return 0.0;
      const double tr = std::pow(t, r);
      const double l = std::log1p(tr);
      // d/dt [t^p log^q(1+t^r)]
      return p * std::pow(t, p - 1.0) * std::pow(l, q) +
             std::pow(t, p) * q * std::pow(l, q - 1.0) * r * std::pow(t, r - 1.0) / (1.0 + tr);
    }
    case YoungKind::kIterLog: {
      if (t == 0.0) return 0.0;
      const double l1 = std::log1p(t);
      const double l2 = std::log1p(l1);
      const double a = q, b = r;
      return std::pow(t, p - 1.0) * std::pow(l1, a - 1.0) * std::pow(l2, b - 1.0) *
             (p * l1 * l2 + a * t * l2 / (1.0 + t) + b * t * l1 / ((1.0 + t) * (1.0 + l1)));
    }
    case YoungKind::kPowerLogIntegral:
      // density is the defining integrand
      return std::pow(t, p - 1.0) * std::pow(std::log1p(t), q);
    case YoungKind::kTabulated:
      return interp_density(t);
  }
  return 0.0;
}

YoungFunction::YoungFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

YoungKind YoungFunction::kind() const { return impl_->kind; }
const std::string& YoungFunction::name() const { return impl_->name; }
double YoungFunction::domain_min() const { return impl_->t_min; }
double YoungFunction::domain_max() const { return impl_->t_max; }

namespace {

// Construction-time sanity: increasing, superlinear at both ends.
void validate(const YoungFunction::Impl& f) {
  const double lo = std::max(f.t_min, 1e-8);
  const double hi = std::min(f.t_max, 1e8);
  const double a_lo = f.eval(lo) / lo;
  const double a_hi = f.eval(hi) / hi;
  if (!(a_lo < a_hi) || !std::isfinite(a_hi)) {
    throw std::domain_error("young: function is not superlinear on [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (!(f.eval(lo) > 0.0)) {
    throw std::domain_error("young: function must be positive for t > 0");
  }
}

}  // namespace

YoungFunction YoungFunction::power(double p) {
  if (!(p > 1.0)) throw std::domain_error("young: power requires p > 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = YoungKind::kPower;
  impl->p = p;
  std::ostringstream os;
  os << "power:p=" << p;
  impl->name = os.str();
  validate(*impl);
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::power_sum(double p, double q) {
  if (!(p > 1.0) || !(q >= p)) throw std::domain_error("young: powersum requires 1 < p <= q");
  auto impl = std::make_shared<Impl>();
  impl->kind = YoungKind::kPowerSum;
  impl->p = p;
  impl->q = q;
  std::ostringstream os;
  os << "powersum:p=" << p << ",q=" << q;
  impl->name = os.str();
  validate(*impl);
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::zygmund(double p, double q, double r) {
  if (!(p > 1.0) || !(q >= 0.0) || !(r > 0.0)) {
    throw std::domain_error("young: zygmund requires p > 1, q >= 0, r > 0");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = YoungKind::kZygmund;
  impl->p = p;
  impl->q = q;
  impl->r = r;
  std::ostringstream os;
  os << "zygmund:p=" << p << ",q=" << q << ",r=" << r;
  impl->name = os.str();
  validate(*impl);
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::iter_log(double p, double a, double b) {
  if (!(p > 1.0)) throw std::domain_error("young: iterlog requires p > 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = YoungKind::kIterLog;
  impl->p = p;
  impl->q = a;
  impl->r = b;
  std::ostringstream os;
  os << "iterlog:p=" << p << ",a=" << a << ",b=" << b;
  impl->name = os.str();
  validate(*impl);
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::power_log_integral(double p, double a) {
  if (!(p > 1.0)) throw std::domain_error("young: plogint requires p > 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = YoungKind::kPowerLogIntegral;
  impl->p = p;
  impl->q = a;
  std::ostringstream os;
  os << "plogint:p=" << p << ",a=" << a;
  impl->name = os.str();

  // Cumulative integral of tau^{p-1} log^a(1+tau) on a log grid, stored as a
  // log-log interpolant. 16-point Gauss-Legendre per segment.
  static const double gl_x[8] = {0.0950125098376374, 0.2816035507792589,
                                 0.4580167776572274, 0.6178762444026438,
                                 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
  static const double gl_w[8] = {0.1894506104550685, 0.1826034150449236,
                                 0.1691565193950025, 0.1495959888165767,
                                 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
  const auto integrand = [&](double tau) {
    return std::pow(tau, p - 1.0) * std::pow(std::log1p(tau), a);
  };
  const int per_decade = 700;
  const double lo = 1e-12, hi = 1e12;
  const int segs = static_cast<int>(per_decade * std::log10(hi / lo));
  std::vector<double> lt, lA;
  lt.reserve(segs + 1);
  lA.reserve(segs + 1);
  // Analytic head: near zero log(1+tau) ~ tau, integrand ~ tau^{p-1+a}.
  double acc = std::pow(lo, p + a) / (p + a);
  if (!std::isfinite(acc)) acc = 0.0;
  lt.push_back(std::log(lo));
  lA.push_back(std::log(std::max(acc, 1e-300)));
  const double step = std::log(hi / lo) / segs;
  double left = lo;
  for (int sidx = 0; sidx < segs; ++sidx) {
    const double right = lo * std::exp(step * (sidx + 1));
    const double c = 0.5 * (left + right), hw = 0.5 * (right - left);
    double sum = 0.0;
    for (int g = 0; g < 8; ++g) {
      sum += gl_w[g] * (integrand(c - hw * gl_x[g]) + integrand(c + hw * gl_x[g]));
    }
    acc += hw * sum;
    lt.push_back(std::log(right));
    lA.push_back(std::log(acc));
    left = right;
  }
  impl->interp.x = std::move(lt);
  impl->interp.y = std::move(lA);
  impl->interp.build();
  impl->t_min = 0.0;  // extended toward 0 by the power-law continuation
  impl->t_max = hi;
  impl->throw_above_range = true;
  validate(*impl);
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::tabulated(std::vector<double> t, std::vector<double> a_of_t,
                                       std::string name) {
  if (t.size() != a_of_t.size() || t.size() < 4) {
    throw std::domain_error("young: table needs >= 4 matching samples");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = YoungKind::kTabulated;
  impl->name = std::move(name);
  impl->interp.x.reserve(t.size());
  impl->interp.y.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(a_of_t[i] > 0.0)) {
      throw std::domain_error("young: table entries must be positive");
    }
    if (i > 0 && (t[i] <= t[i - 1] || a_of_t[i] <= a_of_t[i - 1])) {
      throw std::domain_error("young: table must be strictly increasing");
    }
    impl->interp.x.push_back(std::log(t[i]));
    impl->interp.y.push_back(std::log(a_of_t[i]));
  }
  impl->interp.build();
  impl->t_min = t.front();
  impl->t_max = t.back();
  impl->throw_above_range = true;
  validate(*impl);
  return YoungFunction(std::move(impl));
}

double YoungFunction::operator()(double t) const {
  require_nonneg(t, "young eval");
  if (t == 0.0) return 0.0;
  const double v = impl_->eval(t);
  if (!std::isfinite(v)) {
    throw numeric_error("young: A(t) overflowed at t = " + std::to_string(t));
  }
  return v;
}

double YoungFunction::density(double t) const {
  require_nonneg(t, "young density");
  if (t == 0.0) return 0.0;
  const double v = impl_->density(t);
  if (!std::isfinite(v)) {
    throw numeric_error("young: a(t) overflowed at t = " + std::to_string(t));
  }
  return v;
}

double YoungFunction::inverse(double y) const {
  if (!(y >= 0.0)) throw std::domain_error("young inverse: negative argument");
  if (y == 0.0) return 0.0;
  // Bracket [lo, hi] with A(lo) < y <= A(hi).
  double hi = 1.0;
  int guard = 0;
  while (impl_->eval(hi) < y) {
    hi *= 2.0;
    if (++guard > 2000) throw numeric_error("young inverse: bracket expansion failed");
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (impl_->eval(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// Concave objective w -> t w - A(w); ternary search over log w.
struct ConjugateSearch {
  const YoungFunction::Impl* f;
  double w_lo, w_hi;  // current bracket, extended on demand
  double w_cap_hi, w_cap_lo;

  double objective(double lw, double t) const { return t * std::exp(lw) - f->eval(std::exp(lw)); }

  // Returns sup_{w>0} (t w - A(w)); throws range_error if the max presses
  // against an unreachable boundary.
  double sup(double t) {
    for (;;) {
      double a = std::log(w_lo), b = std::log(w_hi);
      for (int it = 0; it < 160; ++it) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        if (objective(m1, t) < objective(m2, t)) {
          a = m1;
        } else {
          b = m2;
        }
      }
      const double lw = 0.5 * (a + b);
      const double edge = std::log(1.01);  // within 1% of the bracket edge
      if (lw > std::log(w_hi) - edge) {
        if (w_hi >= w_cap_hi) {
          throw std::range_error("young conjugate: sup not attained within grid range at t = " +
                                 std::to_string(t));
        }
        w_hi = std::min(w_hi * 1e4, w_cap_hi);
        continue;
      }
      if (lw < std::log(w_lo) + edge) {
        if (w_lo <= w_cap_lo) {
          // Pressed against zero: sup over w -> 0+ clips at 0.
          return std::max(objective(lw, t), 0.0);
        }
        w_lo = std::max(w_lo * 1e-4, w_cap_lo);
        continue;
      }
      return std::max(objective(lw, t), 0.0);
    }
  }
};

}  // namespace

YoungFunction YoungFunction::conjugate() const {
  const int kTablePoints = 4096;
  double t_lo = 1e-8, t_hi = 1e8;

  ConjugateSearch search;
  search.f = impl_.get();
  if (impl_->kind == YoungKind::kTabulated || impl_->kind == YoungKind::kPowerLogIntegral) {
    // Search only where the input is defined; shrink the output range so the
    // sup stays attainable: sup at t needs a(w*) = t with w* in the table.
    search.w_cap_lo = std::max(impl_->t_min, 1e-300);
    search.w_cap_hi = impl_->t_max;
    const double slope_hi = 0.98 * impl_->density(impl_->t_max * 0.999);
    const double slope_lo = 1.02 * impl_->density(std::max(impl_->t_min * 1.001, 1e-299));
    t_hi = std::min(t_hi, slope_hi);
    t_lo = std::max(t_lo, slope_lo);
    if (!(t_hi > t_lo)) {
      throw std::range_error("young conjugate: table range too small to conjugate");
    }
  } else {
    search.w_cap_lo = 1e-300;
    search.w_cap_hi = 1e30;
  }
  search.w_lo = std::max(1e-12, search.w_cap_lo);
  search.w_hi = std::min(1e12, search.w_cap_hi);

  std::vector<double> ts(kTablePoints), vals(kTablePoints);
  const double lstep = std::log(t_hi / t_lo) / (kTablePoints - 1);
  for (int i = 0; i < kTablePoints; ++i) {
    ts[i] = t_lo * std::exp(lstep * i);
    vals[i] = search.sup(ts[i]);
  }
  // Guard against flat or zero entries at the bottom (deep-underflow sups):
  // trim until strictly increasing and positive.
  std::size_t start = 0;
  while (start + 4 < ts.size() && !(vals[start] > 0.0 && vals[start + 1] > vals[start])) ++start;
  std::vector<double> tt(ts.begin() + start, ts.end());
  std::vector<double> vv(vals.begin() + start, vals.end());
  for (std::size_t i = 1; i < vv.size(); ++i) {
    if (vv[i] <= vv[i - 1]) {
      throw numeric_error("young conjugate: non-monotone table (t = " + std::to_string(tt[i]) + ")");
    }
  }
  return tabulated(std::move(tt), std::move(vv), "conjugate(" + impl_->name + ")");
}

GrowthIndices YoungFunction::delta2_indices() const {
  const int kPoints = 10000;
  const double lo = std::max(1e-8, impl_->kind == YoungKind::kTabulated ? impl_->t_min * 1.01 : 1e-8);
  const double hi = std::min(1e8, impl_->kind == YoungKind::kTabulated ? impl_->t_max * 0.99 : 1e8);
  const double lstep = std::log(hi / lo) / (kPoints - 1);
  double pmin = kInf, pmax = -kInf;
  for (int i = 0; i < kPoints; ++i) {
    const double t = lo * std::exp(lstep * i);
    const double A = impl_->eval(t);
    const double a = impl_->density(t);
    const double ratio = t * a / A;
    if (!std::isfinite(ratio) || !(A > 0.0) || !(a > 0.0)) {
      throw numeric_error("young indices: non-finite ratio at t = " + std::to_string(t));
    }
    pmin = std::min(pmin, ratio);
    pmax = std::max(pmax, ratio);
  }
  GrowthIndices g;
  g.p_minus = pmin;
  g.p_plus = pmax;
  g.a_doubling = std::isfinite(pmax);
  g.conjugate_doubling = pmin > 1.0;
  return g;
}

YoungFunction YoungFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string family(spec.substr(0, colon));
  std::vector<std::pair<std::string, double>> kv;
  if (colon != std::string_view::npos) {
    std::string rest(spec.substr(colon + 1));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw config_error("young parse: expected key=value in '" + item + "'");
      }
      kv.emplace_back(item.substr(0, eq), std::stod(item.substr(eq + 1)));
    }
  }
  const auto get = [&](const std::string& key, double fallback, bool required) {
    for (const auto& [k, v] : kv) {
      if (k == key) return v;
    }
    if (required) throw config_error("young parse: missing parameter '" + key + "' in '" +
                                     std::string(spec) + "'");
    return fallback;
  };
  try {
    if (family == "power") return power(get("p", 2.0, true));
    if (family == "powersum") return power_sum(get("p", 2.0, true), get("q", 4.0, true));
    if (family == "zygmund") {
      return zygmund(get("p", 2.0, true), get("q", 1.0, true), get("r", 1.0, true));
    }
    if (family == "iterlog") {
      return iter_log(get("p", 2.0, true), get("a", 1.0, true), get("b", 1.0, true));
    }
    if (family == "plogint") return power_log_integral(get("p", 2.0, true), get("a", 1.0, true));
  } catch (const std::domain_error& e) {
    throw config_error(std::string("young parse: ") + e.what());
  }
  throw config_error("young parse: unknown family '" + family + "'");
}

}  // namespace orlicz
