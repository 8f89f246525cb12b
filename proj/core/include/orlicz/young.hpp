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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace orlicz {

enum class YoungKind {
  kPower,            // t^p
  kPowerSum,         // t^p + t^q
  kZygmund,          // t^p log^q(1 + t^r)
  kIterLog,          // t^p log^a(1+t) log^b(1 + log(1+t))
  kPowerLogIntegral, // int_0^t tau^{p-1} log^a(1+tau) dtau
  kTabulated,        // log-spaced sample table, monotone-cubic in log-log
};

// Growth exponents p- <= p+ obtained from a log-grid scan of t a(t)/A(t).
// a_doubling corresponds to p+ < inf; conjugate_doubling to p- > 1.
struct GrowthIndices {
  double p_minus = 0.0;
  double p_plus = 0.0;
  bool a_doubling = false;
  bool conjugate_doubling = false;
};

// A convex growth law A with A(0) = 0, increasing and superlinear at both
// ends, together with its density a = A'. Values are immutable after
// construction and cheap to copy (shared internals); all member functions
// are const and safe to call concurrently.
class YoungFunction {
 public:
  static YoungFunction power(double p);
  static YoungFunction power_sum(double p, double q);
  static YoungFunction zygmund(double p, double q, double r);
  static YoungFunction iter_log(double p, double a, double b);
  static YoungFunction power_log_integral(double p, double a);
  // Table abscissae must be positive, strictly increasing and the values
  // positive and strictly increasing.
  static YoungFunction tabulated(std::vector<double> t, std::vector<double> a_of_t,
                                 std::string name = "tabulated");

  // Parses the CLI/config syntax: "power:p=2", "zygmund:p=2,q=1,r=1",
  // "powersum:p=2,q=4", "iterlog:p=2,a=1,b=1", "plogint:p=2,a=1".
  static YoungFunction parse(std::string_view spec);

  // A(t). t must be >= 0; callers pass |t| for the even extension.
  double operator()(double t) const;
  double eval(double t) const { return (*this)(t); }

  // a(t) = A'(t).
  double density(double t) const;

  // A^{-1}(y) by bracketing bisection; |A(t) - y| <= 1e-12 max(1, y).
  double inverse(double y) const;

  // Legendre conjugate sup_w { t w - A(w) }, returned as a tabulated
  // Young function on a log grid (4096 abscissae in [1e-8, 1e8], shrunk
  // when the sup is not attained inside the searchable range).
  YoungFunction conjugate() const;

  // Scan of t a(t)/A(t) over 1e4 log-spaced points in [1e-8, 1e8].
  GrowthIndices delta2_indices() const;

  YoungKind kind() const;
  const std::string& name() const;

  // Valid evaluation range; unbounded kinds report [0, inf).
  double domain_min() const;
  double domain_max() const;

  struct Impl;  // definition internal to the implementation

 private:
  explicit YoungFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace orlicz
