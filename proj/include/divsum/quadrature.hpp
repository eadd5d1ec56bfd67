// Copyright 2026 The divsum Authors
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

#ifndef DIVSUM_QUADRATURE_HPP_
#define DIVSUM_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "divsum/rational.hpp"
#include "divsum/series.hpp"

namespace divsum {

enum class IntegrandKind {
  factorial_unit,  // e^(1 - 1/x) / x on [0, 1]
  log_unit,        // 1 / (1 - ln v) on [0, 1]
  general,         // exp(1/(q x^q) - 1/(q t^q)) t^(p - q - 1) on [0, x]
  borel_halfline,  // e^-t (1 + q w t)^(-p/q) on [0, inf)
};

std::string_view to_string(IntegrandKind kind);

/// An integrand with exact parameters. Endpoint limits at 0 are part of the
/// definition (all three finite kinds vanish there).
struct IntegrandSpec {
  IntegrandKind kind = IntegrandKind::factorial_unit;
  Rational p = 1;
  Rational q = 1;
  Rational m = 1;
  /// Upper limit of the general kind.
  double x = 1;
  /// w in the half-line kind: x^q for a family evaluated at x.
  double scale = 1;

  static IntegrandSpec factorial_unit() { return {IntegrandKind::factorial_unit}; }
  static IntegrandSpec log_unit() { return {IntegrandKind::log_unit}; }
  static IntegrandSpec general(Rational p, Rational q, Rational m, double x);
  static IntegrandSpec borel_halfline(Rational p, Rational q, double scale = 1);

  /// [lower, upper]; upper is infinity for the half-line kind.
  std::pair<double, double> domain() const;
};

/// Throws std::domain_error outside the domain.
double evaluate_integrand(const IntegrandSpec& spec, double point);

enum class QuadratureMethod { trapezoid, adaptive };

std::string_view to_string(QuadratureMethod method);

struct QuadratureResult {
  double value = 0;
  /// Trapezoid: nodes of the rule. Adaptive: panels summed.
  std::size_t nodes = 0;
  double error_estimate = 0;
  QuadratureMethod method = QuadratureMethod::trapezoid;
  /// Requested tolerance (adaptive only).
  double tolerance = 0;
  /// Adaptive only: a re-run at a 16x tighter tolerance moved the value by
  /// less than the requested tolerance.
  bool verified = false;
};

/// (1/n) [y(0)/2 + y(1/n) + ... + y((n-1)/n) + y(1)/2].
///
/// The error estimate extrapolates from T(2n) and T(4n) using the observed
/// convergence ratio. Throws std::invalid_argument unless the domain is [0, 1]
/// and panels >= 1.
QuadratureResult trapezoid_unit_interval(const IntegrandSpec& spec, std::size_t panels);

/// The same rule for any ordinate function on [0, 1]. The sum is divided by n
/// once at the end, so a constant integrand integrates exactly.
QuadratureResult trapezoid_unit_interval(const std::function<double(double)>& y, std::size_t panels);

/// The n + 1 weighted ordinates; their sum equals the trapezoid value up to
/// rounding.
std::vector<double> trapezoid_addends(const IntegrandSpec& spec, std::size_t panels);

/// Adaptive Gauss-Kronrod over the finite domain, geometrically graded
/// towards 0, with the first 2^-60 of the range bounded by monotonicity.
QuadratureResult adaptive_integral(const IntegrandSpec& spec, double tolerance);

/// integral_0^inf e^-t (1 + q t)^(-p/q) dt, the value of the family
/// 1 - p + p(p+q) - ... at x = 1. Truncates at T with e^-T < tolerance/10 and
/// adds the tail bound e^-T (1 + q T)^(-p/q) to the error estimate.
/// Requires p, q > 0 and tolerance >= 1e-13.
QuadratureResult borel_oracle(const Rational& p, const Rational& q, double tolerance);

/// x^m integral_0^inf e^-t (1 + q x^q t)^(-p/q) dt for a family at any x.
QuadratureResult borel_oracle(const FactorialFamily& family, double tolerance);

struct GeneralIntegralOptions {
  /// Largest admissible 1/(q x^q).
  double exponent_cap = 700;
  double tolerance = 1e-12;
};

/// z = e^(1/(q x^q)) x^(m-p) integral_0^x e^(-1/(q t^q)) t^(p-q-1) dt,
/// evaluated with the exponentials combined so nothing overflows. Returns 0 at
/// x = 0. Throws std::domain_error for x outside [0, 1] or non-positive
/// parameters, std::overflow_error when 1/(q x^q) exceeds the cap.
QuadratureResult general_integral(const Rational& p, const Rational& q, const Rational& m, double x,
                                  const GeneralIntegralOptions& options = {});

}  // namespace divsum

#endif  // DIVSUM_QUADRATURE_HPP_
