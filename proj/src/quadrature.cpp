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

#include "divsum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace divsum {

namespace {

constexpr unsigned kGradingLevels = 60;
constexpr unsigned kMaxDepth = 20;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Piece {
  double value = 0;
  double error = 0;
};

Piece rule(const std::function<double(double)>& f, double lo, double hi) {
  Piece out;
  out.value = Kronrod::integrate(f, lo, hi, 0, 0.0, &out.error);
  return out;
}

// Bisects until the 31-point error is within the absolute budget or a
// relative tolerance of the value. A split that does not halve the error is
// rounding-limited and is not taken.
Piece refine(const std::function<double(double)>& f, double lo, double hi, const Piece& whole,
             double relative_tolerance, double absolute, unsigned depth) {
  if (depth == 0 || whole.error <= absolute || whole.error <= relative_tolerance * std::fabs(whole.value)) {
    return whole;
  }
  const double mid = 0.5 * (lo + hi);
  const Piece left = rule(f, lo, mid);
  const Piece right = rule(f, mid, hi);
  if (left.error + right.error > whole.error / 2) return whole;
  const Piece l = refine(f, lo, mid, left, relative_tolerance, absolute / 2, depth - 1);
  const Piece r = refine(f, mid, hi, right, relative_tolerance, absolute / 2, depth - 1);
  return {l.value + r.value, l.error + r.error};
}

Piece kronrod(const std::function<double(double)>& f, double lo, double hi, double relative_tolerance,
              double absolute = 0) {
  return refine(f, lo, hi, rule(f, lo, hi), relative_tolerance, absolute, kMaxDepth);
}

// Integral over [0, b] of an integrand that is increasing near 0: panels
// [b 2^-(k+1), b 2^-k] for k < 60, plus b 2^-60 * y(b 2^-60) for the rest.
template <class F>
QuadratureResult graded_integral(F&& f, double b, double tolerance) {
  QuadratureResult out;
  out.method = QuadratureMethod::adaptive;
  out.tolerance = tolerance;
  const double relative = std::max(tolerance / 8, 1e-15);
  double hi = b;
  double value = 0;
  double error = 0;
  for (unsigned k = 0; k < kGradingLevels; ++k) {
    const double lo = hi / 2;
    Piece piece = kronrod(f, lo, hi, relative, tolerance / (8 * kGradingLevels));
    value += piece.value;
    error += piece.error;
    hi = lo;
  }
  error += hi * std::fabs(f(hi));
  out.value = value;
  out.error_estimate = error;
  out.nodes = kGradingLevels;
  return out;
}

double to_positive_double(const Rational& r, const char* name) {
  if (r <= 0) throw std::domain_error(std::string("integrand parameter ") + name + " must be positive");
  return to_double(r);
}

// (y(0)/2 + y(1/n) + ... + y(1)/2) / n, summed left to right.
double trapezoid_sum(const std::function<double(double)>& y, std::size_t panels) {
  const double n = static_cast<double>(panels);
  double sum = y(0.0) / 2;
  for (std::size_t k = 1; k < panels; ++k) sum += y(static_cast<double>(k) / n);
  sum += y(1.0) / 2;
  return sum / n;
}

}  // namespace

std::string_view to_string(IntegrandKind kind) {
  switch (kind) {
    case IntegrandKind::factorial_unit: return "factorial_unit";
    case IntegrandKind::log_unit: return "log_unit";
    case IntegrandKind::general: return "general";
    case IntegrandKind::borel_halfline: return "borel_halfline";
  }
  return "?";
}

std::string_view to_string(QuadratureMethod method) {
  return method == QuadratureMethod::trapezoid ? "trapezoid" : "adaptive";
}

IntegrandSpec IntegrandSpec::general(Rational p, Rational q, Rational m, double x) {
  IntegrandSpec spec;
  spec.kind = IntegrandKind::general;
  spec.p = std::move(p);
  spec.q = std::move(q);
  spec.m = std::move(m);
  spec.x = x;
  return spec;
}

IntegrandSpec IntegrandSpec::borel_halfline(Rational p, Rational q, double scale) {
  IntegrandSpec spec;
  spec.kind = IntegrandKind::borel_halfline;
  spec.p = std::move(p);
  spec.q = std::move(q);
  spec.scale = scale;
  return spec;
}

std::pair<double, double> IntegrandSpec::domain() const {
  switch (kind) {
    case IntegrandKind::general: return {0.0, x};
    case IntegrandKind::borel_halfline: return {0.0, std::numeric_limits<double>::infinity()};
    default: return {0.0, 1.0};
  }
}

double evaluate_integrand(const IntegrandSpec& spec, double point) {
  const auto [lo, hi] = spec.domain();
  if (!(point >= lo && point <= hi)) {
    throw std::domain_error("integrand " + std::string(to_string(spec.kind)) +
                            ": point outside the domain");
  }
  switch (spec.kind) {
    case IntegrandKind::factorial_unit:
      if (point == 0) return 0;
      return std::exp(1 - 1 / point) / point;
    case IntegrandKind::log_unit:
      if (point == 0) return 0;
      return 1 / (1 - std::log(point));
    case IntegrandKind::general: {
      if (point == 0) return 0;
      const double p = to_positive_double(spec.p, "p");
      const double q = to_positive_double(spec.q, "q");
      const double exponent = 1 / (q * std::pow(spec.x, q)) - 1 / (q * std::pow(point, q));
      return std::exp(exponent) * std::pow(point, p - q - 1);
    }
    case IntegrandKind::borel_halfline: {
      const double p = to_positive_double(spec.p, "p");
      const double q = to_positive_double(spec.q, "q");
      return std::exp(-point) * std::pow(1 + q * spec.scale * point, -p / q);
    }
  }
  return 0;
}

std::vector<double> trapezoid_addends(const IntegrandSpec& spec, std::size_t panels) {
  if (panels == 0) throw std::invalid_argument("trapezoid: panels must be positive");
  if (spec.domain() != std::pair<double, double>{0.0, 1.0}) {
    throw std::invalid_argument("trapezoid: integrand domain must be [0, 1]");
  }
  const double n = static_cast<double>(panels);
  std::vector<double> out;
  out.reserve(panels + 1);
  for (std::size_t k = 0; k <= panels; ++k) {
    const double weight = (k == 0 || k == panels) ? 0.5 / n : 1.0 / n;
    const double point = k == panels ? 1.0 : static_cast<double>(k) / n;
    out.push_back(weight * evaluate_integrand(spec, point));
  }
  return out;
}

QuadratureResult trapezoid_unit_interval(const std::function<double(double)>& y, std::size_t panels) {
  if (panels == 0) throw std::invalid_argument("trapezoid: panels must be positive");
  QuadratureResult out;
  out.method = QuadratureMethod::trapezoid;
  out.value = trapezoid_sum(y, panels);
  out.nodes = panels + 1;
  const double t2 = trapezoid_sum(y, 2 * panels);
  const double t4 = trapezoid_sum(y, 4 * panels);
  const double d1 = std::fabs(out.value - t2);
  const double d2 = std::fabs(t2 - t4);
  // error(T(n)) ~ d1 * rho / (rho - 1) for a geometric error sequence of
  // ratio rho; rho is clamped at 1.5 and the result padded by 25%.
  const double rho = d2 > 0 ? std::max(d1 / d2, 1.5) : 4.0;
  out.error_estimate = 1.25 * d1 * rho / (rho - 1);
  return out;
}

QuadratureResult trapezoid_unit_interval(const IntegrandSpec& spec, std::size_t panels) {
  if (spec.domain() != std::pair<double, double>{0.0, 1.0}) {
    throw std::invalid_argument("trapezoid: integrand domain must be [0, 1]");
  }
  return trapezoid_unit_interval([&spec](double t) { return evaluate_integrand(spec, t); }, panels);
}

QuadratureResult adaptive_integral(const IntegrandSpec& spec, double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("adaptive_integral: tolerance must be positive");
  if (spec.kind == IntegrandKind::borel_halfline) {
    return borel_oracle(spec.p, spec.q, tolerance);
  }
  const double b = spec.domain().second;
  auto f = [&spec](double t) { return evaluate_integrand(spec, t); };
  QuadratureResult first = graded_integral(f, b, tolerance);
  QuadratureResult tight = graded_integral(f, b, tolerance / 16);
  const double shift = std::fabs(first.value - tight.value);
  first.error_estimate = std::max(first.error_estimate, shift + tight.error_estimate);
  first.verified = shift <= tolerance;
  return first;
}

namespace {

QuadratureResult halfline(double p, double q, double scale, double tolerance) {
  // e^-T < tolerance / 10.
  const double T = std::log(10 / tolerance) + 1;
  auto f = [=](double t) { return std::exp(-t) * std::pow(1 + q * scale * t, -p / q); };
  const double relative = std::max(tolerance / 8, 1e-15);
  auto run = [&](double rel) {
    // Unit panels keep every Kronrod call on a well-scaled interval.
    Piece total;
    double lo = 0;
    while (lo < T) {
      const double hi = std::min(lo + 1, T);
      Piece piece = kronrod(f, lo, hi, rel);
      total.value += piece.value;
      total.error += piece.error;
      lo = hi;
    }
    return total;
  };
  const Piece first = run(relative);
  const Piece tight = run(std::max(relative / 16, 1e-16));
  const double tail = std::exp(-T) * std::pow(1 + q * scale * T, -p / q);
  QuadratureResult out;
  out.method = QuadratureMethod::adaptive;
  out.tolerance = tolerance;
  out.value = first.value;
  out.nodes = static_cast<std::size_t>(std::ceil(T));
  const double shift = std::fabs(first.value - tight.value);
  out.error_estimate = std::max(first.error, shift + tight.error) + tail;
  out.verified = shift <= tolerance;
  return out;
}

}  // namespace

QuadratureResult borel_oracle(const Rational& p, const Rational& q, double tolerance) {
  if (p <= 0 || q <= 0) throw std::domain_error("borel_oracle: p and q must be positive");
  if (!(tolerance >= 1e-13)) throw std::invalid_argument("borel_oracle: tolerance must be at least 1e-13");
  return halfline(to_double(p), to_double(q), 1.0, tolerance);
}

QuadratureResult borel_oracle(const FactorialFamily& family, double tolerance) {
  if (!(tolerance >= 1e-13)) throw std::invalid_argument("borel_oracle: tolerance must be at least 1e-13");
  const double prefactor = to_double(family.prefactor());
  QuadratureResult out = halfline(to_double(family.p()), to_double(family.q()),
                                  to_double(family.step()), tolerance / std::max(prefactor, 1.0));
  out.value *= prefactor;
  out.error_estimate *= prefactor;
  out.tolerance = tolerance;
  return out;
}

QuadratureResult general_integral(const Rational& p, const Rational& q, const Rational& m, double x,
                                  const GeneralIntegralOptions& options) {
  if (p <= 0 || q <= 0 || m < 0) {
    throw std::domain_error("general_integral: need p, q > 0 and m >= 0");
  }
  if (!(x >= 0 && x <= 1)) throw std::domain_error("general_integral: x must lie in [0, 1]");
  if (x == 0) {
    QuadratureResult zero;
    zero.method = QuadratureMethod::adaptive;
    zero.tolerance = options.tolerance;
    zero.verified = true;
    return zero;
  }
  const double qd = to_double(q);
  const double exponent = 1 / (qd * std::pow(x, qd));
  if (exponent > options.exponent_cap) {
    throw std::overflow_error("general_integral: exponent 1/(q x^q) = " + std::to_string(exponent) +
                              " exceeds the cap " + std::to_string(options.exponent_cap));
  }
  const IntegrandSpec spec = IntegrandSpec::general(p, q, m, x);
  const double prefactor = std::pow(x, to_double(m) - to_double(p));
  QuadratureResult out = adaptive_integral(spec, options.tolerance / std::max(prefactor, 1.0));
  out.value *= prefactor;
  out.error_estimate *= prefactor;
  out.tolerance = options.tolerance;
  return out;
}

}  // namespace divsum
