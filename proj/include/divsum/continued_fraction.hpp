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

#ifndef DIVSUM_CONTINUED_FRACTION_HPP_
#define DIVSUM_CONTINUED_FRACTION_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "divsum/rational.hpp"
#include "divsum/series.hpp"

namespace divsum {

/// leading / (1 + a1 / (1 + a2 / (1 + ...))), every partial denominator 1.
///
/// Levels index the numerators including the leading one: level 0 is
/// `leading`, level j >= 1 is partials[j - 1].
struct GeneralizedCF {
  Rational leading = 1;
  std::vector<Rational> partials;
  /// True when successive division ran out of nonzero remainder, so every
  /// numerator past `partials` is zero and the fraction is exact.
  bool terminated = false;

  std::size_t level_count() const { return partials.size() + 1; }
  const Rational& numerator(std::size_t level) const {
    return level == 0 ? leading : partials.at(level - 1);
  }
};

/// Raised when successive division meets a remainder series whose leading
/// coefficient vanishes while later ones do not.
class BreakdownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Successive division of sum c_k w^k into leading/(1 + a1 w/(1 + a2 w/...)).
/// Needs coefficients.size() >= depth + 1 and a nonzero leading coefficient.
GeneralizedCF series_to_cf(const TermList& coefficients, std::size_t depth);

/// Closed-form numerators of the factorial family in the variable w = x^q:
/// leading x^m, then p w, q w, (p+q) w, 2q w, (p+2q) w, 3q w, ...
GeneralizedCF factorial_cf(const FactorialFamily& family, std::size_t count);

/// h/k of a truncated fraction, kept unreduced (20/34 stays 20/34). h and k
/// are integers whenever every numerator is an integer.
struct Convergent {
  Rational h;
  Rational k;

  Rational value() const { return h / k; }
};

/// The first `count` convergents 0/1, leading/1, ... from
/// h_n = h_{n-1} + c_n h_{n-2}, k_n = k_{n-1} + c_n k_{n-2} with c_1 = leading.
/// count may be at most level_count() + 1.
std::vector<Convergent> convergents(const GeneralizedCF& cf, std::size_t count);

template <class Real>
struct BracketAverage {
  std::vector<Real> lower;
  std::vector<Real> upper;
  /// Means of neighbouring values, in order.
  std::vector<Real> averaged;
  std::vector<Real> averaged_lower;
  std::vector<Real> averaged_upper;
};

namespace detail {

// Splits alternating values into their two sides; throws unless the sides
// are monotone towards each other and never cross.
template <class Real>
std::pair<std::vector<Real>, std::vector<Real>> split_sides(const std::vector<Real>& values) {
  std::vector<Real> even, odd;
  for (std::size_t i = 0; i < values.size(); ++i) (i % 2 == 0 ? even : odd).push_back(values[i]);
  const bool even_is_lower = odd.empty() || even.front() <= odd.front();
  std::vector<Real>& lower = even_is_lower ? even : odd;
  std::vector<Real>& upper = even_is_lower ? odd : even;
  for (std::size_t i = 1; i < lower.size(); ++i) {
    if (lower[i] < lower[i - 1]) throw std::invalid_argument("bracket: lower side is not monotone");
  }
  for (std::size_t i = 1; i < upper.size(); ++i) {
    if (upper[i] > upper[i - 1]) throw std::invalid_argument("bracket: upper side is not monotone");
  }
  if (!lower.empty() && !upper.empty() &&
      *std::max_element(lower.begin(), lower.end()) > *std::min_element(upper.begin(), upper.end())) {
    throw std::invalid_argument("bracket: values do not alternate around a common interval");
  }
  return {std::move(lower), std::move(upper)};
}

}  // namespace detail

/// Splits alternating convergent values into the lower and upper brackets and
/// averages neighbouring values into a second, tighter alternating bracket.
template <class Real>
BracketAverage<Real> bracket_and_average(const std::vector<Real>& values) {
  if (values.empty()) throw std::invalid_argument("bracket_and_average: no values");
  BracketAverage<Real> out;
  std::tie(out.lower, out.upper) = detail::split_sides(values);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    out.averaged.push_back((values[i] + values[i + 1]) / 2);
  }
  if (!out.averaged.empty()) {
    std::tie(out.averaged_lower, out.averaged_upper) = detail::split_sides(out.averaged);
  }
  return out;
}

/// t -> (alpha + beta t) / (gamma + delta t).
struct MobiusMap {
  BigInt alpha = 0;
  BigInt beta = 1;
  BigInt gamma = 1;
  BigInt delta = 0;

  static MobiusMap identity() { return {}; }

  BigInt determinant() const { return alpha * delta - beta * gamma; }

  /// Exact value at t; throws std::domain_error on a pole.
  Rational operator()(const Rational& t) const;
  /// Value at t, evaluated exactly from the binary value of t.
  double evaluate(double t) const;
  /// Limit t -> infinity, beta / delta.
  Rational at_infinity() const;

  /// Same map up to a common nonzero factor.
  bool equivalent(const MobiusMap& other) const;

  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
};

/// (outer o inner)(t) = outer(inner(t)).
MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);

/// The map taking the tail value after level `to` (the sub-fraction that
/// starts with numerator(to)) to the sub-fraction value starting at level
/// `from`. collapse_segment(cf, 0, n) maps the tail to the whole fraction and
/// has coefficients (h_n, h_{n-1}, k_n, k_{n-1}) for integer numerators.
MobiusMap collapse_segment(const GeneralizedCF& cf, std::size_t from, std::size_t to);

enum class ClosureKind { paired, single };

/// Closes a fraction tail by assuming three consecutive tail values are in
/// arithmetic progression.
///
/// paired(a): tail numerators a-1, a-1, a, a, a+1, a+1, ...; solves
///   2 s^3 + 2 s^2 - (2a - 1) s - a = 0 and returns r = ((a-1) s + a - 1)/(s + a).
/// single(n): tail numerators n, n+1, n+2, ...; solves
///   2 q^3 + 3 q^2 - 2n q - (n + 1) = 0 and returns p = n / (1 + q).
struct TailClosure {
  ClosureKind kind = ClosureKind::paired;
  long parameter = 0;
  /// Coefficients of y^3, y^2, y, 1.
  std::array<Rational, 4> cubic;
  double root = 0;                      // s (paired) or q (single)
  std::pair<double, double> bracket;    // final bisection interval around root
  double residual = 0;                  // |cubic(root)|
  double tail_value = 0;                // r (paired) or p (single)
  double companion = 0;                 // t (paired) or r (single)

  /// The numerators this closure assumes for the tail, starting at its first.
  std::vector<Rational> assumed_numerators(std::size_t count) const;
};

TailClosure tail_closure_paired(long a);
TailClosure tail_closure_single(long n);

/// Chooses a closure from the numerators following `levels`, if they follow
/// one of the closure patterns for the next six levels.
std::optional<TailClosure> detect_closure(const GeneralizedCF& cf, std::size_t levels);

struct CFSum {
  double value = 0;
  /// Bracket width without closure; with closure, the spread of the map over
  /// the tail interval [a/(1 + a'), a] that any positive tail lies in.
  double error = 0;
  std::size_t levels = 0;
  MobiusMap map;
  std::optional<TailClosure> closure;
  double lower = 0;
  double upper = 0;
};

/// Collapses leading + `levels` partial numerators into one map and evaluates
/// it at the closure's tail value, or returns the midpoint of the last
/// convergent bracket when no closure is given. Throws std::invalid_argument
/// when levels < 2, when the fraction is too short, or when the closure's
/// assumed numerators disagree with the fraction.
CFSum sum_by_cf(const GeneralizedCF& cf, std::size_t levels,
                const std::optional<TailClosure>& closure);
CFSum sum_by_cf(const FactorialFamily& family, std::size_t levels,
                const std::optional<TailClosure>& closure);

/// [a0; a1, a2, ...] with unit numerators.
struct SimpleCF {
  std::vector<BigInt> quotients;
  /// True when the source rational is represented exactly.
  bool exact = false;

  std::vector<Convergent> convergents() const;
  Rational value() const;
};

/// Euclidean expansion of a positive rational into a0 and at most `count`
/// further quotients; stops early at an exact representation.
SimpleCF real_to_simple_cf(const Rational& value, std::size_t count);

}  // namespace divsum

#endif  // DIVSUM_CONTINUED_FRACTION_HPP_
