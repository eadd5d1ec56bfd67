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

#ifndef DIVSUM_SERIES_HPP_
#define DIVSUM_SERIES_HPP_

#include <cstddef>
#include <string_view>

#include "divsum/rational.hpp"

namespace divsum {

/// The alternating factorial-type family
///
///   term(k) = (-1)^k * p (p + q) ... (p + (k-1) q) * x^(m + k q).
///
/// p = q = m = x = 1 is the Wallis series 1 - 1 + 2 - 6 + 24 - ...,
/// p = 1, q = 2, m = 1, x = 1 is 1 - 1 + 3 - 15 + 105 - ...
///
/// Parameters are exact. Construction throws std::invalid_argument unless
/// p, q, x > 0, m >= 0 and both x^q and x^m are rational.
class FactorialFamily {
 public:
  FactorialFamily(Rational p, Rational q, Rational m, Rational x);

  static FactorialFamily wallis() { return {1, 1, 1, 1}; }
  static FactorialFamily odd_factorial() { return {1, 2, 1, 1}; }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& m() const { return m_; }
  const Rational& x() const { return x_; }
  /// x^q, the per-step variable of the family.
  const Rational& step() const { return step_; }
  /// x^m, the prefactor of the whole series.
  const Rational& prefactor() const { return prefactor_; }

  friend bool operator==(const FactorialFamily&, const FactorialFamily&) = default;

 private:
  Rational p_, q_, m_, x_;
  Rational step_, prefactor_;
};

/// Euler's four species of divergent series.
enum class Species { I, II, III, IV };

std::string_view to_string(Species s);

/// The first `count` terms of the family, exact. Throws on count == 0.
TermList generate_terms(const FactorialFamily& family, std::size_t count);

/// The coefficients c_k of the family in the variable x^q, without the x^m
/// prefactor: c_k = (-1)^k p (p + q) ... (p + (k-1) q).
TermList family_coefficients(const FactorialFamily& family, std::size_t count);

/// B(1) = 1, B(n+1) = n B(n) + 1: 1, 2, 5, 16, 65, 326, 1957, 13700, ...
TermList generate_b_sequence(std::size_t count);

/// output[k] = terms[0] + ... + terms[k].
TermList partial_sums(const TermList& terms);

/// Heuristic species of a finite prefix (at least 4 nonzero terms).
///
/// Alternating means every pair of neighbours has opposite signs. The prefix
/// counts as growing when the last three magnitudes increase with
/// non-shrinking increments; otherwise it is treated as bounded. Only the
/// supplied terms are inspected. Throws std::invalid_argument on a zero term
/// or a prefix shorter than 4.
Species classify_series(const TermList& terms);

}  // namespace divsum

#endif  // DIVSUM_SERIES_HPP_
