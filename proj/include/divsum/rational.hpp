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

#ifndef DIVSUM_RATIONAL_HPP_
#define DIVSUM_RATIONAL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace divsum {

/// Arbitrary-size signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-size rational, always gcd-reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// An ordered list of signed exact terms; index 0 is the first term.
using TermList = std::vector<Rational>;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// Parses "n", "n/d" or a plain decimal literal such as "-0.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "n/d" in lowest terms, or "n" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Nearest double (relative error below 2^-60 before the final rounding).
double to_double(const Rational& r);

/// The exact binary value of a finite double.
Rational from_double(double value);

/// Rounds to `places` decimals, halves away from zero.
Rational round_to_places(const Rational& r, unsigned places);

/// Fixed-point rendering with `places` decimals, halves away from zero.
std::string format_fixed(const Rational& r, unsigned places);

/// Fixed-point rendering of a double (plain "%.*f").
std::string format_fixed(double value, unsigned places);

/// Largest integer not above r.
BigInt floor(const Rational& r);

/// base^exponent when the result is rational, std::nullopt otherwise.
/// base must be positive unless exponent is a non-negative integer.
std::optional<Rational> exact_pow(const Rational& base, const Rational& exponent);

/// Integer power with a signed exponent; base must be nonzero when exponent < 0.
Rational pow_int(const Rational& base, long exponent);

bool is_integer(const Rational& r);

}  // namespace divsum

#endif  // DIVSUM_RATIONAL_HPP_
