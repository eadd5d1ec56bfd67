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

#include "divsum/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace divsum {

namespace {

namespace mp = boost::multiprecision;

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt pow10(unsigned places) {
  return mp::pow(BigInt(10), places);
}

// Floor of the k-th root of a non-negative integer.
BigInt integer_root(const BigInt& n, unsigned k) {
  if (n < 2 || k == 1) return n;
  const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
  BigInt x = BigInt(1) << ((bits + k - 1) / k);
  while (true) {
    BigInt y = ((k - 1) * x + n / mp::pow(x, k - 1)) / k;
    if (y >= x) break;
    x = y;
  }
  while (mp::pow(x, k) > n) --x;
  while (mp::pow(x + 1, k) <= n) ++x;
  return x;
}

std::optional<BigInt> exact_root(const BigInt& n, unsigned k) {
  BigInt r = integer_root(n, k);
  if (mp::pow(r, k) != n) return std::nullopt;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(t.substr(0, slash), text);
    BigInt den = parse_integer(t.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    return Rational(num, den);
  }
  if (auto dot = t.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = t.substr(0, dot);
    std::string_view frac_part = t.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    std::string digits(int_part);
    if (digits.empty() || digits == "-" || digits == "+") digits += '0';
    BigInt whole = parse_integer(digits, text);
    if (frac_part.empty()) return Rational(whole);
    BigInt frac = parse_integer(frac_part, text);
    if (frac < 0 || frac_part[0] == '+') {
      throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
    BigInt scale = pow10(static_cast<unsigned>(frac_part.size()));
    BigInt magnitude = mp::abs(whole) * scale + frac;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_integer(t, text));
}

std::string to_string(const BigInt& n) {
  return n.str();
}

std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

double to_double(const Rational& r) {
  BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;
  const long shift = static_cast<long>(mp::msb(den)) - static_cast<long>(mp::msb(num)) + 64;
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  double value = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -value : value;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("from_double: non-finite value");
  if (value == 0.0) return Rational(0);
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 significant bits fit exactly into a 64-bit integer.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num = scaled;
  if (exponent >= 0) return Rational(num << exponent);
  return Rational(num, BigInt(1) << -exponent);
}

BigInt floor(const Rational& r) {
  const BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Rational round_to_places(const Rational& r, unsigned places) {
  const BigInt scale = pow10(places);
  const BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  const BigInt magnitude = (2 * mp::abs(num) * scale + den) / (2 * den);
  return Rational(num < 0 ? BigInt(-magnitude) : magnitude, scale);
}

std::string format_fixed(const Rational& r, unsigned places) {
  const Rational rounded = round_to_places(r, places);
  const BigInt scale = pow10(places);
  const BigInt scaled = numerator_of(rounded) * (scale / denominator_of(rounded));
  const bool negative = scaled < 0;
  const BigInt magnitude = mp::abs(scaled);
  std::string whole = BigInt(magnitude / scale).str();
  std::string out = negative ? "-" + whole : whole;
  if (places > 0) {
    std::string frac = BigInt(magnitude % scale).str();
    out += '.';
    out += std::string(places - frac.size(), '0') + frac;
  }
  return out;
}

std::string format_fixed(double value, unsigned places) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, "%.*f", static_cast<int>(places), value);
  return buffer;
}

bool is_integer(const Rational& r) {
  return denominator_of(r) == 1;
}

Rational pow_int(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("pow_int: zero to a negative power");
    return pow_int(Rational(1) / base, -exponent);
  }
  const BigInt num = mp::pow(numerator_of(base), static_cast<unsigned>(exponent));
  const BigInt den = mp::pow(denominator_of(base), static_cast<unsigned>(exponent));
  return Rational(num, den);
}

std::optional<Rational> exact_pow(const Rational& base, const Rational& exponent) {
  if (is_integer(exponent)) {
    const BigInt e = numerator_of(exponent);
    if (e < 0 && base == 0) return std::nullopt;
    if (mp::abs(e) > 100000) return std::nullopt;
    return pow_int(base, e.convert_to<long>());
  }
  if (base <= 0) return std::nullopt;
  const BigInt e_num = numerator_of(exponent);
  const BigInt e_den = denominator_of(exponent);
  if (e_den > 1000 || mp::abs(e_num) > 100000) return std::nullopt;
  const auto k = e_den.convert_to<unsigned>();
  auto num_root = exact_root(numerator_of(base), k);
  auto den_root = exact_root(denominator_of(base), k);
  if (!num_root || !den_root) return std::nullopt;
  return pow_int(Rational(*num_root, *den_root), e_num.convert_to<long>());
}

}  // namespace divsum
