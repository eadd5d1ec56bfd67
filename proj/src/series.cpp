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

#include "divsum/series.hpp"

#include <stdexcept>
#include <utility>

namespace divsum {

FactorialFamily::FactorialFamily(Rational p, Rational q, Rational m, Rational x)
    : p_(std::move(p)), q_(std::move(q)), m_(std::move(m)), x_(std::move(x)) {
  if (p_ <= 0) throw std::invalid_argument("factorial family: p must be positive");
  if (q_ <= 0) throw std::invalid_argument("factorial family: q must be positive");
  if (m_ < 0) throw std::invalid_argument("factorial family: m must be non-negative");
  if (x_ <= 0) throw std::invalid_argument("factorial family: x must be positive");
  auto step = exact_pow(x_, q_);
  auto prefactor = exact_pow(x_, m_);
  if (!step || !prefactor) {
    throw std::invalid_argument("factorial family: x^q and x^m must be rational, got x = " +
                                to_string(x_));
  }
  step_ = *step;
  prefactor_ = *prefactor;
}

std::string_view to_string(Species s) {
  switch (s) {
    case Species::I: return "I";
    case Species::II: return "II";
    case Species::III: return "III";
    case Species::IV: return "IV";
  }
  return "?";
}

TermList family_coefficients(const FactorialFamily& family, std::size_t count) {
  if (count == 0) throw std::invalid_argument("family_coefficients: count must be positive");
  TermList out;
  out.reserve(count);
  Rational c = 1;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(c);
    c *= -(family.p() + family.q() * static_cast<long>(k));
  }
  return out;
}

TermList generate_terms(const FactorialFamily& family, std::size_t count) {
  if (count == 0) throw std::invalid_argument("generate_terms: count must be positive");
  TermList out = family_coefficients(family, count);
  Rational power = family.prefactor();
  for (auto& term : out) {
    term *= power;
    power *= family.step();
  }
  return out;
}

TermList generate_b_sequence(std::size_t count) {
  if (count == 0) throw std::invalid_argument("generate_b_sequence: count must be positive");
  TermList out;
  out.reserve(count);
  BigInt b = 1;
  for (std::size_t n = 1; n <= count; ++n) {
    out.emplace_back(b);
    b = b * n + 1;
  }
  return out;
}

TermList partial_sums(const TermList& terms) {
  TermList out;
  out.reserve(terms.size());
  Rational running = 0;
  for (const auto& t : terms) {
    running += t;
    out.push_back(running);
  }
  return out;
}

Species classify_series(const TermList& terms) {
  if (terms.size() < 4) throw std::invalid_argument("classify_series: need at least 4 terms");
  for (const auto& t : terms) {
    if (t == 0) throw std::invalid_argument("classify_series: zero term has no sign");
  }
  bool alternating = true;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if ((terms[i] > 0) == (terms[i - 1] > 0)) alternating = false;
  }
  const std::size_t n = terms.size();
  const Rational a = abs(terms[n - 3]);
  const Rational b = abs(terms[n - 2]);
  const Rational c = abs(terms[n - 1]);
  const Rational d1 = b - a;
  const Rational d2 = c - b;
  const bool growing = d1 > 0 && d2 >= d1;
  if (alternating) return growing ? Species::IV : Species::II;
  return growing ? Species::III : Species::I;
}

}  // namespace divsum
