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
#include "doctest.h"

using namespace divsum;

namespace {

TermList ints(std::initializer_list<long> v) {
  TermList out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// B(n) = sum_{k=0}^{n-1} (n-1)!/(n-1-k)!
BigInt b_closed_form(long n) {
  BigInt sum = 0, falling = 1;
  for (long k = 0; k <= n - 1; ++k) {
    sum += falling;
    falling *= (n - 1 - k);
  }
  return sum;
}

}  // namespace

TEST_CASE("Wallis and odd-factorial terms") {
  CHECK(generate_terms(FactorialFamily::wallis(), 6) == ints({1, -1, 2, -6, 24, -120}));
  CHECK(generate_terms(FactorialFamily::odd_factorial(), 5) == ints({1, -1, 3, -15, 105}));
}

TEST_CASE("single term is x^m") {
  const FactorialFamily f(Rational(3, 2), 2, 2, Rational(1, 3));
  CHECK(generate_terms(f, 1) == TermList{Rational(1, 9)});
}

TEST_CASE("term ratio is -(p + kq) x^q") {
  const FactorialFamily f(Rational(2, 3), Rational(5, 4), 1, Rational(1, 16));
  const TermList t = generate_terms(f, 12);
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    CHECK(t[k + 1] / t[k] == -(f.p() + long(k) * f.q()) * f.step());
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(FactorialFamily(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FactorialFamily(1, -1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FactorialFamily(1, 1, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FactorialFamily(1, 1, 1, 0), std::invalid_argument);
  // x^q irrational
  CHECK_THROWS_AS(FactorialFamily(1, Rational(1, 2), 1, 2), std::invalid_argument);
}

TEST_CASE("B sequence") {
  CHECK(generate_b_sequence(7) == ints({1, 2, 5, 16, 65, 326, 1957}));
  CHECK(generate_b_sequence(8).back() == 13700);
  CHECK(generate_b_sequence(1) == ints({1}));
  const TermList b = generate_b_sequence(12);
  for (long n = 1; n <= 12; ++n) CHECK(b[n - 1] == Rational(b_closed_form(n)));
}

TEST_CASE("partial sums") {
  CHECK(partial_sums(ints({1, -1, 2, -6})) == ints({1, 0, 2, -4}));
  CHECK(partial_sums(ints({1})) == ints({1}));
  CHECK(partial_sums(ints({1, -1, 3, -15, 105})) == ints({1, 0, 3, -12, 93}));
}

TEST_CASE("species") {
  CHECK(classify_series(ints({1, 1, 1, 1, 1})) == Species::I);
  CHECK(classify_series({Rational(1, 2), Rational(-2, 3), Rational(3, 4), Rational(-4, 5)}) == Species::II);
  CHECK(classify_series(ints({1, -2, 4, -8})) == Species::IV);
  CHECK(classify_series(ints({1, 2, 4, 8, 16})) == Species::III);
  CHECK(classify_series(generate_terms(FactorialFamily::wallis(), 8)) == Species::IV);
  CHECK_THROWS(classify_series(ints({1, 0, 1, 1})));
  CHECK_THROWS(classify_series(ints({1, -1, 1})));
}

TEST_CASE("species is invariant under positive scaling") {
  const std::vector<TermList> samples = {ints({1, 1, 1, 1, 1}), ints({1, -2, 4, -8}),
                                         ints({3, -1, 3, -1, 3}), ints({1, 3, 9, 27})};
  for (const auto& s : samples) {
    TermList scaled = s;
    for (auto& t : scaled) t *= Rational(7, 3);
    CHECK(classify_series(scaled) == classify_series(s));
  }
}
