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


#include <cmath>
#include <random>

#include "divsum/continued_fraction.hpp"
#include "divsum/series.hpp"
#include "doctest.h"

using namespace divsum;

namespace {

TermList ints(std::initializer_list<long> v) {
  TermList out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Truncated power series inverse, kept apart from the library's own.
TermList inverse(const TermList& a, std::size_t n) {
  TermList b(n, Rational(0));
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * b[k - j];
    b[k] = -s / a[0];
  }
  return b;
}

// c0 / (1 + a1 w / (1 + a2 w / (1 + ...))) expanded in w to n coefficients.
TermList reexpand(const GeneralizedCF& cf, std::size_t n) {
  TermList tail(n, Rational(0));
  tail[0] = 1;
  for (std::size_t j = cf.partials.size(); j-- > 0;) {
    TermList shifted(n, Rational(0));
    const TermList inv = inverse(tail, n);
    for (std::size_t i = 0; i + 1 < n; ++i) shifted[i + 1] = cf.partials[j] * inv[i];
    shifted[0] += 1;
    tail = shifted;
  }
  TermList out = inverse(tail, n);
  for (auto& v : out) v *= cf.leading;
  return out;
}

double bisect(double (*f)(double, double), double param, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid, param) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double paired_cubic(double s, double a) { return 2 * s * s * s + 2 * s * s - (2 * a - 1) * s - a; }
double single_cubic(double q, double n) { return 2 * q * q * q + 3 * q * q - 2 * n * q - (n + 1); }

std::string frac(const Convergent& c) { return to_string(c.h) + "/" + to_string(c.k); }

}  // namespace

TEST_CASE("series to continued fraction by successive division") {
  const auto wallis = series_to_cf(generate_terms(FactorialFamily::wallis(), 8), 6);
  CHECK(wallis.leading == 1);
  CHECK(wallis.partials == ints({1, 1, 2, 2, 3, 3}));
  const auto odd = series_to_cf(generate_terms(FactorialFamily::odd_factorial(), 7), 5);
  CHECK(odd.partials == ints({1, 2, 3, 4, 5}));
}

TEST_CASE("geometric series terminates") {
  const auto cf = series_to_cf(ints({1, -1, 1, -1, 1, -1}), 4);
  CHECK(cf.terminated);
  CHECK(cf.partials == ints({1, 0, 0, 0}));
}

TEST_CASE("series_to_cf errors") {
  CHECK_THROWS_AS(series_to_cf(ints({0, 1, 2}), 1), BreakdownError);
  CHECK_THROWS_AS(series_to_cf(ints({1, 1}), 3), std::invalid_argument);
  // 1 + 0 w + w^2: the first remainder starts with zero.
  CHECK_THROWS_AS(series_to_cf(ints({1, 0, 1, 0, 0}), 2), BreakdownError);
}

TEST_CASE("numerator law") {
  CHECK(factorial_cf(FactorialFamily::wallis(), 10).partials == ints({1, 1, 2, 2, 3, 3, 4, 4, 5, 5}));
  CHECK(factorial_cf(FactorialFamily::odd_factorial(), 6).partials == ints({1, 2, 3, 4, 5, 6}));
  const FactorialFamily f(Rational(3, 2), Rational(1, 3), 2, Rational(1, 8));
  const auto cf = factorial_cf(f, 1);
  CHECK(cf.partials == TermList{Rational(3, 2) * Rational(1, 2)});
  CHECK(cf.leading == Rational(1, 64));
}

TEST_CASE("law agrees with successive division") {
  for (long p = 1; p <= 4; ++p) {
    for (long q = 1; q <= 4; ++q) {
      const FactorialFamily f(p, q, 1, 1);
      const auto by_division = series_to_cf(family_coefficients(f, 9), 8);
      const auto by_law = factorial_cf(f, 8);
      CHECK(by_division.leading == by_law.leading);
      CHECK(by_division.partials == by_law.partials);
    }
  }
}

TEST_CASE("convergents of the Wallis fraction") {
  const auto c = convergents(factorial_cf(FactorialFamily::wallis(), 8), 10);
  const std::vector<std::string> expected = {"0/1", "1/1", "1/2", "2/3", "4/7",
                                             "8/13", "20/34", "44/73", "124/209", "300/501"};
  REQUIRE(c.size() == expected.size());
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(frac(c[i]) == expected[i]);
}

TEST_CASE("convergents of the odd-factorial fraction") {
  const auto c = convergents(factorial_cf(FactorialFamily::odd_factorial(), 10), 12);
  CHECK(frac(c.back()) == "23568/35696");
  CHECK(frac(c[4]) == "6/10");
}

TEST_CASE("no partial numerators") {
  GeneralizedCF cf;
  const auto c = convergents(cf, 1);
  REQUIRE(c.size() == 1);
  CHECK(frac(c[0]) == "0/1");
  CHECK_THROWS_AS(convergents(cf, 3), std::invalid_argument);
}

TEST_CASE("determinant identity over 30 convergents") {
  const auto cf = factorial_cf(FactorialFamily::wallis(), 30);
  const auto c = convergents(cf, 30);
  Rational product = 1;
  for (std::size_t n = 1; n < c.size(); ++n) {
    product *= cf.numerator(n - 1);
    const Rational lhs = c[n].h * c[n - 1].k - c[n - 1].h * c[n].k;
    CHECK(lhs == (n % 2 == 1 ? product : Rational(-product)));
  }
}

TEST_CASE("bracketing and averaging") {
  const auto c = convergents(factorial_cf(FactorialFamily::wallis(), 8), 10);
  std::vector<double> values;
  for (const auto& v : c) values.push_back(to_double(v.value()));
  const auto b = bracket_and_average(values);
  const std::vector<double> lower = {0.0, 0.5, 0.5714285714, 0.5882352941, 124.0 / 209};
  REQUIRE(b.lower.size() == lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) CHECK(b.lower[i] == doctest::Approx(lower[i]).epsilon(1e-10));
  const std::vector<double> averaged = {0.5, 0.75, 0.5833333333, 0.6190476190};
  for (std::size_t i = 0; i < averaged.size(); ++i) {
    CHECK(b.averaged[i] == doctest::Approx(averaged[i]).epsilon(1e-10));
  }
  for (std::size_t i = 1; i < b.lower.size(); ++i) CHECK(b.lower[i] > b.lower[i - 1]);
  for (std::size_t i = 1; i < b.upper.size(); ++i) CHECK(b.upper[i] < b.upper[i - 1]);
  CHECK(b.lower.back() < b.upper.back());
  CHECK(b.averaged_lower.back() < b.averaged_upper.back());

  const auto constant = bracket_and_average(std::vector<double>{0.25, 0.25});
  CHECK(constant.averaged == std::vector<double>{0.25});
  CHECK_THROWS_AS(bracket_and_average(std::vector<double>{0.0, 1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("collapse_segment") {
  const auto cf = factorial_cf(FactorialFamily::wallis(), 45);
  CHECK(collapse_segment(cf, 5, 5) == MobiusMap::identity());
  // Tail 0 gives the convergent.
  const auto c = convergents(cf, 20);
  for (std::size_t n = 1; n < 20; ++n) CHECK(collapse_segment(cf, 0, n)(Rational(0)) == c[n].value());
  CHECK(collapse_segment(cf, 0, 21) == MobiusMap{491459820, 139931620, 824073141, 234662231});
  CHECK(collapse_segment(cf, 21, 31) == MobiusMap{2381951, 649286, 887640, 187440});
  CHECK(collapse_segment(cf, 31, 41) == MobiusMap{11437136, 2924816, 3697925, 643025});
  CHECK_THROWS_AS(collapse_segment(cf, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(collapse_segment(cf, 0, 47), std::invalid_argument);
}

TEST_CASE("composition law for all splits up to 30") {
  const auto cf = factorial_cf(FactorialFamily::wallis(), 30);
  for (std::size_t b = 0; b <= 30; ++b) {
    const MobiusMap whole = collapse_segment(cf, 0, b);
    for (std::size_t a = 0; a <= b; ++a) {
      CHECK(compose(collapse_segment(cf, 0, a), collapse_segment(cf, a, b)) == whole);
    }
  }
}

TEST_CASE("Moebius maps") {
  const MobiusMap m{1, 2, 3, 4};
  CHECK(m.determinant() == -2);
  CHECK(m(Rational(1)) == Rational(3, 7));
  CHECK(m.at_infinity() == Rational(1, 2));
  CHECK(m.equivalent(MobiusMap{2, 4, 6, 8}));
  CHECK_FALSE(m.equivalent(MobiusMap{1, 2, 3, 5}));
  CHECK_THROWS_AS(m(Rational(-3, 4)), std::domain_error);
  const MobiusMap n{0, 1, 1, 1};
  CHECK(compose(m, n)(Rational(2)) == m(n(Rational(2))));
}

TEST_CASE("paired tail closure") {
  const TailClosure c = tail_closure_paired(22);
  CHECK(c.cubic == std::array<Rational, 4>{2, 2, -43, -22});
  CHECK(std::fabs(c.root - 4.423) < 5e-4);
  CHECK(std::fabs(c.tail_value - 4.31) < 5e-3);
  CHECK(std::fabs(c.root - bisect(paired_cubic, 22, 0, 22)) < 1e-10);
  CHECK(c.residual < 1e-10);
  CHECK(c.root >= c.bracket.first);
  CHECK(c.root <= c.bracket.second);
  for (long a : {2L, 5L, 22L, 100L}) {
    const TailClosure t = tail_closure_paired(a);
    CHECK(std::fabs(t.tail_value + t.companion - 2 * t.root) < 1e-9);
  }
  CHECK_THROWS_AS(tail_closure_paired(1), std::invalid_argument);
}

TEST_CASE("single tail closure") {
  const TailClosure c = tail_closure_single(11);
  CHECK(c.cubic == std::array<Rational, 4>{2, 3, -22, -12});
  CHECK(std::fabs(c.root - 2.94) < 1e-2);
  CHECK(std::fabs(c.tail_value - 2.79) < 1e-2);
  CHECK(std::fabs(c.root - bisect(single_cubic, 11, 0, 11)) < 1e-10);
  CHECK(c.residual < 1e-10);
  CHECK_THROWS_AS(tail_closure_single(0), std::invalid_argument);
}

TEST_CASE("closure detection") {
  const auto wallis = factorial_cf(FactorialFamily::wallis(), 46);
  const auto c = detect_closure(wallis, 40);
  REQUIRE(c.has_value());
  CHECK(c->kind == ClosureKind::paired);
  CHECK(c->parameter == 22);
  const auto odd = detect_closure(factorial_cf(FactorialFamily::odd_factorial(), 16), 10);
  REQUIRE(odd.has_value());
  CHECK(odd->kind == ClosureKind::single);
  CHECK(odd->parameter == 11);
  CHECK_FALSE(detect_closure(factorial_cf(FactorialFamily(1, 1, 1, Rational(1, 2)), 20), 10).has_value());
}

TEST_CASE("sum by continued fraction") {
  const double euler = 0.5963473621372;
  const auto a = sum_by_cf(FactorialFamily::wallis(), 40, tail_closure_paired(22));
  CHECK(std::fabs(a.value - euler) < 2e-10);
  const auto z = sum_by_cf(FactorialFamily::odd_factorial(), 10, tail_closure_single(11));
  CHECK(std::fabs(z.value - 0.65568) < 1e-5);
  const auto open = sum_by_cf(FactorialFamily::wallis(), 100, std::nullopt);
  CHECK(std::fabs(open.value - 0.5963473623) < 1e-8);
  CHECK(open.lower <= open.value);
  CHECK(open.value <= open.upper);
  // The closure has to describe the numerators that follow.
  CHECK_THROWS_AS(sum_by_cf(FactorialFamily::wallis(), 40, tail_closure_single(21)), std::invalid_argument);
  CHECK_THROWS_AS(sum_by_cf(FactorialFamily::wallis(), 1, std::nullopt), std::invalid_argument);
}

TEST_CASE("simple continued fractions") {
  const auto a = real_to_simple_cf(parse_rational("0.5963473621372"), 8);
  CHECK(a.quotients == std::vector<BigInt>{0, 1, 1, 2, 10, 1, 1, 4, 2});
  const auto conv = a.convergents();
  CHECK(frac(conv[3]) == "3/5");
  CHECK(frac(conv[4]) == "31/52");
  CHECK(frac(conv[5]) == "34/57");
  CHECK(frac(conv[6]) == "65/109");

  const auto half = real_to_simple_cf(Rational(1, 2), 5);
  CHECK(half.quotients == std::vector<BigInt>{0, 2});
  CHECK(half.exact);

  // Euclid by hand on 38015/65536.
  std::vector<BigInt> euclid;
  long long n = 38015, d = 65536;
  while (d != 0) {
    euclid.push_back(n / d);
    const long long r = n % d;
    n = d;
    d = r;
  }
  const auto e = real_to_simple_cf(Rational(38015, 65536), 50);
  CHECK(e.exact);
  CHECK(e.quotients == euclid);
  CHECK(e.value() == Rational(38015, 65536));
  CHECK_THROWS_AS(real_to_simple_cf(Rational(-1, 2), 3), std::invalid_argument);
}

TEST_CASE("simple convergent error bound") {
  const Rational x = parse_rational("0.5963473621372");
  const auto s = real_to_simple_cf(x, 40);
  const auto c = s.convergents();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    CHECK(abs(x - c[i].value()) <= 1 / (c[i].k * c[i + 1].k));
  }
  CHECK(c.back().value() == x);
}

TEST_CASE("correspondence with the series, Wallis") {
  const TermList w = generate_terms(FactorialFamily::wallis(), 12);
  for (std::size_t d = 1; d <= 8; ++d) {
    const auto cf = series_to_cf(w, d);
    const TermList back = reexpand(cf, d + 1);
    for (std::size_t i = 0; i <= d; ++i) CHECK(back[i] == w[i]);
  }
}

TEST_CASE("correspondence with the series, random") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  int done = 0, attempts = 0;
  while (done < 20 && attempts < 1000) {
    ++attempts;
    TermList s;
    for (int i = 0; i < 8; ++i) s.emplace_back(num(rng), den(rng));
    if (s[0] == 0) continue;
    GeneralizedCF cf;
    try {
      cf = series_to_cf(s, 7);
    } catch (const BreakdownError&) {
      continue;
    }
    ++done;
    const TermList back = reexpand(cf, 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(back[i] == s[i]);
  }
  CHECK(done == 20);
}
