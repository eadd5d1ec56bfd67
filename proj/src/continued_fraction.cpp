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

#include "divsum/continued_fraction.hpp"

#include <cmath>
#include <string>

namespace divsum {

namespace {

// Truncated power-series quotient num/den to `length` coefficients.
TermList series_divide(const TermList& num, const TermList& den, std::size_t length) {
  TermList q(length, Rational(0));
  for (std::size_t k = 0; k < length; ++k) {
    Rational acc = k < num.size() ? num[k] : Rational(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

bool all_zero(const TermList& s) {
  return std::all_of(s.begin(), s.end(), [](const Rational& c) { return c == 0; });
}

MobiusMap level_map(const Rational& numerator) {
  // T = n / (1 + t), scaled to integers: (u + 0 t) / (v + v t) for n = u/v.
  return {numerator_of(numerator), 0, denominator_of(numerator), denominator_of(numerator)};
}

// Bisection on a sign change of f over [lo, hi] (f(lo) < 0 < f(hi)) down to
// width 1e-12, followed by one Newton step kept only if it stays inside.
template <class F, class DF>
std::pair<long double, std::pair<long double, long double>> solve_cubic(F f, DF df, long double lo,
                                                                        long double hi) {
  if (!(f(lo) < 0 && f(hi) > 0)) {
    throw std::logic_error("tail closure: cubic has no sign change on the search interval");
  }
  while (hi - lo > 1e-12L) {
    const long double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  long double root = (lo + hi) / 2;
  const long double d = df(root);
  if (d != 0) {
    const long double polished = root - f(root) / d;
    if (polished >= lo && polished <= hi) root = polished;
  }
  return {root, {lo, hi}};
}

}  // namespace

GeneralizedCF series_to_cf(const TermList& coefficients, std::size_t depth) {
  if (coefficients.empty() || coefficients.front() == 0) {
    throw BreakdownError("series_to_cf: leading coefficient must be nonzero");
  }
  if (coefficients.size() < depth + 1) {
    throw std::invalid_argument("series_to_cf: depth " + std::to_string(depth) + " needs " +
                                std::to_string(depth + 1) + " coefficients, got " +
                                std::to_string(coefficients.size()));
  }
  GeneralizedCF cf;
  cf.leading = coefficients.front();
  const std::size_t n = coefficients.size();
  // S = c0 / (1 + T)  =>  T = c0 / S - 1.
  TermList tail = series_divide(TermList{cf.leading}, coefficients, n);
  tail[0] -= 1;
  while (cf.partials.size() < depth) {
    // T = w R; the next numerator is R(0), and R(0)/R = 1 + (next T).
    TermList r(tail.begin() + 1, tail.end());
    if (all_zero(r)) {
      cf.terminated = true;
      cf.partials.resize(depth, Rational(0));
      break;
    }
    const Rational a = r.front();
    if (a == 0) {
      throw BreakdownError("series_to_cf: remainder with zero leading coefficient at level " +
                           std::to_string(cf.partials.size() + 1));
    }
    cf.partials.push_back(a);
    tail = series_divide(TermList{a}, r, r.size());
    tail[0] -= 1;
  }
  return cf;
}

GeneralizedCF factorial_cf(const FactorialFamily& family, std::size_t count) {
  GeneralizedCF cf;
  cf.leading = family.prefactor();
  cf.partials.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    const long i = static_cast<long>((j + 1) / 2);
    const Rational base = j % 2 == 1 ? Rational(family.p() + family.q() * (i - 1))
                                     : Rational(family.q() * i);
    cf.partials.push_back(base * family.step());
  }
  return cf;
}

std::vector<Convergent> convergents(const GeneralizedCF& cf, std::size_t count) {
  if (count == 0) throw std::invalid_argument("convergents: count must be positive");
  if (count > cf.level_count() + 1) {
    throw std::invalid_argument("convergents: only " + std::to_string(cf.level_count() + 1) +
                                " convergents available");
  }
  std::vector<Convergent> out;
  out.reserve(count);
  Rational h_prev = 1, k_prev = 0;
  Rational h = 0, k = 1;
  out.push_back({h, k});
  for (std::size_t level = 0; out.size() < count; ++level) {
    const Rational& c = cf.numerator(level);
    Rational h_next = h + c * h_prev;
    Rational k_next = k + c * k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
    out.push_back({h, k});
  }
  return out;
}

Rational MobiusMap::operator()(const Rational& t) const {
  const Rational den = Rational(gamma) + Rational(delta) * t;
  if (den == 0) throw std::domain_error("mobius map: pole at evaluation point");
  return (Rational(alpha) + Rational(beta) * t) / den;
}

double MobiusMap::evaluate(double t) const {
  return to_double((*this)(from_double(t)));
}

Rational MobiusMap::at_infinity() const {
  if (delta == 0) throw std::domain_error("mobius map: unbounded at infinity");
  return Rational(beta, delta);
}

bool MobiusMap::equivalent(const MobiusMap& other) const {
  return alpha * other.beta == beta * other.alpha && alpha * other.gamma == gamma * other.alpha &&
         alpha * other.delta == delta * other.alpha && beta * other.gamma == gamma * other.beta &&
         beta * other.delta == delta * other.beta && gamma * other.delta == delta * other.gamma &&
         (alpha == 0) == (other.alpha == 0) && (beta == 0) == (other.beta == 0) &&
         (gamma == 0) == (other.gamma == 0) && (delta == 0) == (other.delta == 0);
}

MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner) {
  // Matrix form [[beta, alpha], [delta, gamma]] acting on (t, 1).
  MobiusMap out;
  out.beta = outer.beta * inner.beta + outer.alpha * inner.delta;
  out.alpha = outer.beta * inner.alpha + outer.alpha * inner.gamma;
  out.delta = outer.delta * inner.beta + outer.gamma * inner.delta;
  out.gamma = outer.delta * inner.alpha + outer.gamma * inner.gamma;
  return out;
}

MobiusMap collapse_segment(const GeneralizedCF& cf, std::size_t from, std::size_t to) {
  if (from > to || to > cf.level_count()) {
    throw std::invalid_argument("collapse_segment: need 0 <= from <= to <= " +
                                std::to_string(cf.level_count()));
  }
  MobiusMap m = MobiusMap::identity();
  for (std::size_t level = to; level > from; --level) {
    m = compose(level_map(cf.numerator(level - 1)), m);
  }
  return m;
}

std::vector<Rational> TailClosure::assumed_numerators(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long j = static_cast<long>(i);
    out.emplace_back(kind == ClosureKind::paired ? parameter - 1 + j / 2 : parameter + j);
  }
  return out;
}

TailClosure tail_closure_paired(long a) {
  if (a < 2) throw std::invalid_argument("tail_closure_paired: a must be at least 2");
  TailClosure c;
  c.kind = ClosureKind::paired;
  c.parameter = a;
  c.cubic = {Rational(2), Rational(2), Rational(-(2 * a - 1)), Rational(-a)};
  const long double al = a;
  auto f = [al](long double s) { return 2 * s * s * s + 2 * s * s - (2 * al - 1) * s - al; };
  auto df = [al](long double s) { return 6 * s * s + 4 * s - (2 * al - 1); };
  auto [s, bracket] = solve_cubic(f, df, 0.0L, al);
  c.root = static_cast<double>(s);
  c.bracket = {static_cast<double>(bracket.first), static_cast<double>(bracket.second)};
  c.residual = static_cast<double>(std::fabs(f(s)));
  c.tail_value = static_cast<double>(((al - 1) * s + (al - 1)) / (s + al));
  c.companion = static_cast<double>(((al + 1) * s - al) / (al - s));
  return c;
}

TailClosure tail_closure_single(long n) {
  if (n < 1) throw std::invalid_argument("tail_closure_single: n must be at least 1");
  TailClosure c;
  c.kind = ClosureKind::single;
  c.parameter = n;
  c.cubic = {Rational(2), Rational(3), Rational(-2 * n), Rational(-(n + 1))};
  const long double nl = n;
  auto f = [nl](long double q) { return 2 * q * q * q + 3 * q * q - 2 * nl * q - (nl + 1); };
  auto df = [nl](long double q) { return 6 * q * q + 6 * q - 2 * nl; };
  auto [q, bracket] = solve_cubic(f, df, 0.0L, nl);
  c.root = static_cast<double>(q);
  c.bracket = {static_cast<double>(bracket.first), static_cast<double>(bracket.second)};
  c.residual = static_cast<double>(std::fabs(f(q)));
  c.tail_value = static_cast<double>(nl / (1 + q));
  c.companion = static_cast<double>((nl + 1) / q - 1);
  return c;
}

std::optional<TailClosure> detect_closure(const GeneralizedCF& cf, std::size_t levels) {
  constexpr std::size_t kWindow = 6;
  if (cf.partials.size() < levels + kWindow) return std::nullopt;
  const std::vector<Rational> window(cf.partials.begin() + static_cast<std::ptrdiff_t>(levels),
                                     cf.partials.begin() + static_cast<std::ptrdiff_t>(levels + kWindow));
  const Rational& first = window.front();
  if (!is_integer(first) || first < 1) return std::nullopt;
  const long start = numerator_of(first).convert_to<long>();
  if (start + 1 >= 2) {
    TailClosure paired;
    paired.kind = ClosureKind::paired;
    paired.parameter = start + 1;
    if (paired.assumed_numerators(kWindow) == window) return tail_closure_paired(start + 1);
  }
  TailClosure single;
  single.kind = ClosureKind::single;
  single.parameter = start;
  if (single.assumed_numerators(kWindow) == window) return tail_closure_single(start);
  return std::nullopt;
}

CFSum sum_by_cf(const GeneralizedCF& cf, std::size_t levels,
                const std::optional<TailClosure>& closure) {
  if (levels < 2) throw std::invalid_argument("sum_by_cf: levels must be at least 2");
  if (cf.partials.size() < levels) {
    throw std::invalid_argument("sum_by_cf: fraction has only " + std::to_string(cf.partials.size()) +
                                " partial numerators");
  }
  CFSum out;
  out.levels = levels;
  out.closure = closure;
  out.map = collapse_segment(cf, 0, levels + 1);
  const Rational at_zero = out.map(Rational(0));
  const Rational at_inf = out.map.at_infinity();
  out.lower = to_double(std::min(at_zero, at_inf));
  out.upper = to_double(std::max(at_zero, at_inf));
  if (!closure) {
    out.value = to_double((at_zero + at_inf) / 2);
    out.error = to_double(abs(at_zero - at_inf));
    return out;
  }
  if (cf.partials.size() < levels + 2) {
    throw std::invalid_argument("sum_by_cf: closure needs two numerators past the collapsed levels");
  }
  const std::size_t available = std::min<std::size_t>(4, cf.partials.size() - levels);
  const auto assumed = closure->assumed_numerators(available);
  for (std::size_t i = 0; i < available; ++i) {
    if (assumed[i] != cf.partials[levels + i]) {
      throw std::invalid_argument("sum_by_cf: closure assumes tail numerator " + to_string(assumed[i]) +
                                  " but the fraction has " + to_string(cf.partials[levels + i]));
    }
  }
  const Rational tail = from_double(closure->tail_value);
  const Rational value = out.map(tail);
  // Any positive tail a/(1 + a'/(1 + ...)) lies in [a/(1 + a'), a].
  const Rational& a = cf.partials[levels];
  const Rational& a_next = cf.partials[levels + 1];
  const Rational lo = out.map(a / (1 + a_next));
  const Rational hi = out.map(a);
  out.value = to_double(value);
  out.error = to_double(std::max(abs(value - lo), abs(value - hi)));
  return out;
}

CFSum sum_by_cf(const FactorialFamily& family, std::size_t levels,
                const std::optional<TailClosure>& closure) {
  return sum_by_cf(factorial_cf(family, levels + 6), levels, closure);
}

std::vector<Convergent> SimpleCF::convergents() const {
  std::vector<Convergent> out;
  BigInt h_prev = 0, k_prev = 1, h = 1, k = 0;
  for (const auto& a : quotients) {
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    out.push_back({Rational(h), Rational(k)});
  }
  return out;
}

Rational SimpleCF::value() const {
  if (quotients.empty()) throw std::logic_error("SimpleCF: no quotients");
  Rational v = quotients.back();
  for (std::size_t i = quotients.size() - 1; i-- > 0;) v = Rational(quotients[i]) + 1 / v;
  return v;
}

SimpleCF real_to_simple_cf(const Rational& value, std::size_t count) {
  if (value <= 0) throw std::invalid_argument("real_to_simple_cf: value must be positive");
  SimpleCF out;
  BigInt num = numerator_of(value);
  BigInt den = denominator_of(value);
  while (out.quotients.size() < count + 1) {
    out.quotients.push_back(num / den);
    BigInt rem = num % den;
    if (rem == 0) {
      out.exact = true;
      break;
    }
    num = den;
    den = rem;
  }
  return out;
}

}  // namespace divsum
