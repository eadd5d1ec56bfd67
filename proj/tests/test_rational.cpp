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

#include "divsum/rational.hpp"
#include "doctest.h"

using namespace divsum;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational(" 22/7 ") == Rational(22, 7));
  CHECK(parse_rational("0.5963473621372") == Rational(BigInt(5963473621372), BigInt("10000000000000")));
  CHECK(parse_rational("-0.0346154") == Rational(-346154, 10000000));
  CHECK(parse_rational(".25") == Rational(1, 4));
}

TEST_CASE("parse_rational rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.-5"), std::invalid_argument);
}

TEST_CASE("to_string is canonical") {
  CHECK(to_string(Rational(4, 8)) == "1/2");
  CHECK(to_string(Rational(-6, 3)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("to_double is correctly rounded on simple values") {
  CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(Rational(-2, 7)) == -2.0 / 7.0);
  CHECK(to_double(Rational(38015, 65536)) == 38015.0 / 65536.0);
  const BigInt big = BigInt(1) << 200;
  CHECK(to_double(Rational(big + 1, big)) == 1.0);
}

TEST_CASE("from_double is exact") {
  CHECK(from_double(0.5) == Rational(1, 2));
  CHECK(from_double(-0.375) == Rational(-3, 8));
  CHECK(to_double(from_double(0.1)) == 0.1);
  CHECK_THROWS(from_double(std::nan("")));
}

TEST_CASE("round_to_places rounds half away from zero") {
  CHECK(round_to_places(Rational(1, 65), 7) == Rational(153846, 10000000));
  CHECK(round_to_places(Rational(5, 100), 1) == Rational(1, 10));
  CHECK(round_to_places(Rational(-5, 100), 1) == Rational(-1, 10));
  CHECK(round_to_places(Rational(1, 13700), 7) == Rational(730, 10000000));
}

TEST_CASE("format_fixed") {
  CHECK(format_fixed(Rational(1, 2), 7) == "0.5000000");
  CHECK(format_fixed(Rational(-45, 1300), 7) == "-0.0346154");
  CHECK(format_fixed(Rational(38015, 65536), 3) == "0.580");
  CHECK(format_fixed(Rational(7), 0) == "7");
  CHECK(format_fixed(0.59637255, 8) == "0.59637255");
}

TEST_CASE("floor and is_integer") {
  CHECK(divsum::floor(Rational(7, 2)) == 3);
  CHECK(divsum::floor(Rational(-7, 2)) == -4);
  CHECK(is_integer(Rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
}

TEST_CASE("exact powers") {
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_int(Rational(5), 0) == 1);
  CHECK(exact_pow(Rational(4, 9), Rational(1, 2)) == Rational(2, 3));
  CHECK(exact_pow(Rational(8), Rational(2, 3)) == Rational(4));
  CHECK_FALSE(exact_pow(Rational(2), Rational(1, 2)).has_value());
}
