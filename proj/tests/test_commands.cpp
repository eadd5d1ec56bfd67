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

#include "divsum/commands.hpp"
#include "doctest.h"

using namespace divsum;

namespace {

SeriesConfig family_config(FactorialFamily f, SumMethod method) {
  SeriesConfig c;
  c.family = f;
  c.method = method;
  return c;
}

const MethodResult& result(const Report& r, const std::string& method) {
  for (const auto& m : r.results) {
    if (m.method == method) return m;
  }
  FAIL("missing method " << method);
  return r.results.front();
}

}  // namespace

TEST_CASE("parsing of enumerations and closures") {
  CHECK(parse_sum_method("cf") == SumMethod::cf);
  CHECK(parse_table_kind("convergents") == TableKind::convergents);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_sum_method("magic"), UsageError);
  CHECK_THROWS_AS(parse_output_format("xml"), UsageError);
  CHECK(parse_closure("auto").mode == ClosureRequest::Mode::automatic);
  CHECK(parse_closure("none").mode == ClosureRequest::Mode::none);
  const auto a = parse_closure("a=22");
  CHECK(a.mode == ClosureRequest::Mode::fixed);
  CHECK(a.kind == ClosureKind::paired);
  CHECK(a.parameter == 22);
  const auto n = parse_closure("single:11");
  CHECK(n.kind == ClosureKind::single);
  CHECK(n.parameter == 11);
  CHECK_THROWS_AS(parse_closure("b=3"), UsageError);
  CHECK(parse_coefficients("1,-1/2, 0.25") == TermList{1, Rational(-1, 2), Rational(1, 4)});
  CHECK_THROWS_AS(parse_coefficients("1,,2"), UsageError);
}

TEST_CASE("config validation") {
  SeriesConfig c;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.family = FactorialFamily::wallis();
  c.coefficients = TermList{1};
  CHECK_THROWS_AS(c.validate(), UsageError);
  CHECK_THROWS_AS(cmd_sum(c), UsageError);
}

TEST_CASE("sum of the Wallis series by every method") {
  const Report r = cmd_sum(family_config(FactorialFamily::wallis(), SumMethod::all));
  CHECK(r.command == "sum");
  REQUIRE(r.results.size() >= 3);
  for (const auto& m : r.results) CHECK(std::fabs(m.value - 0.59635) < 1e-4);
  REQUIRE(r.agreement.has_value());
  CHECK(r.agreement->methods.size() == r.results.size());
  for (std::size_t i = 0; i < r.results.size(); ++i) CHECK(r.agreement->delta[i][i] == 0.0);
  CHECK(std::fabs(result(r, "cf").value - 0.5963473621372) < 2e-10);
  CHECK(std::fabs(result(r, "integral").value - 0.5963473623) < 1e-9);
}

TEST_CASE("transform error bar is honest") {
  const Report r = cmd_sum(family_config(FactorialFamily::wallis(), SumMethod::transform));
  REQUIRE(r.results.size() == 1);
  const auto& t = r.results[0];
  CHECK(t.exact.has_value());
  CHECK(std::fabs(t.value - 0.596347362323194) < 1e-4);
}

TEST_CASE("odd-factorial series with the single closure") {
  SeriesConfig c = family_config(FactorialFamily::odd_factorial(), SumMethod::cf);
  c.levels = 10;
  c.closure = parse_closure("n=11");
  const Report r = cmd_sum(c);
  CHECK(std::fabs(result(r, "cf").value - 0.65568) < 1e-4);
}

TEST_CASE("alternating unit coefficients sum to one half") {
  SeriesConfig c;
  c.coefficients = parse_coefficients("1,-1,1,-1");
  c.method = SumMethod::transform;
  const Report r = cmd_sum(c);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].exact == std::optional<std::string>("1/2"));
  CHECK(r.results[0].value == 0.5);
  c.method = SumMethod::integral;
  CHECK_THROWS_AS(cmd_sum(c), UsageError);
}

TEST_CASE("integral with trapezoid cross-check") {
  SeriesConfig c = family_config(FactorialFamily::wallis(), SumMethod::integral);
  c.panels = 10;
  const Report r = cmd_sum(c);
  CHECK(std::fabs(result(r, "trapezoid").value - 0.596372577792264) < 1e-12);
}

TEST_CASE("convergents table") {
  SeriesConfig c = family_config(FactorialFamily::wallis(), SumMethod::all);
  const Report r = cmd_table(c, TableKind::convergents);
  REQUIRE(r.tables.size() == 1);
  const auto& t = r.tables[0];
  REQUIRE(t.rows.size() == 10);
  CHECK(t.rows.back()[2] == "300");
  CHECK(t.rows.back()[3] == "501");
  CHECK(t.rows[6][2] == "20");
  CHECK(t.rows[6][3] == "34");
}

TEST_CASE("differences table") {
  SeriesConfig c;
  c.coefficients = parse_coefficients("1,2,6,24,120");
  const Report r = cmd_table(c, TableKind::differences);
  REQUIRE(r.tables.size() == 1);
  const auto& t = r.tables[0];
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[0][1] == "1");
  CHECK(t.rows[1][1] == "1");
  CHECK(t.rows[1][2] == "4");
  CHECK(t.rows[2][1] == "3");
  CHECK(t.rows[4][1] == "53");
}

TEST_CASE("differences of the iterated transform input") {
  SeriesConfig c;
  c.coefficients = parse_coefficients("1,3,12,60,360,2520,20160,181440");
  const Report r = cmd_table(c, TableKind::differences);
  const auto& row = r.tables.at(0).rows.at(1);
  CHECK(std::vector<std::string>(row.begin() + 1, row.begin() + 8) ==
        std::vector<std::string>{"2", "9", "48", "300", "2160", "17640", "161280"});
}

TEST_CASE("differences of a constant series vanish") {
  SeriesConfig c;
  c.coefficients = parse_coefficients("3/2,3/2,3/2,3/2");
  const Report r = cmd_table(c, TableKind::differences);
  const auto& rows = r.tables.at(0).rows;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    for (std::size_t i = 1; i + k < rows[k].size(); ++i) CHECK(rows[k][i] == "0");
  }
}

TEST_CASE("repro sections") {
  CHECK(repro_sections() == std::vector<std::string>{"s15", "s16", "s17", "s18", "s19", "s22", "s23", "s25", "s29"});
  CHECK_THROWS_AS(cmd_repro("s99"), UsageError);
  for (const auto& s : repro_sections()) {
    const Report r = cmd_repro(s);
    CHECK(r.command == "repro " + s);
    CHECK_FALSE(r.checks.empty());
    bool any_miss = false;
    for (const auto& ch : r.checks) any_miss = any_miss || !ch.match;
    CHECK(r.mismatch == any_miss);
  }
}

TEST_CASE("repro s15 reproduces the closed forms") {
  const Report r = cmd_repro("s15");
  for (const auto& ch : r.checks) CHECK_MESSAGE(ch.match, ch.label);
}

TEST_CASE("repro s23 flags the displayed splits only") {
  const Report r = cmd_repro("s23");
  int misses = 0;
  for (const auto& ch : r.checks) misses += ch.match ? 0 : 1;
  CHECK(misses == 2);
}

TEST_CASE("JSON round trip and determinism") {
  const Report r = cmd_sum(family_config(FactorialFamily::wallis(), SumMethod::all));
  const std::string js = render(r, OutputFormat::json);
  CHECK(parse_report_json(js) == r);
  CHECK(render(cmd_sum(family_config(FactorialFamily::wallis(), SumMethod::all)), OutputFormat::json) == js);
  CHECK(js.find("\"schema_version\": 1") != std::string::npos);
  const Report rr = cmd_repro("s22");
  CHECK(parse_report_json(render(rr, OutputFormat::json)) == rr);
  CHECK_THROWS_AS(parse_report_json("{\"schema_version\": 7}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json("not json"), std::invalid_argument);
}

TEST_CASE("text and csv rendering") {
  const Report r = cmd_sum(family_config(FactorialFamily::wallis(), SumMethod::cf));
  const std::string text = render(r, OutputFormat::text);
  CHECK(text.find("cf") != std::string::npos);
  CHECK(text.find("\xC2\xB1") != std::string::npos);
  const std::string csv = render(r, OutputFormat::csv);
  CHECK(csv.find("method,") != std::string::npos);
  CHECK(format_significant(0.5963473621372) == "0.5963473621");
}
