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

// divsum: sum divergent factorial series, print their tables, and rerun the
// worked examples.
//
//   divsum sum --p 1 --q 1 --m 1 --x 1 --method all
//   divsum sum --coeffs 1,-1,1,-1 --method transform
//   divsum table convergents --p 1 --q 1 --depth 10
//   divsum repro s25 --format json --out s25.json

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "divsum/commands.hpp"

namespace {

struct Flags {
  std::optional<std::string> p, q, m, x, coeffs;
  std::string method = "all";
  std::optional<std::size_t> terms, depth, peel, levels, panels;
  std::optional<unsigned> places;
  double tol = 1e-10;
  std::string closure = "auto";
  std::string convention = "forward";
  std::string format = "text";
  std::optional<std::string> out;
};

void add_series_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--p", f.p, "family parameter p (rational, e.g. 1 or 1/2)");
  cmd->add_option("--q", f.q, "family parameter q");
  cmd->add_option("--m", f.m, "family exponent offset m");
  cmd->add_option("--x", f.x, "family argument x");
  cmd->add_option("--coeffs", f.coeffs, "explicit signed coefficients, comma separated");
  cmd->add_option("--terms", f.terms, "terms generated from a family");
  cmd->add_option("--depth", f.depth, "transform stages, or table rows / orders");
  cmd->add_option("--peel", f.peel, "leading terms peeled before each transform stage");
  cmd->add_option("--levels", f.levels, "partial numerators collapsed by the cf method");
  cmd->add_option("--panels", f.panels, "trapezoid panels for the integral cross-check");
  cmd->add_option("--tol", f.tol, "quadrature tolerance");
  cmd->add_option("--closure", f.closure, "auto | none | paired:A | single:N | a=A | n=N");
}

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text | csv | json");
  cmd->add_option("--out", f.out, "write the report to FILE instead of stdout");
}

divsum::SeriesConfig make_config(const Flags& f) {
  divsum::SeriesConfig c;
  if (f.p || f.q || f.m || f.x) {
    auto get = [](const std::optional<std::string>& s) {
      return s ? divsum::parse_rational(*s) : divsum::Rational(1);
    };
    c.family.emplace(get(f.p), get(f.q), get(f.m), get(f.x));
  }
  if (f.coeffs) c.coefficients = divsum::parse_coefficients(*f.coeffs);
  c.method = divsum::parse_sum_method(f.method);
  c.terms = f.terms;
  c.depth = f.depth;
  c.peel = f.peel;
  c.levels = f.levels;
  c.panels = f.panels;
  c.tolerance = f.tol;
  c.closure = divsum::parse_closure(f.closure);
  if (f.convention == "forward") {
    c.convention = divsum::DifferenceConvention::forward;
  } else if (f.convention == "reversed") {
    c.convention = divsum::DifferenceConvention::reversed;
  } else {
    throw divsum::UsageError("unknown convention '" + f.convention + "' (forward|reversed)");
  }
  if (f.places) c.protocol = divsum::DecimalProtocol{*f.places};
  return c;
}

void emit(const divsum::Report& report, const Flags& f) {
  const std::string text = divsum::render(report, divsum::parse_output_format(f.format));
  if (!f.out) {
    std::cout << text;
    return;
  }
  std::ofstream os(*f.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + *f.out + "' for writing");
  os << text;
  if (!os) throw std::runtime_error("failed writing '" + *f.out + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sums of divergent factorial series by difference transforms, continued fractions and quadrature"};
  app.require_subcommand(1);
  Flags f;
  std::string table_kind, section;

  auto* sum = app.add_subcommand("sum", "sum a series by one or all methods");
  add_series_flags(sum, f);
  sum->add_option("--method", f.method, "transform | cf | integral | all");
  add_output_flags(sum, f);

  auto* table = app.add_subcommand("table", "print a difference or convergent table");
  table->add_option("kind", table_kind, "differences | convergents")->required();
  add_series_flags(table, f);
  table->add_option("--convention", f.convention, "forward | reversed (differences)");
  table->add_option("--places", f.places, "round entries to this many decimals before differencing");
  add_output_flags(table, f);

  auto* repro = app.add_subcommand("repro", "rerun a worked example and compare with the printed values");
  repro->add_option("section", section, "s15 s16 s17 s18 s19 s22 s23 s25 s29")->required();
  add_output_flags(repro, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    divsum::Report report;
    if (*sum) {
      report = divsum::cmd_sum(make_config(f));
    } else if (*table) {
      report = divsum::cmd_table(make_config(f), divsum::parse_table_kind(table_kind));
    } else {
      report = divsum::cmd_repro(section);
    }
    emit(report, f);
  } catch (const divsum::UsageError& e) {
    std::cerr << "divsum: usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "divsum: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
