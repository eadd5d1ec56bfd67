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

#include "divsum/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "divsum/quadrature.hpp"

namespace divsum {

namespace {

constexpr std::size_t kDefaultTransformTerms = 30;
constexpr std::size_t kDefaultFamilyStages = 5;
constexpr std::size_t kDefaultFamilyPeel = 3;
constexpr std::size_t kDefaultLevels = 40;
constexpr std::size_t kDefaultTableRows = 10;
constexpr std::size_t kDefaultDifferenceTerms = 8;
constexpr std::size_t kClosureLookahead = 6;

std::string join(const TermList& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += to_string(terms[i]);
  }
  return out;
}

std::string closure_label(const std::optional<TailClosure>& c) {
  if (!c) return "none";
  return c->kind == ClosureKind::paired ? "paired a=" + std::to_string(c->parameter)
                                        : "single n=" + std::to_string(c->parameter);
}

long parse_closure_parameter(std::string_view text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw UsageError("closure parameter must be a positive integer, got '" + std::string(text) + "'");
  }
  return std::stol(std::string(text));
}

MethodResult transform_result(const SeriesConfig& config) {
  TermList terms;
  std::size_t stages = 1, peel = 0;
  if (config.family) {
    terms = generate_terms(*config.family, config.terms.value_or(kDefaultTransformTerms));
    stages = config.depth.value_or(kDefaultFamilyStages);
    peel = config.peel.value_or(kDefaultFamilyPeel);
  } else {
    terms = *config.coefficients;
    stages = config.depth.value_or(1);
    peel = config.peel.value_or(0);
  }
  if (stages == 0) throw UsageError("transform needs at least one stage");
  const std::vector<TransformStage> schedule(stages, TransformStage{Rational(1), peel});
  const IteratedTransform it = iterated_transform(terms, schedule);

  // Truncate before the smallest final term; that term is the error bar.
  Rational value = it.constant;
  Rational error = 0;
  std::size_t cut = it.terms.size();
  if (!it.terms.empty()) {
    cut = 0;
    for (std::size_t i = 1; i < it.terms.size(); ++i) {
      if (abs(it.terms[i]) < abs(it.terms[cut])) cut = i;
    }
    for (std::size_t i = 0; i < cut; ++i) value += it.factor * it.terms[i];
    error = abs(it.factor * it.terms[cut]);
  }
  MethodResult r;
  r.method = "transform";
  r.value = to_double(value);
  r.error = to_double(error);
  r.exact = to_string(value);
  r.metadata = {{"terms", std::to_string(terms.size())},
                {"stages", std::to_string(stages)},
                {"peel", std::to_string(peel)},
                {"truncated_at", std::to_string(cut)}};
  return r;
}

MethodResult cf_result(const SeriesConfig& config) {
  GeneralizedCF cf;
  std::size_t levels = 0;
  if (config.family) {
    levels = config.levels.value_or(kDefaultLevels);
    cf = factorial_cf(*config.family, levels + kClosureLookahead);
  } else {
    const TermList& c = *config.coefficients;
    if (c.size() < 2) throw std::invalid_argument("cf method needs at least two coefficients");
    cf = series_to_cf(c, c.size() - 1);
    levels = config.levels.value_or(std::min(kDefaultLevels, cf.partials.size()));
  }
  std::optional<TailClosure> closure;
  switch (config.closure.mode) {
    case ClosureRequest::Mode::automatic: closure = detect_closure(cf, levels); break;
    case ClosureRequest::Mode::none: break;
    case ClosureRequest::Mode::fixed:
      closure = config.closure.kind == ClosureKind::paired ? tail_closure_paired(config.closure.parameter)
                                                           : tail_closure_single(config.closure.parameter);
      break;
  }
  const CFSum s = sum_by_cf(cf, levels, closure);
  MethodResult r;
  r.method = "cf";
  r.value = s.value;
  r.error = s.error;
  r.metadata = {{"levels", std::to_string(levels)},
                {"closure", closure_label(closure)},
                {"lower", format_significant(s.lower, 17)},
                {"upper", format_significant(s.upper, 17)}};
  if (closure) {
    r.metadata["closure_root"] = format_significant(closure->root, 17);
    r.metadata["tail_value"] = format_significant(closure->tail_value, 17);
  }
  return r;
}

std::vector<MethodResult> integral_results(const SeriesConfig& config) {
  if (!config.family) throw UsageError("integral method needs a family (--p --q --m --x)");
  const FactorialFamily& f = *config.family;
  std::vector<MethodResult> out;
  const QuadratureResult q = borel_oracle(f, config.tolerance);
  MethodResult r;
  r.method = "integral";
  r.value = q.value;
  r.error = q.error_estimate;
  r.metadata = {{"tolerance", format_significant(config.tolerance, 3)},
                {"nodes", std::to_string(q.nodes)},
                {"verified", q.verified ? "true" : "false"}};
  out.push_back(std::move(r));
  if (config.panels) {
    if (f.x() != 1) throw std::invalid_argument("trapezoid cross-check needs x = 1");
    const auto spec = IntegrandSpec::general(f.p(), f.q(), f.m(), 1.0);
    const QuadratureResult t = trapezoid_unit_interval(spec, *config.panels);
    MethodResult tr;
    tr.method = "trapezoid";
    tr.value = t.value;
    tr.error = t.error_estimate;
    tr.metadata = {{"panels", std::to_string(*config.panels)}};
    out.push_back(std::move(tr));
  }
  return out;
}

}  // namespace

SumMethod parse_sum_method(std::string_view text) {
  if (text == "transform") return SumMethod::transform;
  if (text == "cf") return SumMethod::cf;
  if (text == "integral") return SumMethod::integral;
  if (text == "all") return SumMethod::all;
  throw UsageError("unknown method '" + std::string(text) + "' (transform|cf|integral|all)");
}

TableKind parse_table_kind(std::string_view text) {
  if (text == "differences") return TableKind::differences;
  if (text == "convergents") return TableKind::convergents;
  throw UsageError("unknown table '" + std::string(text) + "' (differences|convergents)");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw UsageError("unknown format '" + std::string(text) + "' (text|csv|json)");
}

ClosureRequest parse_closure(std::string_view text) {
  ClosureRequest r;
  if (text == "auto") return r;
  if (text == "none") {
    r.mode = ClosureRequest::Mode::none;
    return r;
  }
  r.mode = ClosureRequest::Mode::fixed;
  const auto sep = text.find_first_of(":=");
  if (sep == std::string_view::npos) throw UsageError("bad closure '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, sep);
  if (head == "paired" || head == "a") {
    r.kind = ClosureKind::paired;
  } else if (head == "single" || head == "n") {
    r.kind = ClosureKind::single;
  } else {
    throw UsageError("bad closure '" + std::string(text) + "' (auto|none|paired:A|single:N)");
  }
  r.parameter = parse_closure_parameter(text.substr(sep + 1));
  return r;
}

TermList parse_coefficients(std::string_view text) {
  TermList out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    std::string_view field = text.substr(start, end - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    try {
      out.push_back(parse_rational(field));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("coefficients: ") + e.what());
    }
    start = end + 1;
  }
  return out;
}

void SeriesConfig::validate() const {
  if (family.has_value() == coefficients.has_value()) {
    throw UsageError("give exactly one of a family (--p --q --m --x) or --coeffs");
  }
  if (coefficients && coefficients->empty()) throw UsageError("--coeffs is empty");
  if (!(tolerance > 0)) throw UsageError("--tol must be positive");
}

std::string SeriesConfig::describe() const {
  if (family) {
    return "family p=" + to_string(family->p()) + " q=" + to_string(family->q()) +
           " m=" + to_string(family->m()) + " x=" + to_string(family->x());
  }
  return coefficients ? "coefficients " + join(*coefficients) : "";
}

Report cmd_sum(const SeriesConfig& config) {
  config.validate();
  Report report;
  report.command = "sum";
  report.subject = config.describe();
  const bool all = config.method == SumMethod::all;
  if (all || config.method == SumMethod::transform) {
    report.results.push_back(transform_result(config));
    report.provenance.push_back("iterated_transform");
  }
  if (all || config.method == SumMethod::cf) {
    report.results.push_back(cf_result(config));
    report.provenance.push_back(config.family ? "factorial_cf" : "series_to_cf");
  }
  if ((all && config.family) || config.method == SumMethod::integral) {
    for (auto& r : integral_results(config)) report.results.push_back(std::move(r));
    report.provenance.push_back("borel_oracle");
  }
  if (all) report.agreement = agreement_matrix(report.results);
  return report;
}

Report cmd_table(const SeriesConfig& config, TableKind kind) {
  config.validate();
  Report report;
  report.command = kind == TableKind::differences ? "table differences" : "table convergents";
  report.subject = config.describe();
  if (kind == TableKind::differences) {
    const TermList terms = config.coefficients
                               ? *config.coefficients
                               : generate_terms(*config.family, config.terms.value_or(kDefaultDifferenceTerms));
    const auto table = build_table(terms, config.convention, config.protocol);
    const std::size_t max_order = std::min(config.depth.value_or(table.depth()), table.depth());
    Table t;
    t.name = config.convention == DifferenceConvention::forward ? "differences (forward)"
                                                                : "differences (reversed)";
    t.columns.push_back("order");
    for (std::size_t i = 0; i < terms.size(); ++i) t.columns.push_back(std::to_string(i));
    for (std::size_t k = 0; k <= max_order; ++k) {
      std::vector<std::string> row{std::to_string(k)};
      for (const auto& v : table.rows[k]) {
        row.push_back(config.protocol ? format_fixed(v, config.protocol->decimal_places) : to_string(v));
      }
      row.resize(terms.size() + 1);
      t.rows.push_back(std::move(row));
    }
    report.tables.push_back(std::move(t));
    report.provenance.push_back("build_table");
    return report;
  }
  const std::size_t rows = config.depth.value_or(kDefaultTableRows);
  if (rows == 0) throw UsageError("--depth must be positive");
  GeneralizedCF cf;
  if (config.family) {
    cf = factorial_cf(*config.family, rows);
  } else {
    const TermList& c = *config.coefficients;
    cf = series_to_cf(c, std::min(c.size() - 1, rows));
  }
  const auto conv = convergents(cf, std::min(rows, cf.level_count() + 1));
  Table t;
  t.name = "convergents";
  t.columns = {"n", "numerator", "h", "k", "value", "reduced"};
  for (std::size_t n = 0; n < conv.size(); ++n) {
    const Rational v = conv[n].value();
    t.rows.push_back({std::to_string(n), n == 0 ? "" : to_string(cf.numerator(n - 1)), to_string(conv[n].h),
                      to_string(conv[n].k), format_fixed(v, 10), to_string(v)});
  }
  report.tables.push_back(std::move(t));
  report.provenance.push_back(config.family ? "factorial_cf" : "series_to_cf");
  return report;
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return render_json(report);
    case OutputFormat::csv: return render_csv(report);
    case OutputFormat::text: break;
  }
  return render_text(report);
}

}  // namespace divsum
