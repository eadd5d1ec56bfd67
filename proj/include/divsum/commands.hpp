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

#ifndef DIVSUM_COMMANDS_HPP_
#define DIVSUM_COMMANDS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divsum/continued_fraction.hpp"
#include "divsum/difference.hpp"
#include "divsum/rational.hpp"
#include "divsum/report.hpp"
#include "divsum/series.hpp"

namespace divsum {

/// Bad flags or arguments; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SumMethod { transform, cf, integral, all };
enum class TableKind { differences, convergents };
enum class OutputFormat { text, csv, json };

SumMethod parse_sum_method(std::string_view text);
TableKind parse_table_kind(std::string_view text);
OutputFormat parse_output_format(std::string_view text);

struct ClosureRequest {
  enum class Mode { automatic, none, fixed } mode = Mode::automatic;
  ClosureKind kind = ClosureKind::paired;
  long parameter = 0;
};

/// "auto", "none", "paired:A", "single:N", or the shorthands "a=A", "n=N".
ClosureRequest parse_closure(std::string_view text);

/// Comma separated rationals, e.g. "1,-1,1/2".
TermList parse_coefficients(std::string_view text);

struct SeriesConfig {
  std::optional<FactorialFamily> family;
  std::optional<TermList> coefficients;
  SumMethod method = SumMethod::all;
  /// Terms fed to the transform (families only; default 30).
  std::optional<std::size_t> terms;
  /// Transform stages, or table rows.
  std::optional<std::size_t> depth;
  /// Leading terms moved into the constant before each transform stage.
  std::optional<std::size_t> peel;
  /// Partial numerators collapsed by the continued fraction method.
  std::optional<std::size_t> levels;
  /// Optional trapezoid cross-check for the integral method.
  std::optional<std::size_t> panels;
  double tolerance = 1e-10;
  ClosureRequest closure;
  DifferenceConvention convention = DifferenceConvention::forward;
  std::optional<DecimalProtocol> protocol;

  /// Throws UsageError unless exactly one of family / coefficients is set.
  void validate() const;
  std::string describe() const;
};

Report cmd_sum(const SeriesConfig& config);
Report cmd_table(const SeriesConfig& config, TableKind kind);

/// s15 s16 s17 s18 s19 s22 s23 s25 s29.
const std::vector<std::string>& repro_sections();

/// Throws UsageError for an unknown section.
Report cmd_repro(std::string_view section);

std::string render(const Report& report, OutputFormat format);

}  // namespace divsum

#endif  // DIVSUM_COMMANDS_HPP_
