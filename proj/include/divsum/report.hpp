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

#ifndef DIVSUM_REPORT_HPP_
#define DIVSUM_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divsum {

inline constexpr int kReportSchemaVersion = 1;

struct MethodResult {
  std::string method;
  double value = 0;
  double error = 0;
  /// Exact rational value as "num/den" when the method produced one.
  std::optional<std::string> exact;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const MethodResult&, const MethodResult&) = default;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

/// Pairwise |value_i - value_j| between methods; symmetric with zero diagonal.
struct AgreementMatrix {
  std::vector<std::string> methods;
  std::vector<std::vector<double>> delta;

  friend bool operator==(const AgreementMatrix&, const AgreementMatrix&) = default;
};

/// One computed-versus-printed comparison.
struct Check {
  std::string label;
  std::string computed;
  std::string printed;
  double delta = 0;
  double tolerance = 0;
  bool match = false;
  std::string note;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  int schema_version = kReportSchemaVersion;
  std::string command;
  std::string subject;
  std::vector<MethodResult> results;
  std::vector<Table> tables;
  std::vector<std::string> provenance;
  std::optional<AgreementMatrix> agreement;
  std::vector<Check> checks;
  bool mismatch = false;

  /// Appends and folds a failed comparison into the mismatch flag.
  void add_check(Check check);

  friend bool operator==(const Report&, const Report&) = default;
};

AgreementMatrix agreement_matrix(const std::vector<MethodResult>& results);

/// Doubles are written with round-trip precision, so parsing the output gives
/// back an equal Report.
std::string render_json(const Report& report);
Report parse_report_json(std::string_view text);
std::string render_csv(const Report& report);
std::string render_text(const Report& report);

/// 10 significant digits.
std::string format_significant(double value, int digits = 10);

}  // namespace divsum

#endif  // DIVSUM_REPORT_HPP_
