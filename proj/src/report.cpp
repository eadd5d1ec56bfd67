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

#include "divsum/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace divsum {

using nlohmann::json;

void to_json(json& j, const MethodResult& r) {
  j = json{{"method", r.method}, {"value", r.value}, {"error", r.error}, {"metadata", r.metadata}};
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
}

void from_json(const json& j, MethodResult& r) {
  j.at("method").get_to(r.method);
  j.at("value").get_to(r.value);
  j.at("error").get_to(r.error);
  j.at("metadata").get_to(r.metadata);
  if (j.at("exact").is_null()) {
    r.exact.reset();
  } else {
    r.exact = j.at("exact").get<std::string>();
  }
}

void to_json(json& j, const Table& t) {
  j = json{{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}};
}

void from_json(const json& j, Table& t) {
  j.at("name").get_to(t.name);
  j.at("columns").get_to(t.columns);
  j.at("rows").get_to(t.rows);
}

void to_json(json& j, const AgreementMatrix& a) {
  j = json{{"methods", a.methods}, {"delta", a.delta}};
}

void from_json(const json& j, AgreementMatrix& a) {
  j.at("methods").get_to(a.methods);
  j.at("delta").get_to(a.delta);
}

void to_json(json& j, const Check& c) {
  j = json{{"label", c.label},         {"computed", c.computed}, {"printed", c.printed},
           {"delta", c.delta},         {"tolerance", c.tolerance}, {"match", c.match},
           {"note", c.note}};
}

void from_json(const json& j, Check& c) {
  j.at("label").get_to(c.label);
  j.at("computed").get_to(c.computed);
  j.at("printed").get_to(c.printed);
  j.at("delta").get_to(c.delta);
  j.at("tolerance").get_to(c.tolerance);
  j.at("match").get_to(c.match);
  j.at("note").get_to(c.note);
}

void to_json(json& j, const Report& r) {
  j = json{{"schema_version", r.schema_version},
           {"command", r.command},
           {"subject", r.subject},
           {"results", r.results},
           {"tables", r.tables},
           {"provenance", r.provenance},
           {"checks", r.checks},
           {"mismatch", r.mismatch}};
  j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
}

void from_json(const json& j, Report& r) {
  j.at("schema_version").get_to(r.schema_version);
  if (r.schema_version != kReportSchemaVersion) {
    throw std::invalid_argument("report: unsupported schema_version " + std::to_string(r.schema_version));
  }
  j.at("command").get_to(r.command);
  j.at("subject").get_to(r.subject);
  j.at("results").get_to(r.results);
  j.at("tables").get_to(r.tables);
  j.at("provenance").get_to(r.provenance);
  j.at("checks").get_to(r.checks);
  j.at("mismatch").get_to(r.mismatch);
  if (j.at("agreement").is_null()) {
    r.agreement.reset();
  } else {
    r.agreement = j.at("agreement").get<AgreementMatrix>();
  }
}

void Report::add_check(Check check) {
  if (!check.match) mismatch = true;
  checks.push_back(std::move(check));
}

AgreementMatrix agreement_matrix(const std::vector<MethodResult>& results) {
  AgreementMatrix out;
  const std::size_t n = results.size();
  out.delta.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    out.methods.push_back(results[i].method);
    for (std::size_t j = 0; j < i; ++j) {
      const double d = std::fabs(results[i].value - results[j].value);
      out.delta[i][j] = d;
      out.delta[j][i] = d;
    }
  }
  return out;
}

std::string render_json(const Report& report) {
  return json(report).dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
  try {
    return json::parse(text).get<Report>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: malformed JSON: ") + e.what());
  }
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

namespace {

std::string short_error(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", value);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << '\n';
}

std::vector<std::size_t> column_widths(const Table& t) {
  std::vector<std::size_t> w(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
  }
  return w;
}

void text_row(std::ostringstream& os, const std::vector<std::string>& fields,
              const std::vector<std::size_t>& widths) {
  os << ' ';
  for (std::size_t c = 0; c < fields.size(); ++c) {
    os << ' ' << fields[c];
    if (c + 1 < fields.size()) os << std::string(widths[c] - fields[c].size(), ' ');
  }
  os << '\n';
}

}  // namespace

std::string render_csv(const Report& report) {
  std::ostringstream os;
  bool first = true;
  auto block = [&] {
    if (!first) os << '\n';
    first = false;
  };
  if (!report.results.empty()) {
    block();
    csv_row(os, {"method", "value", "error", "exact"});
    for (const auto& r : report.results) {
      csv_row(os, {r.method, format_significant(r.value, 17), format_significant(r.error, 17),
                   r.exact.value_or("")});
    }
  }
  if (report.agreement) {
    block();
    csv_row(os, {"method_a", "method_b", "delta"});
    const auto& a = *report.agreement;
    for (std::size_t i = 0; i < a.methods.size(); ++i) {
      for (std::size_t j = i + 1; j < a.methods.size(); ++j) {
        csv_row(os, {a.methods[i], a.methods[j], format_significant(a.delta[i][j], 17)});
      }
    }
  }
  for (const auto& t : report.tables) {
    block();
    csv_row(os, t.columns);
    for (const auto& row : t.rows) csv_row(os, row);
  }
  if (!report.checks.empty()) {
    block();
    csv_row(os, {"label", "computed", "printed", "delta", "tolerance", "match"});
    for (const auto& c : report.checks) {
      csv_row(os, {c.label, c.computed, c.printed, format_significant(c.delta, 17),
                   format_significant(c.tolerance, 17), c.match ? "match" : "mismatch"});
    }
  }
  return os.str();
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "divsum " << report.command;
  if (!report.subject.empty()) os << ": " << report.subject;
  os << '\n';
  if (!report.results.empty()) {
    os << "\nresults\n";
    Table t{"", {"method", "value", "error", "exact"}, {}};
    for (const auto& r : report.results) {
      t.rows.push_back({r.method, format_significant(r.value), "± " + short_error(r.error),
                        r.exact.value_or("")});
    }
    const auto w = column_widths(t);
    for (const auto& row : t.rows) text_row(os, row, w);
    for (const auto& r : report.results) {
      for (const auto& [key, value] : r.metadata) os << "  " << r.method << '.' << key << " = " << value << '\n';
    }
  }
  if (report.agreement) {
    os << "\nagreement |delta|\n";
    const auto& a = *report.agreement;
    Table t{"", {""}, {}};
    for (const auto& m : a.methods) t.columns.push_back(m);
    for (std::size_t i = 0; i < a.methods.size(); ++i) {
      std::vector<std::string> row{a.methods[i]};
      for (double d : a.delta[i]) row.push_back(short_error(d));
      t.rows.push_back(std::move(row));
    }
    const auto w = column_widths(t);
    text_row(os, t.columns, w);
    for (const auto& row : t.rows) text_row(os, row, w);
  }
  for (const auto& t : report.tables) {
    os << '\n' << t.name << '\n';
    const auto w = column_widths(t);
    text_row(os, t.columns, w);
    for (const auto& row : t.rows) text_row(os, row, w);
  }
  if (!report.checks.empty()) {
    os << "\nchecks\n";
    Table t{"", {"", "label", "computed", "printed", "|delta|"}, {}};
    for (const auto& c : report.checks) {
      t.rows.push_back({c.match ? "ok" : "MISMATCH", c.label, c.computed, c.printed, short_error(c.delta)});
    }
    const auto w = column_widths(t);
    for (const auto& row : t.rows) text_row(os, row, w);
    for (const auto& c : report.checks) {
      if (!c.note.empty()) os << "  note (" << c.label << "): " << c.note << '\n';
    }
  }
  if (!report.provenance.empty()) {
    os << "\nprovenance:";
    for (const auto& p : report.provenance) os << ' ' << p;
    os << '\n';
  }
  os << "\nmismatch: " << (report.mismatch ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace divsum
