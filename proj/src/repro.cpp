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
#include <functional>
#include <map>

#include "divsum/commands.hpp"
#include "divsum/quadrature.hpp"

namespace divsum {

namespace {

Rational R(std::string_view text) { return parse_rational(text); }

TermList Rs(std::initializer_list<std::string_view> texts) {
  TermList out;
  for (auto t : texts) out.push_back(parse_rational(t));
  return out;
}

std::string join(const TermList& terms, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += sep;
    out += to_string(terms[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

TermList magnitudes(TermList terms) {
  for (auto& t : terms) t = abs(t);
  return terms;
}

Check exact_check(std::string label, const Rational& computed, const Rational& printed,
                  std::string note = {}) {
  return {std::move(label), to_string(computed), to_string(printed), to_double(abs(computed - printed)),
          0.0, computed == printed, std::move(note)};
}

// Exact comparison of a list, printed entries kept as written (e.g. 2/4).
Check list_check(std::string label, const TermList& computed, const std::vector<std::string>& printed,
                 std::string note = {}) {
  bool match = computed.size() == printed.size();
  double delta = 0;
  for (std::size_t i = 0; i < std::min(computed.size(), printed.size()); ++i) {
    const Rational p = R(printed[i]);
    delta = std::max(delta, to_double(abs(computed[i] - p)));
    if (computed[i] != p) match = false;
  }
  return {std::move(label), join(computed), join(printed), delta, 0.0, match, std::move(note)};
}

// Match when the computed value rounds (half away from zero) to the printed
// decimal string.
Check rounded_check(std::string label, const Rational& computed, std::string printed, unsigned places,
                    std::string note = {}) {
  const std::string shown = format_fixed(computed, places);
  const double delta = to_double(abs(computed - R(printed)));
  const bool match = shown == printed;
  return {std::move(label), shown, std::move(printed), delta, 0.5 * std::pow(10.0, -double(places)),
          match, std::move(note)};
}

Check rounded_check(std::string label, double computed, std::string printed, unsigned places,
                    std::string note = {}) {
  return rounded_check(std::move(label), from_double(computed), std::move(printed), places, std::move(note));
}

Check tolerance_check(std::string label, double computed, std::string printed, double tolerance,
                      std::string note = {}) {
  const double delta = std::fabs(computed - to_double(R(printed)));
  return {std::move(label), format_significant(computed, 15), std::move(printed), delta, tolerance,
          delta <= tolerance, std::move(note)};
}

Check text_check(std::string label, std::string computed, std::string printed, std::string note = {}) {
  const bool match = computed == printed;
  return {std::move(label), std::move(computed), std::move(printed), match ? 0.0 : 1.0, 0.0, match,
          std::move(note)};
}

std::string tuple_string(const MobiusMap& m) {
  return "(" + to_string(m.alpha) + ", " + to_string(m.beta) + ", " + to_string(m.gamma) + ", " +
         to_string(m.delta) + ")";
}

std::string fraction_string(const Convergent& c) { return to_string(c.h) + "/" + to_string(c.k); }

MethodResult result(std::string method, double value, double error, std::optional<std::string> exact = {}) {
  MethodResult r;
  r.method = std::move(method);
  r.value = value;
  r.error = error;
  r.exact = std::move(exact);
  return r;
}

Report new_report(std::string_view section, std::string subject) {
  Report report;
  report.command = "repro " + std::string(section);
  report.subject = std::move(subject);
  report.provenance.push_back(std::string(section));
  return report;
}

Report repro_s15() {
  Report report = new_report("s15", "Euler transform of three alternating series");
  const std::vector<std::tuple<std::string, TermList, std::string>> cases = {
      {"1 - 1 + 1 - 1 + 1", Rs({"1", "-1", "1", "-1", "1"}), "1/2"},
      {"1 - 2 + 3 - 4 + 5", Rs({"1", "-2", "3", "-4", "5"}), "1/4"},
      {"1 - 4 + 9 - 16 + 25", Rs({"1", "-4", "9", "-16", "25"}), "0"},
  };
  Table t{"transformed terms", {"series", "transformed", "sum"}, {}};
  for (const auto& [name, terms, printed] : cases) {
    const TermList out = euler_transform(terms);
    Rational sum = 0;
    for (const auto& v : out) sum += v;
    t.rows.push_back({name, join(out), to_string(sum)});
    report.add_check(exact_check("sum " + name, sum, R(printed)));
    report.results.push_back(result(name, to_double(sum), 0, to_string(sum)));
  }
  report.tables.push_back(std::move(t));
  return report;
}

Report repro_s16() {
  Report report = new_report("s16", "iterated transform of 1 - 1 + 2 - 6 + 24 - ...");
  const TermList halved = Rs({"1", "3", "12", "60", "360", "2520", "20160", "181440"});
  const std::vector<std::vector<std::string>> printed_rows = {
      {"2", "9", "48", "300", "2160", "17640", "161280"},
      {"7", "39", "252", "1860", "15480", "143640"},
      {"32", "213", "1608", "13620", "128160"},
      {"181", "1395", "12012", "114540"},
      {"1214", "10617", "102528"},
      {"9403", "91911"},
      {"82508"},
  };
  const auto table = build_table(halved, DifferenceConvention::forward);
  for (std::size_t k = 0; k < printed_rows.size(); ++k) {
    report.add_check(list_check("first stage differences, order " + std::to_string(k + 1), table.rows[k + 1],
                                printed_rows[k]));
  }

  const IteratedTransform it = reproduce_A_protocol();
  const auto& s0 = it.stages.at(0);
  const auto& s1 = it.stages.at(1);
  const auto& s2 = it.stages.at(2);
  report.add_check(list_check("first stage input", s0.input,
                              {"1", "-3", "12", "-60", "360", "-2520", "20160", "-181440"}));
  report.add_check(list_check("first stage output", s0.output,
                              {"1/2", "-2/4", "7/8", "-32/16", "181/32", "-1214/64", "9403/128", "-82508/256"}));
  report.add_check(list_check("second stage input", s1.input,
                              {"7/4", "-32/8", "181/16", "-1214/32", "9403/64", "-82508/128"}));
  const std::vector<std::vector<std::string>> second_rows = {
      {"18/8", "117/16", "852/32", "6975/64", "63702/128"},
      {"81/16", "618/32", "5271/64", "49752/128"},
      {"456/32", "4035/64", "39210/128"},
      {"3123/64", "31140/128"},
      {"24894/128"},
  };
  const auto table1 = build_table(magnitudes(s1.input), DifferenceConvention::forward);
  for (std::size_t k = 0; k < second_rows.size(); ++k) {
    report.add_check(list_check("second stage differences, order " + std::to_string(k + 1),
                                table1.rows[k + 1], second_rows[k]));
  }
  report.add_check(list_check("second stage output", s1.output,
                              {"7/8", "-18/32", "81/128", "-456/512", "3123/2048", "-24894/8192"}));
  report.add_check(exact_check("constant peeled before the third stage", s2.peeled, R("5/16")));
  report.add_check(list_check("third stage input", s2.input, {"81/128", "-456/512", "3123/2048", "-24894/8192"}));
  const std::vector<std::vector<std::string>> third_rows = {
      {"132/512", "1299/2048", "12402/8192"},
      {"771/2048", "7206/8192"},
      {"4122/8192"},
  };
  const auto table2 = build_table(magnitudes(s2.input), DifferenceConvention::forward);
  for (std::size_t k = 0; k < third_rows.size(); ++k) {
    report.add_check(list_check("third stage differences, order " + std::to_string(k + 1),
                                table2.rows[k + 1], third_rows[k]));
  }
  report.add_check(list_check("third stage output", s2.output, {"81/256", "-132/2048", "771/16384", "-4122/131072"}));
  report.add_check(exact_check("first pair of final terms", s2.output[0] + s2.output[1], R("516/2048")));
  report.add_check(exact_check("second pair of final terms", s2.output[2] + s2.output[3], R("2046/131072")));
  const Rational a = it.value();
  report.add_check(exact_check("A", a, R("38015/65536")));
  report.add_check(rounded_check("A in decimals", a, "0.580", 3));
  report.results.push_back(result("iterated transform", to_double(a), 0, to_string(a)));

  Table t{"stages", {"stage", "scale", "peel", "peeled", "input", "output"}, {}};
  const auto schedule = wallis_iterated_schedule();
  for (std::size_t i = 0; i < it.stages.size(); ++i) {
    t.rows.push_back({std::to_string(i + 1), to_string(schedule[i].scale), std::to_string(schedule[i].peel),
                      to_string(it.stages[i].peeled), join(it.stages[i].input), join(it.stages[i].output)});
  }
  report.tables.push_back(std::move(t));
  return report;
}

Report repro_s17() {
  Report report = new_report("s17", "reciprocal extrapolation of B(n+1) = n B(n) + 1");
  const TermList b = generate_b_sequence(13);
  report.add_check(list_check("B(1..7)", TermList(b.begin(), b.begin() + 7),
                              {"1", "2", "5", "16", "65", "326", "1957"}));
  const auto btable = build_table(TermList(b.begin(), b.begin() + 7), DifferenceConvention::forward);
  const std::vector<std::vector<std::string>> brows = {
      {"1", "3", "11", "49", "261", "1631"}, {"2", "8", "38", "212", "1370"}, {"6", "30", "174", "1158"},
      {"24", "144", "984"},                  {"120", "840"},                  {"720"},
  };
  for (std::size_t k = 0; k < brows.size(); ++k) {
    report.add_check(list_check("B differences, order " + std::to_string(k + 1), btable.rows[k + 1], brows[k]));
  }

  const ReciprocalExtrapolation x = reciprocal_b_extrapolation(13, 5);
  const std::vector<std::string> printed = {"1.0000000", "0.5000000", "0.2000000", "0.0625000",
                                            "0.0153846", "0.0030675", "0.0005110", "0.0000370",
                                            "0.0000091", "0.0000010", "0.0000001"};
  for (std::size_t i = 0; i < printed.size(); ++i) {
    std::string note;
    if (i == 7) note = "1/13700 = 0.0000730; the neighbouring printed difference 4380 needs 0.0000730";
    report.add_check(rounded_check("1/B(" + std::to_string(i + 1) + ")", x.reciprocals[i], printed[i], 7, note));
  }
  const std::vector<std::string> heads = {"0.5000000", "0.2000000", "0.0375000", "-0.0346154", "-0.0511445"};
  for (std::size_t k = 0; k < heads.size(); ++k) {
    report.add_check(rounded_check("difference head, order " + std::to_string(k + 1), x.table.head(k + 1), heads[k], 7));
  }
  report.add_check(rounded_check("first difference 1/1957 - 1/13700", x.table.rows[1].at(6), "0.0004380", 7));
  report.add_check(exact_check("1/A", x.inverse_value, R("1.6517401")));
  report.add_check(rounded_check("A", x.value, "0.6", 1));
  report.results.push_back(result("1/A", to_double(x.inverse_value), 0, to_string(x.inverse_value)));
  report.results.push_back(result("A", x.value, 0));

  Table t{"reciprocal differences (reversed, 7 decimals)", {"order", "entries"}, {}};
  for (std::size_t k = 0; k <= x.depth; ++k) {
    std::vector<std::string> cells;
    for (const auto& v : x.table.rows[k]) cells.push_back(format_fixed(v, 7));
    t.rows.push_back({std::to_string(k), join(cells, " ")});
  }
  report.tables.push_back(std::move(t));
  return report;
}

Report repro_s18() {
  Report report = new_report("s18", "logarithmic extrapolation of B");
  const LogExtrapolation x = log_extrapolate_A(9, 6);
  const std::vector<std::string> logs = {"0.0000000", "0.3010300", "0.6989700", "1.2041200", "1.8129134",
                                         "2.5132176", "3.2915908", "4.1367206", "5.0398145"};
  for (std::size_t i = 0; i < logs.size(); ++i) {
    report.add_check(rounded_check("log B(" + std::to_string(i + 1) + ")", x.logs[i], logs[i], 7));
  }
  const std::vector<std::string> heads = {"0.3010300", "0.0969100", "0.0103000", "-0.0138666",
                                          "0.0053006", "0.0019562", "-0.0057744", "0.0065446"};
  for (std::size_t k = 0; k < heads.size(); ++k) {
    std::string note;
    if (k == 7) note = "the companion column carries 0.0065445";
    report.add_check(rounded_check("log difference head, order " + std::to_string(k + 1), x.log_table.head(k + 1),
                                   heads[k], 7, note));
  }
  const std::vector<std::string> series = {"-0.3010300", "0.0969100", "-0.0103000", "-0.0138666",
                                           "-0.0053006", "0.0019562", "0.0057744", "0.0065445"};
  for (std::size_t k = 0; k < series.size(); ++k) {
    report.add_check(rounded_check("log A series, term " + std::to_string(k + 1), -x.inverse_series[k], series[k], 7));
  }
  const std::vector<std::string> halved = {"0.0310300", "0.2041200", "0.1175100",
                                           "0.0550666", "0.0359570", "0.0826928"};
  for (std::size_t k = 0; k < halved.size(); ++k) {
    std::string note;
    if (k == 0) note = "the arithmetic needs 0.3010300 (= log 2); 0.0310300 is a transposition";
    const Rational scaled = x.transformed[k] * pow_int(Rational(2), static_cast<long>(k + 1));
    report.add_check(rounded_check("transformed numerator " + std::to_string(k + 1), scaled, halved[k], 7, note));
  }
  report.add_check(rounded_check("log A mantissa (log A = -1 + m)", 1 - x.log_inverse_rounded, "0.7779089", 7));
  report.add_check(tolerance_check("A", x.value, "0.59966", 1e-5, "10^-0.2220911 = 0.5996653; the printed figure is truncated"));
  report.results.push_back(result("log 1/A", to_double(x.log_inverse_rounded), 0, to_string(x.log_inverse_rounded)));
  report.results.push_back(result("A", x.value, 0));

  Table t{"log table (forward, 7 decimals)", {"order", "entries"}, {}};
  for (std::size_t k = 0; k < x.log_table.rows.size(); ++k) {
    std::vector<std::string> cells;
    for (const auto& v : x.log_table.rows[k]) cells.push_back(format_fixed(v, 7));
    t.rows.push_back({std::to_string(k), join(cells, " ")});
  }
  report.tables.push_back(std::move(t));
  return report;
}

Report repro_s19() {
  Report report = new_report("s19", "ten-panel trapezoid of e^(1 - 1/x)/x");
  const IntegrandSpec spec = IntegrandSpec::factorial_unit();
  const auto addends = trapezoid_addends(spec, 10);
  const std::vector<std::string> printed = {"0.00012341", "0.00915782", "0.03232399", "0.05578254", "0.07357589",
                                            "0.08556952", "0.09306272", "0.09735007", "0.09942659", "0.05000000"};
  report.add_check(rounded_check("addend 0", addends[0], "0", 0));
  for (std::size_t k = 1; k <= 10; ++k) {
    std::string note;
    if (k == 8) note = "e^(-1/4)/8 = 0.0973500979";
    report.add_check(rounded_check("addend " + std::to_string(k), addends[k], printed[k - 1], 8, note));
  }
  const QuadratureResult t = trapezoid_unit_interval(spec, 10);
  report.add_check(tolerance_check("A", t.value, "0.59637255", 2e-8,
                                   "the printed sum inherits the 3e-8 slip in addend 8"));

  const QuadratureResult tl = trapezoid_unit_interval(IntegrandSpec::log_unit(), 10);
  const QuadratureResult af = adaptive_integral(spec, 1e-12);
  const QuadratureResult al = adaptive_integral(IntegrandSpec::log_unit(), 1e-12);
  const QuadratureResult oracle = borel_oracle(1, 1, 1e-12);
  report.results.push_back(result("trapezoid e^(1-1/x)/x", t.value, t.error_estimate));
  report.results.push_back(result("trapezoid 1/(1-ln v)", tl.value, tl.error_estimate));
  report.results.push_back(result("adaptive e^(1-1/x)/x", af.value, af.error_estimate));
  report.results.push_back(result("adaptive 1/(1-ln v)", al.value, al.error_estimate));
  report.results.push_back(result("half-line oracle", oracle.value, oracle.error_estimate));
  report.agreement = agreement_matrix(report.results);

  Table tab{"ordinates", {"k", "y(k/10)", "addend"}, {}};
  for (std::size_t k = 0; k <= 10; ++k) {
    const double y = evaluate_integrand(spec, k == 10 ? 1.0 : double(k) / 10);
    tab.rows.push_back({std::to_string(k), format_fixed(y, 10), format_fixed(addends[k], 8)});
  }
  report.tables.push_back(std::move(tab));
  return report;
}

Report repro_s22() {
  Report report = new_report("s22", "convergents of 1/(1 + 1/(1 + 1/(1 + 2/(1 + 2/...)))");
  const GeneralizedCF cf = factorial_cf(FactorialFamily::wallis(), 10);
  report.add_check(list_check("partial numerators", cf.partials, {"1", "1", "2", "2", "3", "3", "4", "4", "5", "5"}));
  const auto conv = convergents(cf, 10);
  const std::vector<std::string> printed = {"0/1",  "1/1",  "1/2",  "2/3",    "4/7",
                                            "8/13", "20/34", "44/73", "124/209", "300/501"};
  TermList values;
  for (std::size_t i = 0; i < conv.size(); ++i) {
    report.add_check(text_check("convergent " + std::to_string(i), fraction_string(conv[i]), printed[i]));
    values.push_back(conv[i].value());
  }
  const auto b = bracket_and_average(values);
  auto side = [&](const std::string& name, const TermList& got, const std::vector<std::string>& want) {
    for (std::size_t i = 0; i < want.size(); ++i) {
      std::string note;
      if (want[i] == "0.5933001436") note = "124/209 = 0.5933014354; the averaged table uses the correct value";
      report.add_check(rounded_check(name + " " + std::to_string(i + 1), got.at(i), want[i], 10, note));
    }
  };
  side("too small", b.lower, {"0.0000000000", "0.5000000000", "0.5714285714", "0.5882352941", "0.5933001436"});
  side("too great", b.upper, {"1.0000000000", "0.6666666667", "0.6153846154", "0.6027397260", "0.5988023952"});
  // The averages were formed from the rounded decimals, so one unit in the
  // last place is allowed.
  auto averaged = [&](const std::string& name, const TermList& got, const std::vector<std::string>& want) {
    for (std::size_t i = 0; i < want.size(); ++i) {
      report.add_check(tolerance_check(name + " " + std::to_string(i + 1), to_double(got.at(i)), want[i], 1e-10));
    }
  };
  averaged("averaged too small", b.averaged_lower,
           {"0.5000000000", "0.5833333333", "0.5934065934", "0.5954875100", "0.5960519153"});
  averaged("averaged too great", b.averaged_upper, {"0.7500000000", "0.6190476190", "0.6018099548", "0.5980205807"});

  Table t{"convergents", {"n", "h/k", "value"}, {}};
  for (std::size_t i = 0; i < conv.size(); ++i) {
    t.rows.push_back({std::to_string(i), fraction_string(conv[i]), format_fixed(values[i], 10)});
  }
  report.tables.push_back(std::move(t));
  return report;
}

struct SegmentAudit {
  std::string name;
  std::size_t from, to;
  std::string printed;
};

Report repro_s23() {
  Report report = new_report("s23", "Moebius maps of segments of the Wallis fraction");
  const GeneralizedCF cf = factorial_cf(FactorialFamily::wallis(), 46);
  const std::string a_printed = "(491459820, 139931620, 824073141, 234662231)";
  const std::string p_printed = "(2381951, 649286, 887640, 187440)";
  const std::string q_printed = "(11437136, 2924816, 3697925, 643025)";
  const std::vector<SegmentAudit> audits = {
      {"A over numerators 1,1 .. 8,8 (as displayed)", 0, 17, a_printed},
      {"p over numerators 9,9 .. 15,15 (as displayed)", 17, 31, p_printed},
      {"q over numerators 16,16 .. 20,20", 31, 41, q_printed},
      {"A over numerators 1,1 .. 10,10", 0, 21, a_printed},
      {"p over numerators 11,11 .. 15,15", 21, 31, p_printed},
  };
  Table t{"segment maps", {"segment", "levels", "alpha", "beta", "gamma", "delta"}, {}};
  for (const auto& a : audits) {
    const MobiusMap m = collapse_segment(cf, a.from, a.to);
    std::string note;
    if (a.to == 17) note = "the printed integers belong to the split after numerators 10,10";
    if (a.from == 17) note = "the printed integers belong to numerators 11,11 .. 15,15";
    report.add_check(text_check(a.name, tuple_string(m), a.printed, note));
    t.rows.push_back({a.name, std::to_string(a.from) + ".." + std::to_string(a.to), to_string(m.alpha),
                      to_string(m.beta), to_string(m.gamma), to_string(m.delta)});
  }
  const MobiusMap whole = collapse_segment(cf, 0, 41);
  const MobiusMap chained =
      compose(collapse_segment(cf, 0, 21), compose(collapse_segment(cf, 21, 31), collapse_segment(cf, 31, 41)));
  report.add_check(text_check("segments compose to the whole", tuple_string(chained), tuple_string(whole)));
  report.tables.push_back(std::move(t));
  return report;
}

Report repro_s25() {
  Report report = new_report("s25", "tail closure a = 22 and the value of A");
  const TailClosure c = tail_closure_paired(22);
  report.add_check(list_check("cubic 2s^3 + 2s^2 - 43s - 22", TermList(c.cubic.begin(), c.cubic.end()),
                              {"2", "2", "-43", "-22"}));
  report.add_check(tolerance_check("s", c.root, "4.423", 5e-4));
  report.add_check(tolerance_check("r", c.tail_value, "4.31", 5e-3));
  const double misprint = (21 * c.root + 21) / (c.root + 2);
  report.add_check(tolerance_check("r by the printed formula (21s + 21)/(s + 2)", misprint, "4.31", 5e-3,
                                   "the denominator must be s + 22, as in the printed 113.883/26.423"));
  const Rational s_printed = R("4.423");
  report.add_check(exact_check("numerator 21s + 21 at s = 4.423", 21 * s_printed + 21, R("113.883")));
  report.add_check(exact_check("denominator s + 22 at s = 4.423", s_printed + 22, R("26.423")));

  const GeneralizedCF cf = factorial_cf(FactorialFamily::wallis(), 46);
  const MobiusMap ma = collapse_segment(cf, 0, 21);
  const MobiusMap mp = collapse_segment(cf, 21, 31);
  const MobiusMap mq = collapse_segment(cf, 31, 41);

  // Replaying the printed intermediates through the maps.
  auto num = [](const MobiusMap& m, const Rational& t) { return Rational(m.alpha) + Rational(m.beta) * t; };
  auto den = [](const MobiusMap& m, const Rational& t) { return Rational(m.gamma) + Rational(m.delta) * t; };
  const Rational r_printed = R("4.31");
  report.add_check(rounded_check("q numerator at r = 4.31", num(mq, r_printed), "24043093", 0));
  report.add_check(rounded_check("q denominator at r = 4.31", den(mq, r_printed), "6469363", 0));
  report.add_check(rounded_check("q = 24043093/6469363", R("24043093/6469363"), "3.71645446", 8));
  const Rational q_printed = R("3.71645446");
  report.add_check(rounded_check("p numerator at q = 3.71645446", num(mp, q_printed), "4794992.85", 2));
  report.add_check(rounded_check("p denominator at q = 3.71645446", den(mp, q_printed), "1584252.22", 2));
  report.add_check(rounded_check("p = 4794992.85/1584252.22", R("4794992.85") / R("1584252.22"), "3.0266600163", 10));
  const Rational p_printed = R("3.0266600163");
  report.add_check(rounded_check("A numerator at p = 3.0266600163", num(ma, p_printed), "914985259.27", 2));
  report.add_check(rounded_check("A denominator at p = 3.0266600163", den(ma, p_printed), "1534315932.90", 2));
  report.add_check(rounded_check("A = 914985259.27/1534315932.90", R("914985259.27") / R("1534315932.90"),
                                 "0.5963473621372", 13));

  // Our chain from the exact root.
  const Rational r = from_double(c.tail_value);
  const Rational q = mq(r);
  const Rational p = mp(q);
  const Rational a = ma(p);
  report.add_check(tolerance_check("q", to_double(q), "3.71645446", 1e-4));
  report.add_check(tolerance_check("p", to_double(p), "3.0266600163", 1e-4));
  report.add_check(tolerance_check("A", to_double(a), "0.5963473621372", 2e-10));
  const CFSum sum = sum_by_cf(FactorialFamily::wallis(), 40, c);
  const QuadratureResult oracle = borel_oracle(1, 1, 1e-12);
  report.results.push_back(result("closure chain", to_double(a), sum.error));
  report.results.push_back(result("half-line oracle", oracle.value, oracle.error_estimate));
  report.agreement = agreement_matrix(report.results);

  const SimpleCF scf = real_to_simple_cf(R("0.5963473621372"), 10);
  const std::vector<BigInt> leading(scf.quotients.begin(), scf.quotients.begin() + 9);
  std::vector<std::string> shown;
  for (const auto& v : leading) shown.push_back(to_string(v));
  report.add_check(text_check("partial quotients", join(shown), "0, 1, 1, 2, 10, 1, 1, 4, 2"));
  const auto sconv = scf.convergents();
  const std::vector<std::string> printed = {"0/1", "1/1", "1/2", "3/5", "31/52", "34/57", "65/109", "294/493", "653/1095"};
  for (std::size_t i = 0; i < printed.size(); ++i) {
    report.add_check(text_check("convergent " + std::to_string(i), fraction_string(sconv.at(i)), printed[i]));
  }
  Table t{"simple continued fraction of 0.5963473621372", {"i", "quotient", "convergent"}, {}};
  for (std::size_t i = 0; i < scf.quotients.size(); ++i) {
    t.rows.push_back({std::to_string(i), to_string(scf.quotients[i]), fraction_string(sconv[i])});
  }
  report.tables.push_back(std::move(t));
  Table chain{"chain", {"symbol", "value"}, {}};
  chain.rows = {{"s", format_significant(c.root, 15)},
                {"r", format_significant(c.tail_value, 15)},
                {"q", format_significant(to_double(q), 15)},
                {"p", format_significant(to_double(p), 15)},
                {"A", format_significant(to_double(a), 15)}};
  report.tables.push_back(std::move(chain));
  return report;
}

Report repro_s29() {
  Report report = new_report("s29", "odd-factorial series 1 - 1 + 1*3 - 1*3*5 + ...");
  const FactorialFamily odd = FactorialFamily::odd_factorial();
  report.add_check(list_check("terms", generate_terms(odd, 6), {"1", "-1", "3", "-15", "105", "-945"}));
  const GeneralizedCF cf = factorial_cf(odd, 16);
  TermList nums;
  for (std::size_t level = 0; level < 7; ++level) nums.push_back(cf.numerator(level));
  report.add_check(list_check("numerators", nums, {"1", "1", "2", "3", "4", "5", "6"}));
  const auto conv = convergents(cf, 12);
  const std::vector<std::string> printed = {"0/1",    "1/1",    "1/2",     "3/4",      "6/10",      "18/26",
                                            "48/76",  "156/232", "492/764", "1740/2620", "6168/9496", "23568/35696"};
  for (std::size_t i = 0; i < conv.size(); ++i) {
    report.add_check(text_check("convergent " + std::to_string(i), fraction_string(conv[i]), printed[i]));
  }
  const MobiusMap m = collapse_segment(cf, 0, 11);
  report.add_check(text_check("z map", tuple_string(m), "(23568, 6168, 35696, 9496)"));
  const BigInt g = gcd(gcd(m.alpha, m.beta), gcd(m.gamma, m.delta));
  const MobiusMap reduced{m.alpha / g, m.beta / g, m.gamma / g, m.delta / g};
  report.add_check(text_check("z map reduced", tuple_string(reduced), "(2946, 771, 4402, 1187)",
                              "35696/8 = 4462; the printed 4402 drops a digit"));

  const TailClosure c = tail_closure_single(11);
  report.add_check(list_check("cubic 2q^3 + 3q^2 - 22q - 12", TermList(c.cubic.begin(), c.cubic.end()),
                              {"2", "3", "-22", "-12"}));
  report.add_check(tolerance_check("q", c.root, "2.94", 1e-2));
  report.add_check(tolerance_check("p", c.tail_value, "2.79", 1e-2));
  const CFSum sum = sum_by_cf(odd, 10, c);
  report.add_check(tolerance_check("z", sum.value, "0.65568", 1e-5));

  const Rational p_printed = R("2.79");
  const Rational num = (Rational(m.alpha) + Rational(m.beta) * p_printed) / 8;
  const Rational den = (Rational(m.gamma) + Rational(m.delta) * p_printed) / 8;
  report.add_check(rounded_check("z numerator at p = 2.79", num, "5097.09", 2));
  report.add_check(rounded_check("z denominator at p = 2.79", den, "7773.73", 2));
  report.add_check(rounded_check("5097.09/7773.73", R("5097.09") / R("7773.73"), "0.65568", 5));

  const QuadratureResult oracle = borel_oracle(1, 2, 1e-12);
  report.results.push_back(result("closure", sum.value, sum.error));
  report.results.push_back(result("half-line oracle", oracle.value, oracle.error_estimate));
  report.agreement = agreement_matrix(report.results);
  return report;
}

const std::map<std::string, std::function<Report()>, std::less<>>& protocols() {
  static const std::map<std::string, std::function<Report()>, std::less<>> table = {
      {"s15", repro_s15}, {"s16", repro_s16}, {"s17", repro_s17}, {"s18", repro_s18}, {"s19", repro_s19},
      {"s22", repro_s22}, {"s23", repro_s23}, {"s25", repro_s25}, {"s29", repro_s29},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& repro_sections() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : protocols()) out.push_back(name);
    return out;
  }();
  return names;
}

Report cmd_repro(std::string_view section) {
  const auto it = protocols().find(section);
  if (it == protocols().end()) {
    throw UsageError("unknown section '" + std::string(section) + "' (" + join(repro_sections(), "|") + ")");
  }
  return it->second();
}

}  // namespace divsum
