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

#include "divsum/difference.hpp"

#include <algorithm>
#include <cmath>

#include "divsum/series.hpp"

namespace divsum {

namespace {

TermList on_grid(const TermList& terms, const std::optional<DecimalProtocol>& protocol) {
  if (!protocol) return terms;
  TermList out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(round_to_places(t, protocol->decimal_places));
  return out;
}

}  // namespace

DifferenceTable<Rational> build_table(const TermList& terms, DifferenceConvention convention,
                                      const std::optional<DecimalProtocol>& protocol) {
  DifferenceTable<Rational> table = build_table(on_grid(terms, protocol), convention);
  if (protocol) {
    // Differences of grid values stay on the grid; rounding again is the identity
    // but keeps the protocol literal for every entry.
    for (auto& row : table.rows) row = on_grid(row, protocol);
  }
  return table;
}

Rational newton_extrapolate_zero(const TermList& terms, DifferenceConvention convention,
                                 const std::optional<DecimalProtocol>& protocol, std::size_t depth) {
  return newton_extrapolate_zero(on_grid(terms, protocol), convention, depth);
}

Rational IteratedTransform::value() const {
  Rational sum = 0;
  for (const auto& t : terms) sum += t;
  return constant + factor * sum;
}

IteratedTransform iterated_transform(const TermList& terms,
                                     const std::vector<TransformStage>& schedule) {
  IteratedTransform result;
  result.constant = 0;
  result.factor = 1;
  result.terms = terms;
  for (const auto& stage : schedule) {
    if (stage.scale == 0) throw std::invalid_argument("iterated_transform: zero stage scale");
    TermList current = result.terms;
    for (auto& t : current) t *= stage.scale;
    result.factor /= stage.scale;
    const std::size_t peel = std::min(stage.peel, current.size());
    Rational peeled = 0;
    for (std::size_t i = 0; i < peel; ++i) peeled += current[i];
    result.constant += result.factor * peeled;
    current.erase(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(peel));
    if (current.empty()) {
      result.terms.clear();
      break;
    }
    StageRecord record;
    record.input = current;
    record.peeled = result.factor * peeled;
    record.output = euler_transform(current);
    record.factor = result.factor;
    result.terms = record.output;
    result.stages.push_back(std::move(record));
  }
  return result;
}

std::vector<TransformStage> wallis_iterated_schedule() {
  return {
      {Rational(1, 2), 2},
      {Rational(2), 2},
      {Rational(1), 2},
  };
}

IteratedTransform reproduce_A_protocol() {
  return iterated_transform(generate_terms(FactorialFamily::wallis(), 10), wallis_iterated_schedule());
}

Rational reproduce_A_by_iterated_transform() {
  return reproduce_A_protocol().value();
}

ReciprocalExtrapolation reciprocal_b_extrapolation(std::size_t count, std::size_t depth,
                                                   DecimalProtocol protocol) {
  ReciprocalExtrapolation out;
  for (const auto& b : generate_b_sequence(count)) {
    out.reciprocals.push_back(round_to_places(Rational(1) / b, protocol.decimal_places));
  }
  out.table = build_table(out.reciprocals, DifferenceConvention::reversed, protocol);
  out.depth = depth;
  out.inverse_value =
      newton_extrapolate_zero(out.reciprocals, DifferenceConvention::reversed, protocol, depth);
  out.value = 1.0 / to_double(out.inverse_value);
  return out;
}

LogExtrapolation log_extrapolate_A(std::size_t count, std::size_t summed_terms,
                                   DecimalProtocol protocol) {
  if (count < 2) throw std::invalid_argument("log_extrapolate_A: need at least two terms");
  LogExtrapolation out;
  for (const auto& b : generate_b_sequence(count)) {
    const double lg = std::log10(to_double(b));
    out.logs.push_back(round_to_places(from_double(lg), protocol.decimal_places));
  }
  out.log_table = build_table(out.logs, DifferenceConvention::forward, protocol);
  // log A = logs[0] - alpha + beta - ..., hence log(1/A) = -logs[0] + alpha - beta + ...
  for (std::size_t k = 1; k <= out.log_table.depth(); ++k) {
    const Rational& head = out.log_table.head(k);
    out.inverse_series.push_back(k % 2 == 1 ? head : Rational(-head));
  }
  out.transformed = euler_transform(out.inverse_series);
  out.summed_terms = std::min(summed_terms, out.transformed.size());
  out.log_inverse = -out.logs.front();
  for (std::size_t i = 0; i < out.summed_terms; ++i) out.log_inverse += out.transformed[i];
  out.log_inverse_rounded = round_to_places(out.log_inverse, protocol.decimal_places);
  out.value = std::pow(10.0, -to_double(out.log_inverse_rounded));
  return out;
}

}  // namespace divsum
