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

#ifndef DIVSUM_DIFFERENCE_HPP_
#define DIVSUM_DIFFERENCE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divsum/rational.hpp"

namespace divsum {

/// forward: row[k+1][i] = row[k][i+1] - row[k][i]
/// reversed: row[k+1][i] = row[k][i] - row[k][i+1]
enum class DifferenceConvention { forward, reversed };

/// Fixed-decimal table protocol: every entry is rounded to `decimal_places`
/// (halves away from zero) before it is differenced.
struct DecimalProtocol {
  unsigned decimal_places = 7;
};

template <class Scalar>
struct DifferenceTable {
  /// rows[0] is the input, rows[k] the k-th differences; rows[k].size() ==
  /// rows[0].size() - k.
  std::vector<std::vector<Scalar>> rows;
  DifferenceConvention convention = DifferenceConvention::forward;

  std::size_t depth() const { return rows.empty() ? 0 : rows.size() - 1; }
  const Scalar& head(std::size_t k) const { return rows.at(k).front(); }
  std::vector<Scalar> heads() const {
    std::vector<Scalar> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row.front());
    return out;
  }
};

template <class Scalar>
std::vector<Scalar> difference_row(const std::vector<Scalar>& row, DifferenceConvention convention) {
  std::vector<Scalar> out;
  if (row.size() < 2) return out;
  out.reserve(row.size() - 1);
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    out.push_back(convention == DifferenceConvention::forward ? Scalar(row[i + 1] - row[i])
                                                              : Scalar(row[i] - row[i + 1]));
  }
  return out;
}

/// Full triangular difference table. Throws std::invalid_argument on empty input.
template <class Scalar>
DifferenceTable<Scalar> build_table(const std::vector<Scalar>& terms,
                                    DifferenceConvention convention) {
  if (terms.empty()) throw std::invalid_argument("build_table: empty input");
  DifferenceTable<Scalar> table;
  table.convention = convention;
  table.rows.push_back(terms);
  while (table.rows.back().size() > 1) {
    table.rows.push_back(difference_row(table.rows.back(), convention));
  }
  return table;
}

/// Exact table, optionally on a fixed-decimal grid.
DifferenceTable<Rational> build_table(const TermList& terms, DifferenceConvention convention,
                                      const std::optional<DecimalProtocol>& protocol);

/// Euler's transform of the alternating series a - b + c - d + ...
///
/// The alternation is taken positionally: u_k = (-1)^k terms[k]. With
/// alpha, beta, gamma, ... the heads of the forward differences of u, the
/// result is [a/2, -alpha/4, beta/8, -gamma/16, ...], one output per input.
/// Linear in the input. Throws std::invalid_argument on empty input.
template <class Scalar>
std::vector<Scalar> euler_transform(const std::vector<Scalar>& terms) {
  if (terms.empty()) throw std::invalid_argument("euler_transform: empty input");
  std::vector<Scalar> row;
  row.reserve(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    row.push_back(k % 2 == 0 ? Scalar(terms[k]) : Scalar(-terms[k]));
  }
  std::vector<Scalar> out;
  out.reserve(terms.size());
  Scalar scale = Scalar(1) / 2;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out.push_back(k % 2 == 0 ? Scalar(row.front() * scale) : Scalar(-row.front() * scale));
    scale /= 2;
    row = difference_row(row, DifferenceConvention::forward);
  }
  return out;
}

/// Newton extrapolation to the term preceding terms[0], using the heads of
/// rows 1..depth:
///   reversed: terms[0] + alpha + beta + gamma + ...
///   forward:  terms[0] - alpha + beta - gamma + ...
/// Throws std::invalid_argument when depth > terms.size() - 1.
template <class Scalar>
Scalar newton_extrapolate_zero(const std::vector<Scalar>& terms, DifferenceConvention convention,
                               std::size_t depth) {
  if (terms.empty() || depth > terms.size() - 1) {
    throw std::invalid_argument("newton_extrapolate_zero: depth exceeds available difference rows");
  }
  Scalar value = terms.front();
  std::vector<Scalar> row = terms;
  for (std::size_t k = 1; k <= depth; ++k) {
    row = difference_row(row, convention);
    const bool negate = convention == DifferenceConvention::forward && k % 2 == 1;
    value = negate ? Scalar(value - row.front()) : Scalar(value + row.front());
  }
  return value;
}

/// Exact extrapolation, optionally on a fixed-decimal grid.
Rational newton_extrapolate_zero(const TermList& terms, DifferenceConvention convention,
                                 const std::optional<DecimalProtocol>& protocol, std::size_t depth);

/// One stage of an iterated transform: multiply the current series by
/// `scale`, move its first `peel` terms into the running constant, then
/// transform what is left.
struct TransformStage {
  Rational scale = 1;
  std::size_t peel = 0;
};

struct StageRecord {
  TermList input;      // after scaling and peeling, i.e. what was transformed
  Rational peeled;     // contribution moved into the constant, in series units
  TermList output;     // transformed terms, in the scaled units of `input`
  Rational factor;     // value = constant + factor * sum(output)
};

struct IteratedTransform {
  Rational constant;
  Rational factor;
  TermList terms;  // final transformed terms
  std::vector<StageRecord> stages;

  /// constant + factor * sum(terms).
  Rational value() const;
};

/// Runs the schedule on `terms`. Stops early once a stage has nothing left to
/// transform.
IteratedTransform iterated_transform(const TermList& terms, const std::vector<TransformStage>& schedule);

/// Euler's three-stage schedule for the Wallis series (ten terms): halve
/// after dropping 1 - 1, double after dropping the cancelling pair, then drop
/// the two leading terms once more.
std::vector<TransformStage> wallis_iterated_schedule();

/// The full Wallis protocol; value() is exactly 38015/65536.
IteratedTransform reproduce_A_protocol();
Rational reproduce_A_by_iterated_transform();

/// 1/B(n) on the 7-decimal grid, reversed differences, summed to depth 5.
struct ReciprocalExtrapolation {
  TermList reciprocals;  // rounded to the protocol grid
  DifferenceTable<Rational> table;
  std::size_t depth = 0;
  Rational inverse_value;  // 1/A
  double value = 0;        // A
};

ReciprocalExtrapolation reciprocal_b_extrapolation(std::size_t count = 13, std::size_t depth = 5,
                                                   DecimalProtocol protocol = {});

/// Logarithmic variant on log10 B(1..9) at 7 decimals.
struct LogExtrapolation {
  TermList logs;                        // log10 B(n), rounded
  DifferenceTable<Rational> log_table;  // forward
  TermList inverse_series;              // log(1/A) = alpha - beta + gamma - ...
  TermList transformed;                 // euler_transform(inverse_series)
  std::size_t summed_terms = 0;
  Rational log_inverse;                 // exact sum of the summed transformed terms
  Rational log_inverse_rounded;         // at 7 decimals
  double value = 0;                     // A = 10^(-log_inverse_rounded)
};

LogExtrapolation log_extrapolate_A(std::size_t count = 9, std::size_t summed_terms = 6,
                                   DecimalProtocol protocol = {});

}  // namespace divsum

#endif  // DIVSUM_DIFFERENCE_HPP_
