// Copyright 2026 The overlapkit Authors
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

#include <array>

#include <overlapkit/conjunctors.hpp>
#include <overlapkit/expression.hpp>
#include <overlapkit/properties.hpp>

#include "overlapkit_cli/cli.hpp"

namespace overlapkit::cli {

namespace {

// Footnotes of the printed table:
//   1  if N is strict
//   2  if 1 is the neutral element of GO
//   3  if GO is associative
struct ColumnSpec {
  Table2Column column;
  std::string conjunction;
  std::array<const char*, 7> printed;
};

constexpr std::array<const char*, 7> kTStrong{"yes", "yes", "", "", "yes", "yes", "yes"};
constexpr std::array<const char*, 7> kTPlus{"no1", "no", "", "", "no1", "yes", "no1"};
constexpr std::array<const char*, 7> kTCrisp{"yes", "no", "no", "yes", "yes", "yes", "yes"};
constexpr std::array<const char*, 7> kGoStrong{"yes3", "yes2", "", "", "yes", "yes", "yes"};
constexpr std::array<const char*, 7> kGoCrisp{"yes2", "no2", "no2", "yes2", "yes2", "yes", "yes2"};

const std::vector<ColumnSpec>& specs() {
  static const std::vector<ColumnSpec> all{
      {{"(T,N) N*", "tn(O_min, zadeh)", "zadeh"}, "O_min", kTStrong},
      {{"(T,N) N+", "tn(O_min, power:2)", "power:2"}, "O_min", kTPlus},
      {{"(T,N) Nc", "tn(O_min, crisp_upper:0.5)", "crisp_upper:0.5"}, "O_min", kTCrisp},
      {{"(GO,N) N*", "gon(O_min, zadeh)", "zadeh"}, "O_min", kGoStrong},
      {{"(GO,N) Nc", "gon(O_min, crisp_upper:0.5)", "crisp_upper:0.5"}, "O_min", kGoCrisp},
      {{"(GO,N) N*, non-associative GO", "gon(GO_max, zadeh)", "zadeh"}, "GO_max", kGoStrong},
      {{"(GO,N) Nc, no neutral element", "gon(GO_max, crisp_upper:0.5)", "crisp_upper:0.5"}, "GO_max", kGoCrisp},
  };
  return all;
}

constexpr std::array<Property, 7> kRows{Property::EP, Property::NP,  Property::ROP, Property::LOP,
                                        Property::CP, Property::LCP, Property::RCP};

}  // namespace

const std::vector<Table2Column>& table2_columns() {
  static const std::vector<Table2Column> columns = [] {
    std::vector<Table2Column> out;
    for (const auto& s : specs()) out.push_back(s.column);
    return out;
  }();
  return columns;
}

const std::vector<std::string>& table2_rows() {
  static const std::vector<std::string> rows = [] {
    std::vector<std::string> out;
    for (Property p : kRows) out.emplace_back(to_string(p));
    return out;
  }();
  return rows;
}

std::vector<Table2Cell> table2(const CheckConfig& config) {
  struct Prepared {
    Implication implication;
    Negation negation;
    bool strict;
    bool neutral_one;
    bool associative;
  };
  std::vector<Prepared> prepared;
  for (const auto& s : specs()) {
    const auto conj = parse_fusion(s.conjunction, config);
    const auto n = parse_negation(s.column.negation, config);
    const auto neutral = find_neutral(conj, config);
    prepared.push_back({parse_implication(s.column.implication, config), n, classify(n, config).is_strict,
                        neutral && neutral->value() == 1.0, !check_associativity(conj, config).failed()});
  }

  std::vector<Table2Cell> cells;
  for (std::size_t r = 0; r < kRows.size(); ++r) {
    for (std::size_t c = 0; c < specs().size(); ++c) {
      const auto& spec = specs()[c];
      const auto& prep = prepared[c];
      Table2Cell cell;
      cell.row = std::string(to_string(kRows[r]));
      cell.column = spec.column.header;
      cell.printed = spec.printed[r];
      cell.report = check_property(prep.implication, kRows[r], prep.negation, config);
      cell.observed = cell.report.holds();
      if (!cell.printed.empty()) {
        const char mark = cell.printed.back();
        if (mark == '1') cell.condition_met = prep.strict;
        if (mark == '2') cell.condition_met = prep.neutral_one;
        if (mark == '3') cell.condition_met = prep.associative;
        if (cell.condition_met) cell.expected = cell.printed.rfind("yes", 0) == 0;
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace overlapkit::cli
