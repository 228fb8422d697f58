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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <overlapkit/numerics.hpp>
#include <overlapkit/properties.hpp>

namespace overlapkit::cli {

enum class Verb { eval, axioms, props, compare, table2, search, catalog };
enum class Format { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;

struct Command {
  Verb verb = Verb::catalog;
  /// Expressions in the order given: one for eval/axioms/props/search, two
  /// for compare, none for table2/catalog.
  std::vector<std::string> targets;
  CheckConfig config;
  /// Unset means the verb's default (csv for table2, text otherwise).
  std::optional<Format> format;
  bool assert_results = false;

  std::vector<double> at;
  std::optional<std::string> axiom_set;
  std::vector<std::string> properties;
  std::optional<std::string> negation;

  double from = 0.0;
  double to = 1.0;
  int steps = 11;
};

struct Outcome {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

/// Reads the process environment.
std::optional<std::string> process_env(std::string_view name);

/// Parses argv (without the program name). Configuration is layered as
/// defaults, then the file from --config or OVERLAPKIT_CONFIG, then flags.
/// Throws ParseError on malformed input.
Command parse_command(const std::vector<std::string>& args, const EnvLookup& env = process_env);

/// Executes a parsed command. Library errors propagate.
Outcome run(const Command& command);

/// Parse and run, mapping errors onto exit codes.
Outcome run_cli(const std::vector<std::string>& args, const EnvLookup& env = process_env);

struct Table2Cell {
  std::string row;
  std::string column;
  bool observed = false;
  /// The printed entry with its footnote marker ("yes", "no1", "yes3"), or
  /// empty where the printed table leaves the cell blank.
  std::string printed;
  /// Whether the footnote's condition holds for this instance.
  bool condition_met = true;
  /// Expectation for this instance; unset for blank cells and unmet footnotes.
  std::optional<bool> expected;
  PropertyReport report;

  [[nodiscard]] bool matches() const { return !expected || *expected == observed; }
};

struct Table2Column {
  std::string header;
  std::string implication;
  std::string negation;
};

const std::vector<Table2Column>& table2_columns();
const std::vector<std::string>& table2_rows();

/// Every cell of the property matrix, row-major.
std::vector<Table2Cell> table2(const CheckConfig& config);

}  // namespace overlapkit::cli
