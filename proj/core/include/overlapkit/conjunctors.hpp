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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overlapkit/fusion.hpp"
#include "overlapkit/negation.hpp"
#include "overlapkit/numerics.hpp"

namespace overlapkit {

/// Which axiom family check_axioms() verifies:
///   overlap          O1-O5
///   grouping         G1-G5
///   general_overlap  GO1-GO5, plus GO2a/GO3a reported as informational
///   t_norm           T1-T3 together with aggregation axioms A1/A2
///   aggregation      A1/A2
///   implication      I1-I5 (binary functions only)
enum class AxiomSet { overlap, grouping, general_overlap, t_norm, aggregation, implication };

std::string_view to_string(AxiomSet set);
std::optional<AxiomSet> axiom_set_from_string(std::string_view name);

enum class AxiomStatus {
  holds_on_grid,
  /// "Only if" directions can be falsified but never proven on a grid.
  no_counterexample,
  fails,
};

std::string_view to_string(AxiomStatus status);

struct AxiomEntry {
  std::string id;
  AxiomStatus status = AxiomStatus::holds_on_grid;
  /// False for entries reported alongside a set but not part of it (GO2a/GO3a).
  bool required = true;
  /// The first failing point in lexicographic grid order.
  std::vector<double> witness;
  double deviation = 0.0;
  std::string note;

  [[nodiscard]] bool failed() const noexcept { return status == AxiomStatus::fails; }
};

struct AxiomReport {
  AxiomSet set = AxiomSet::general_overlap;
  std::string subject;
  std::vector<AxiomEntry> entries;
  std::size_t points_checked = 0;

  /// True when no required entry failed.
  [[nodiscard]] bool passed() const;
  [[nodiscard]] const AxiomEntry* find(std::string_view id) const;
};

/// Table-of-examples constructors: O_mM, O_DB, O_P (p), O_V, O_min, GO_max,
/// GO_TL (p), GO_PN (n), GO_GN (n). Throws DomainError for unknown names and
/// missing, unexpected or out-of-range parameters.
FusionFunction catalog(std::string_view name, const Params& params = {});
const std::vector<std::string>& catalog_names();

/// O_a(x,y) = max(0, O(x,y) - O(max(x,y), a)) / (1 - O(max(x,y), a)) for an
/// overlap O and a in (0,1): a general overlap function that is not an
/// overlap function.
FusionFunction truncate_overlap(const FusionFunction& overlap, double a);

/// max(x, y) tagged as a grouping function.
FusionFunction max_grouping();
/// x + y - xy, the dual of the product under N_Z.
FusionFunction probabilistic_sum();

struct DualConstruction {
  FusionFunction function;
  /// Axiom report of the input that the construction relies on.
  AxiomReport premise;
  bool premise_holds = false;
};

/// G(x,y) = N(GO(N(x), N(y))) for a strict N. When GO fails GO2a/GO3a on the
/// grid the result is still returned but tagged unclassified.
DualConstruction grouping_construction(const FusionFunction& go, const Negation& n, const CheckConfig& config);
FusionFunction grouping_from(const FusionFunction& go, const Negation& n, const CheckConfig& config = {});

/// GO(x,y) = N(G(N(x), N(y))) for a grouping G and a strict N.
DualConstruction overlap_construction(const FusionFunction& g, const Negation& n, const CheckConfig& config);
FusionFunction overlap_from(const FusionFunction& g, const Negation& n, const CheckConfig& config = {});

/// min below e, max above e, xy/e across it: a general overlap with neutral
/// element e in (0,1].
FusionFunction piecewise_neutral_go(double e);

/// ((x^p y^q + x^q y^p) / 2)^(1/(p+q)), idempotent for all p, q > 0.
FusionFunction idempotent_go(double p, double q);

AxiomReport check_axioms(const FusionFunction& f, AxiomSet set, const CheckConfig& config);

/// Continuity heuristic alone: adjacent-cell jumps above
/// continuity_threshold() must vanish under refinement.
AxiomEntry check_continuity(const FusionFunction& f, const CheckConfig& config);

/// T2 on sample_triples(): |f(x, f(y,z)) - f(f(x,y), z)| within tolerance.
AxiomEntry check_associativity(const FusionFunction& f, const CheckConfig& config);

/// A neutral element a with |f(x, a) - x| within tolerance for every sample,
/// searched on the grid and refined by bisection along a -> f(0.5, a).
std::optional<UnitValue> find_neutral(const FusionFunction& f, const CheckConfig& config);

struct IdempotencyResult {
  bool idempotent = false;
  std::optional<double> witness;
  double deviation = 0.0;
};

IdempotencyResult check_idempotent(const FusionFunction& f, const CheckConfig& config);

}  // namespace overlapkit
