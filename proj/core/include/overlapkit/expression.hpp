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

#include <string>
#include <string_view>
#include <vector>

#include "overlapkit/fusion.hpp"
#include "overlapkit/implication.hpp"
#include "overlapkit/negation.hpp"
#include "overlapkit/numerics.hpp"

namespace overlapkit {

// Text syntax for connectives, e.g.
//
//   negations     zadeh, bottom, top, crisp_lower:0.5, crisp_upper:0.5, power:2,
//                 inverse(power:2), natural(gon(GO_max, zadeh))
//   fusion        O_P:p=2, GO_PN:n=3, trunc:O_P:p=1,a=0.5, neutral_go:e=0.5,
//                 idem_go:p=1,q=2, max_grouping, probsum, mean, dualG(O_min, zadeh),
//                 dualO(max_grouping, zadeh), dual(F, N), recover(I, N),
//                 agg(mean; GO_max, O_P:p=2)
//   implications  gon(GO_max, zadeh), gn(max_grouping, top), ql(O_min, max_grouping),
//                 ro(O_P:p=1), d(max_grouping), tn(O_min, zadeh), crisp(C3, 0.5, 0.5),
//                 agg(mean; gon(GO_max, zadeh), gon(O_P:p=2, zadeh))
//
// Malformed text and out-of-range parameters throw ParseError. Constructions
// whose preconditions fail (a non-strict N where one is required, a non
// t-norm in tn) throw PreconditionError. `config` supplies tolerances and the
// grid for the checks some constructions run.

Negation parse_negation(std::string_view text, const CheckConfig& config = {});
FusionFunction parse_fusion(std::string_view text, const CheckConfig& config = {});
Implication parse_implication(std::string_view text, const CheckConfig& config = {});

struct GrammarEntry {
  std::string kind;
  std::string syntax;
  std::string summary;
};

/// Every named constructor reachable from the text syntax.
const std::vector<GrammarEntry>& grammar_entries();

}  // namespace overlapkit
