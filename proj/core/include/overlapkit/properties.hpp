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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overlapkit/implication.hpp"
#include "overlapkit/negation.hpp"
#include "overlapkit/numerics.hpp"

namespace overlapkit {

/// NP  I(1,y) = y
/// IP  I(x,x) = 1
/// EP  I(x, I(y,z)) = I(y, I(x,z))
/// EP1 I(x, I(y,z)) = 1 implies I(y, I(x,z)) = 1
/// IB  I(x, I(x,y)) = I(x,y)
/// LOP x <= y implies I(x,y) = 1
/// ROP I(x,y) = 1 implies x <= y
/// CP, LCP, RCP contraposition laws w.r.t. a negation N:
///     I(x,y) = I(N(y),N(x)),  I(N(x),y) = I(N(y),x),  I(x,N(y)) = I(y,N(x))
enum class Property { NP, IP, EP, EP1, IB, LOP, ROP, CP, LCP, RCP };

std::string_view to_string(Property p);
/// Accepts the printed ids ("L-CP") and the dashless forms ("LCP").
std::optional<Property> property_from_string(std::string_view name);
const std::vector<Property>& all_properties();
bool needs_negation(Property p);

enum class PropertyStatus { holds_on_grid, fails };

std::string_view to_string(PropertyStatus status);

struct PropertyWitness {
  /// (x, y) or (x, y, z)
  std::vector<double> point;
  double lhs = 0.0;
  double rhs = 0.0;
  double deviation = 0.0;
};

struct PropertyReport {
  std::string property;
  std::string subject;
  PropertyStatus status = PropertyStatus::holds_on_grid;
  /// First failure in lexicographic sample order; present iff the check failed.
  std::optional<PropertyWitness> witness;
  std::size_t samples_checked = 0;
  /// Largest violation measure seen over all samples.
  double max_deviation = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool holds() const noexcept { return status == PropertyStatus::holds_on_grid; }
};

/// NP, IP, LOP, ROP or IB over all sample pairs. ROP skips pairs with
/// x - y within eq_tol and counts values within tolerance of 1 as 1.
PropertyReport check_unary_property(const Implication& i, Property p, const CheckConfig& config);

/// EP or EP1 over sample_triples().
PropertyReport check_ep(const Implication& i, Property variant, const CheckConfig& config);

/// CP, LCP or RCP with respect to `n` over all sample pairs.
PropertyReport check_contraposition(const Implication& i, const Negation& n, Property variant,
                                    const CheckConfig& config);

/// Dispatches to the checks above; contraposition variants require `n`.
PropertyReport check_property(const Implication& i, Property p, const std::optional<Negation>& n,
                              const CheckConfig& config);

struct Comparison {
  double deviation = 0.0;
  double x = 0.0;
  double y = 0.0;
  std::size_t samples_checked = 0;
};

/// sup |I1(x,y) - I2(x,y)| over sample pairs with the first maximising pair.
Comparison compare(const Implication& a, const Implication& b, const CheckConfig& config);

/// True when the sampled image misses a subinterval of [0,1] wider than two
/// grid cells, 2 / (grid_resolution - 1).
bool range_is_proper(const Implication& i, const CheckConfig& config);

}  // namespace overlapkit
