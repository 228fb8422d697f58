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
#include <string>
#include <string_view>
#include <vector>

#include "overlapkit/conjunctors.hpp"
#include "overlapkit/fusion.hpp"
#include "overlapkit/implication.hpp"
#include "overlapkit/negation.hpp"
#include "overlapkit/properties.hpp"

namespace overlapkit {

namespace detail {
inline std::size_t member_arity(const FusionFunction& f) { return f.arity(); }
inline std::size_t member_arity(const Implication&) { return 2; }
inline const std::string& member_label(const FusionFunction& f) { return f.label(); }
inline const std::string& member_label(const Implication& i) { return i.label(); }
}  // namespace detail

/// An ordered, non-empty list of connectives sharing one arity.
template <typename T>
class OperatorFamily {
 public:
  explicit OperatorFamily(std::vector<T> members) : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("operator family must not be empty");
    arity_ = detail::member_arity(members_.front());
    for (const auto& m : members_) {
      if (detail::member_arity(m) != arity_) {
        throw PreconditionError("operator family mixes arities: '" + detail::member_label(m) + "'");
      }
    }
  }

  [[nodiscard]] const std::vector<T>& members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
  [[nodiscard]] const T& operator[](std::size_t i) const { return members_[i]; }

 private:
  std::vector<T> members_;
  std::size_t arity_ = 0;
};

/// mean, min, max, product (any arity >= 1) and identity (arity 1).
FusionFunction make_aggregation(std::string_view name, std::size_t arity);
const std::vector<std::string>& aggregation_names();

/// x -> A(F1(x), ..., Fn(x)). A's arity must equal the family size.
FusionFunction aggregate(const FusionFunction& a, const OperatorFamily<FusionFunction>& family);
Implication aggregate(const FusionFunction& a, const OperatorFamily<Implication>& family);

/// aggregate() of general overlaps under a continuous aggregation, tagged
/// general_overlap. A is checked for A1/A2 and continuity, every member for
/// GO1-GO5; a failure throws PreconditionError.
FusionFunction aggregate_go(const FusionFunction& a, const OperatorFamily<FusionFunction>& gos,
                            const CheckConfig& config);

/// Compares aggregate(A, {gon(GO_i, N)}) with gon(aggregate_go(dual(A, N), GOs), N)
/// on the sample grid. N must be strong.
PropertyReport check_commutes(const FusionFunction& a, const OperatorFamily<FusionFunction>& gos, const Negation& n,
                              const CheckConfig& config);

}  // namespace overlapkit
