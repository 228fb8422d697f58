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
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "overlapkit/numerics.hpp"
#include "overlapkit/unit_value.hpp"

namespace overlapkit {

/// The class a fusion function claims to belong to. The claim is set by the
/// constructors; check_axioms() verifies it independently.
enum class Role { overlap, grouping, general_overlap, t_norm, aggregation, unclassified };

std::string_view to_string(Role role);

/// Named real parameters carried for display (p, q, a, e, n).
using Params = std::vector<std::pair<std::string, double>>;

/// An n-ary map [0,1]^n -> [0,1].
class FusionFunction {
 public:
  using Fn = std::function<double(std::span<const UnitValue>)>;

  FusionFunction(std::string label, std::size_t arity, Role role, Fn fn,
                 Evaluation evaluation = Evaluation::closed_form, Params params = {});

  /// Evaluates at `xs` (size must equal arity). The result is range-checked.
  UnitValue operator()(std::span<const UnitValue> xs) const;
  UnitValue operator()(std::initializer_list<UnitValue> xs) const {
    return (*this)(std::span<const UnitValue>(xs.begin(), xs.size()));
  }
  UnitValue operator()(UnitValue x, UnitValue y) const;

  /// Same as operator() but takes raw doubles; each is validated.
  UnitValue at(double x, double y) const { return (*this)(UnitValue(x), UnitValue(y)); }

  /// f(x, x, ..., x)
  UnitValue diagonal(UnitValue x) const;

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
  [[nodiscard]] Role role() const noexcept { return role_; }
  [[nodiscard]] Evaluation evaluation() const noexcept { return evaluation_; }
  [[nodiscard]] const Params& params() const noexcept { return params_; }
  [[nodiscard]] std::optional<double> param(std::string_view name) const;

  [[nodiscard]] FusionFunction with_role(Role role) const;
  [[nodiscard]] FusionFunction with_label(std::string label) const;

 private:
  std::string label_;
  std::size_t arity_;
  Role role_;
  Fn fn_;
  Evaluation evaluation_;
  Params params_;
};

}  // namespace overlapkit
