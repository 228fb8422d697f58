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

#include "overlapkit/fusion.hpp"

#include <array>
#include <string>

namespace overlapkit {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::overlap: return "overlap";
    case Role::grouping: return "grouping";
    case Role::general_overlap: return "general_overlap";
    case Role::t_norm: return "t_norm";
    case Role::aggregation: return "aggregation";
    case Role::unclassified: return "unclassified";
  }
  return "unclassified";
}

FusionFunction::FusionFunction(std::string label, std::size_t arity, Role role, Fn fn,
                               Evaluation evaluation, Params params)
    : label_(std::move(label)),
      arity_(arity),
      role_(role),
      fn_(std::move(fn)),
      evaluation_(evaluation),
      params_(std::move(params)) {
  if (arity_ == 0) throw DomainError("fusion function '" + label_ + "' must have positive arity");
  if (!fn_) throw DomainError("fusion function '" + label_ + "' has no body");
}

UnitValue FusionFunction::operator()(std::span<const UnitValue> xs) const {
  if (xs.size() != arity_) {
    throw PreconditionError("'" + label_ + "' expects " + std::to_string(arity_) + " arguments, got " +
                            std::to_string(xs.size()));
  }
  const double out = fn_(xs);
  if (!(out >= 0.0 && out <= 1.0)) {
    throw DomainError("'" + label_ + "' produced " + std::to_string(out) + ", outside [0,1]");
  }
  return UnitValue(out);
}

UnitValue FusionFunction::operator()(UnitValue x, UnitValue y) const {
  const std::array<UnitValue, 2> xs{x, y};
  return (*this)(std::span<const UnitValue>(xs));
}

UnitValue FusionFunction::diagonal(UnitValue x) const {
  const std::vector<UnitValue> xs(arity_, x);
  return (*this)(std::span<const UnitValue>(xs));
}

std::optional<double> FusionFunction::param(std::string_view name) const {
  for (const auto& [key, value] : params_) {
    if (key == name) return value;
  }
  return std::nullopt;
}

FusionFunction FusionFunction::with_role(Role role) const {
  FusionFunction copy = *this;
  copy.role_ = role;
  return copy;
}

FusionFunction FusionFunction::with_label(std::string label) const {
  FusionFunction copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

}  // namespace overlapkit
