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

#include "overlapkit/errors.hpp"

namespace overlapkit {

/// A truth value in the closed unit interval.
///
/// Construction rejects NaN and anything outside [0,1]; nothing is clamped,
/// so a connective that leaves the interval fails at the point of evaluation.
class UnitValue {
 public:
  constexpr UnitValue() noexcept = default;

  explicit constexpr UnitValue(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw DomainError("value " + std::to_string(value) + " is outside [0,1]");
    }
  }

  [[nodiscard]] constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)

  static constexpr UnitValue zero() noexcept { return UnitValue{}; }
  static constexpr UnitValue one() noexcept {
    UnitValue v;
    v.value_ = 1.0;
    return v;
  }

 private:
  double value_ = 0.0;
};

}  // namespace overlapkit
