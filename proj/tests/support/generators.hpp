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

// Seeded random inputs for property-style tests.

#include <cstdint>
#include <random>
#include <vector>

namespace gen {

inline constexpr std::uint64_t kSeed = 20240611;

class Unit {
 public:
  explicit Unit(std::uint64_t seed = kSeed) : rng_(seed) {}
  double operator()() { return dist_(rng_); }
  // Strictly inside (lo, hi).
  double between(double lo, double hi) { return lo + (hi - lo) * (0.001 + 0.998 * dist_(rng_)); }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

inline std::vector<std::pair<double, double>> pairs(std::size_t count, std::uint64_t seed = kSeed) {
  Unit u(seed);
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(u(), u());
  return out;
}

}  // namespace gen
