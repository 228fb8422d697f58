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

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "overlapkit/errors.hpp"
#include "overlapkit/unit_value.hpp"

namespace overlapkit {

class Negation;

/// Grid resolution, sampling and tolerance settings shared by every check.
struct CheckConfig {
  /// Equally spaced points, endpoints included.
  int grid_resolution = 101;
  /// Extra pseudo-random points appended after the regular grid.
  int random_samples = 200;
  std::uint64_t rng_seed = 42;
  /// Tolerance for identities that hold in closed form.
  double eq_tol = 1e-9;
  /// Tolerance for values produced by bisection.
  double bisect_tol = 1e-8;

  /// Throws DomainError when a field is out of range.
  void validate() const;

  friend bool operator==(const CheckConfig&, const CheckConfig&) = default;
};

/// Resolution of the regular grid used for checks over triples and for
/// arities above two.
inline constexpr int kTripleGridResolution = 21;

/// Parses `key = value` lines (`#` starts a comment). Recognised keys are
/// grid_resolution, random_samples, rng_seed, eq_tol and bisect_tol; keys
/// not present keep the values of `base`.
CheckConfig parse_config(std::string_view text, const CheckConfig& base = {});
CheckConfig load_config(const std::filesystem::path& path, const CheckConfig& base = {});

/// The regular grid followed by `random_samples` deterministic draws.
std::vector<UnitValue> sample_grid(const CheckConfig& config);

/// `resolution` equally spaced points from 0 to 1 inclusive.
std::vector<double> regular_grid(int resolution);

/// sample_grid() sorted ascending with duplicates removed.
std::vector<double> sorted_samples(const CheckConfig& config);

/// The regular triple grid (kTripleGridResolution^3 points, or the config
/// resolution if smaller) followed by `random_samples` random triples.
std::vector<std::array<double, 3>> sample_triples(const CheckConfig& config);

/// ceil(log2(1/tol)) + 2
int bisection_iterations(double tol);

/// Supremum of a downward-closed predicate on [0,1].
///
/// `pred` must hold on an initial segment [0, z*] (or [0, z*)). The search runs
/// a fixed number of halvings and returns the midpoint of the final bracket,
/// so |result - z*| <= tol/8. If `pred(1)` holds the result is exactly 1.
template <std::predicate<double> Pred>
UnitValue bisect_sup(Pred&& pred, double tol) {
  if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  if (!pred(0.0)) throw PreconditionError("bisect_sup: predicate is false at 0");
  if (pred(1.0)) return UnitValue::one();
  double lo = 0.0;
  double hi = 1.0;
  const int iterations = bisection_iterations(tol);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return UnitValue(0.5 * (lo + hi));
}

/// Boundary of a downward-closed predicate resolved to adjacent doubles:
/// `pred(below)` holds, `pred(above)` does not and no double lies between.
struct Boundary {
  double below;
  double above;
};

template <std::predicate<double> Pred>
std::optional<Boundary> bisect_boundary(Pred&& pred) {
  if (!pred(0.0) || pred(1.0)) return std::nullopt;
  double lo = 0.0;
  double hi = 1.0;
  while (std::nextafter(lo, 1.0) < hi) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Boundary{lo, hi};
}

/// Solves N(x) = y for a strict negation by bisection on the decreasing map.
/// Throws PreconditionError when `n` is not strict.
UnitValue invert_strict(const Negation& n, UnitValue y, double tol);

/// Whether a value was computed in closed form or by an iterative method.
enum class Evaluation { closed_form, iterative };

constexpr Evaluation combine(Evaluation a, Evaluation b) noexcept {
  return (a == Evaluation::iterative || b == Evaluation::iterative) ? Evaluation::iterative
                                                                    : Evaluation::closed_form;
}

/// eq_tol for closed forms; 2 * bisect_tol once a bisection is involved.
double check_tolerance(const CheckConfig& config, Evaluation evaluation);

/// Largest jump between neighbouring grid points tolerated by the
/// continuity heuristic: 10 / grid_resolution.
double continuity_threshold(const CheckConfig& config);

/// Refines a suspicious jump of a one-dimensional section `f` between `a` and
/// `b` by repeatedly keeping the half with the larger jump. Returns the final
/// bracket when the jump survives down to width 1e-9 (a discontinuity), or
/// nullopt when it shrinks below `threshold` (steep but continuous).
std::optional<std::array<double, 2>> persistent_jump(const std::function<double(double)>& f,
                                                     double a, double b, double threshold);

}  // namespace overlapkit
