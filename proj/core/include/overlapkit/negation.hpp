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
#include <vector>

#include "overlapkit/fusion.hpp"
#include "overlapkit/numerics.hpp"
#include "overlapkit/unit_value.hpp"

namespace overlapkit {

enum class NegationKind { standard, crisp_lower, crisp_upper, power, inverse, natural, custom };

/// Which side of the threshold a crisp negation sends to 0:
/// lower is N_alpha (0 iff x > alpha), upper is N^alpha (0 iff x >= alpha).
enum class CrispSide { lower, upper };

/// Class membership known for a negation without re-sampling it.
struct NegationTraits {
  bool strict = false;
  bool strong = false;
};

/// A unary connective on [0,1] intended to satisfy N1 (antitonic) and N2
/// (N(0) = 1, N(1) = 0).
class Negation {
 public:
  using Fn = std::function<double(double)>;

  Negation(std::string label, Fn fn, NegationTraits traits, NegationKind kind = NegationKind::custom,
           std::vector<double> params = {}, Evaluation evaluation = Evaluation::closed_form);

  /// Wraps an arbitrary map; traits come from classify() under `config`.
  static Negation from_function(std::string label, Fn fn, Evaluation evaluation = Evaluation::closed_form,
                                const CheckConfig& config = {});

  UnitValue operator()(UnitValue x) const;
  UnitValue at(double x) const { return (*this)(UnitValue(x)); }

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] NegationKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<double>& params() const noexcept { return params_; }
  [[nodiscard]] bool strict() const noexcept { return traits_.strict; }
  [[nodiscard]] bool strong() const noexcept { return traits_.strong; }
  [[nodiscard]] Evaluation evaluation() const noexcept { return evaluation_; }

 private:
  std::string label_;
  Fn fn_;
  NegationTraits traits_;
  NegationKind kind_;
  std::vector<double> params_;
  Evaluation evaluation_;
};

/// N_Z(x) = 1 - x
Negation make_standard();

/// N_alpha (lower, alpha in [0,1)) or N^alpha (upper, alpha in (0,1]).
Negation make_crisp(CrispSide side, UnitValue alpha);

/// N_bot = N_0, the smallest negation.
Negation make_bottom();
/// N_top = N^1, the greatest negation.
Negation make_top();

/// N(x) = 1 - x^p for p > 0. Strict for every p, strong only for p = 1.
Negation make_power_strict(double p);

/// N^{-1} of a strict negation, evaluated by bisection with tolerance `tol`.
Negation make_inverse(const Negation& n, double tol);

struct ClassWitness {
  std::string failed_class;
  double x;
  double y;
};

struct NegationClassification {
  bool is_negation = false;
  bool is_strict = false;
  bool is_strong = false;
  bool is_crisp = false;
  bool is_frontier = false;
  /// One entry per class that failed, with the sample point(s) that broke it.
  std::vector<ClassWitness> witnesses;

  [[nodiscard]] const ClassWitness* witness_for(std::string_view cls) const;
};

/// Numerically tests N1-N7 on the sample grid. Continuity is judged by the
/// refined adjacent-jump heuristic (see persistent_jump()).
NegationClassification classify(const Negation& n, const CheckConfig& config);

/// f_N(x1..xn) = N(f(N(x1), ..., N(xn))).
///
/// Aggregation functions stay aggregation functions. For a strict N an
/// overlap becomes a grouping and vice versa; every other role becomes
/// unclassified.
FusionFunction dual(const FusionFunction& f, const Negation& n);

}  // namespace overlapkit
