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
#include <string_view>

#include "overlapkit/conjunctors.hpp"
#include "overlapkit/fusion.hpp"
#include "overlapkit/negation.hpp"
#include "overlapkit/numerics.hpp"

namespace overlapkit {

enum class ImplicationFamily { gon, gn, ql, residual, d, tn, crisp, aggregated, custom };

std::string_view to_string(ImplicationFamily family);

/// The four two-valued threshold implications. Each is 0 on a rectangle
/// anchored at (1, 0) and 1 elsewhere:
///   C1  x >= alpha and y <= beta
///   C2  x >  alpha and y <  beta
///   C3  x >= alpha and y <  beta
///   C4  x >  alpha and y <= beta
enum class CrispKind { C1, C2, C3, C4 };

std::string_view to_string(CrispKind kind);
std::optional<CrispKind> crisp_kind_from_string(std::string_view name);

/// A binary map [0,1]^2 -> [0,1] tagged with the construction that built it.
class Implication {
 public:
  using Fn = std::function<double(double, double)>;

  Implication(std::string label, Fn fn, ImplicationFamily family = ImplicationFamily::custom,
              Evaluation evaluation = Evaluation::closed_form);

  UnitValue operator()(UnitValue x, UnitValue y) const;
  UnitValue at(double x, double y) const { return (*this)(UnitValue(x), UnitValue(y)); }

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] ImplicationFamily family() const noexcept { return family_; }
  [[nodiscard]] Evaluation evaluation() const noexcept { return evaluation_; }

  /// The same map viewed as a binary fusion function (role unclassified).
  [[nodiscard]] FusionFunction as_fusion() const;

 private:
  std::string label_;
  Fn fn_;
  ImplicationFamily family_;
  Evaluation evaluation_;
};

/// I(x,y) = N(GO(x, N(y)))
Implication make_gon(const FusionFunction& go, const Negation& n);

/// I(x,y) = G(N(x), y) for a grouping G.
Implication make_gn(const FusionFunction& g, const Negation& n);

/// I(x,y) = G(0, O(1,y)) if x = 1, else 1.
Implication make_ql(const FusionFunction& o, const FusionFunction& g);

/// I(x,y) = max{z : O(x,z) <= y}, by bisection with config.bisect_tol. Relies
/// on O being continuous and increasing in z so the set is a closed initial
/// segment. Evaluation throws PreconditionError if O(x,0) > y.
Implication make_residual(const FusionFunction& o, const CheckConfig& config = {});

/// I(x,y) = G(0,y) if x = 1, else 1.
Implication make_d(const FusionFunction& g);

/// I(x,y) = N(T(x, N(y))). T is checked against T1-T3 under `config`.
Implication make_tn(const FusionFunction& t, const Negation& n, const CheckConfig& config = {});

/// Throws DomainError when alpha/beta fall outside the range of the kind:
/// C1 alpha in (0,1], beta in [0,1); C2 alpha in [0,1), beta in (0,1];
/// C3 both in (0,1]; C4 both in [0,1).
Implication make_crisp_family(CrispKind kind, double alpha, double beta);

/// N_I(x) = I(x, 0), with traits from classify().
Negation natural_negation(const Implication& i, const CheckConfig& config = {});

/// (x,y) -> N^-1(I(x, N^-1(y))) with both inversions by bisection.
FusionFunction recover_go(const Implication& i, const Negation& n, double tol);

/// I1-I5 on the sample grid.
AxiomReport check_implication_axioms(const Implication& i, const CheckConfig& config);

struct CrispFit {
  CrispKind kind;
  double alpha;
  double beta;

  friend bool operator==(const CrispFit&, const CrispFit&) = default;
};

/// If `i` is two-valued on the samples, locates the edges of its 0-region by
/// bisection along y = 0 and x = 1, decides whether each edge is open or
/// closed, and confirms the fitted family on every sample.
std::optional<CrispFit> classify_crisp(const Implication& i, const CheckConfig& config);

}  // namespace overlapkit
