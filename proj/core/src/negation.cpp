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

#include "overlapkit/negation.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace overlapkit {

namespace {

std::string format_param(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

bool near_binary(double v, double tol) { return std::abs(v) <= tol || std::abs(1.0 - v) <= tol; }

}  // namespace

Negation::Negation(std::string label, Fn fn, NegationTraits traits, NegationKind kind,
                   std::vector<double> params, Evaluation evaluation)
    : label_(std::move(label)),
      fn_(std::move(fn)),
      traits_(traits),
      kind_(kind),
      params_(std::move(params)),
      evaluation_(evaluation) {
  if (!fn_) throw DomainError("negation '" + label_ + "' has no body");
  if (traits_.strong) traits_.strict = true;
}

Negation Negation::from_function(std::string label, Fn fn, Evaluation evaluation, const CheckConfig& config) {
  Negation probe(label, fn, {}, NegationKind::custom, {}, evaluation);
  const auto cls = classify(probe, config);
  return Negation(std::move(label), std::move(fn), {cls.is_strict, cls.is_strong}, NegationKind::custom, {},
                  evaluation);
}

UnitValue Negation::operator()(UnitValue x) const {
  const double out = fn_(x.value());
  if (!(out >= 0.0 && out <= 1.0)) {
    throw DomainError("negation '" + label_ + "' produced " + std::to_string(out) + ", outside [0,1]");
  }
  return UnitValue(out);
}

Negation make_standard() {
  return Negation("zadeh", [](double x) { return 1.0 - x; }, {true, true}, NegationKind::standard);
}

Negation make_crisp(CrispSide side, UnitValue alpha) {
  const double a = alpha.value();
  if (side == CrispSide::lower) {
    if (!(a < 1.0)) throw DomainError("crisp_lower requires alpha in [0,1)");
    return Negation("crisp_lower:" + format_param(a), [a](double x) { return x > a ? 0.0 : 1.0; }, {},
                    NegationKind::crisp_lower, {a});
  }
  if (!(a > 0.0)) throw DomainError("crisp_upper requires alpha in (0,1]");
  return Negation("crisp_upper:" + format_param(a), [a](double x) { return x >= a ? 0.0 : 1.0; }, {},
                  NegationKind::crisp_upper, {a});
}

Negation make_bottom() {
  return Negation("bottom", [](double x) { return x > 0.0 ? 0.0 : 1.0; }, {}, NegationKind::crisp_lower, {0.0});
}

Negation make_top() {
  return Negation("top", [](double x) { return x >= 1.0 ? 0.0 : 1.0; }, {}, NegationKind::crisp_upper, {1.0});
}

Negation make_power_strict(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("power negation requires p > 0");
  if (p == 1.0) {
    return Negation("power:1", [](double x) { return 1.0 - x; }, {true, true}, NegationKind::power, {p});
  }
  return Negation("power:" + format_param(p), [p](double x) { return 1.0 - std::pow(x, p); }, {true, false},
                  NegationKind::power, {p});
}

Negation make_inverse(const Negation& n, double tol) {
  if (!n.strict()) {
    throw PreconditionError("inverse: negation '" + n.label() + "' is not strict");
  }
  return Negation(
      "inverse(" + n.label() + ")", [n, tol](double y) { return invert_strict(n, UnitValue(y), tol).value(); },
      {true, n.strong()}, NegationKind::inverse, {}, Evaluation::iterative);
}

const ClassWitness* NegationClassification::witness_for(std::string_view cls) const {
  for (const auto& w : witnesses) {
    if (w.failed_class == cls) return &w;
  }
  return nullptr;
}

NegationClassification classify(const Negation& n, const CheckConfig& config) {
  NegationClassification out;
  const auto xs = sorted_samples(config);
  const double tol = check_tolerance(config, n.evaluation());
  std::vector<double> values(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) values[i] = n.at(xs[i]);

  // N2, exact for closed forms.
  const double boundary_tol = n.evaluation() == Evaluation::closed_form ? 0.0 : tol;
  bool boundary = true;
  if (std::abs(values.front() - 1.0) > boundary_tol) {
    out.witnesses.push_back({"N2", 0.0, values.front()});
    boundary = false;
  }
  if (std::abs(values.back()) > boundary_tol) {
    out.witnesses.push_back({"N2", 1.0, values.back()});
    boundary = false;
  }

  // N1 on adjacent sorted samples; transitivity covers every pair.
  bool antitonic = true;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (values[i + 1] > values[i] + tol) {
      out.witnesses.push_back({"N1", xs[i], xs[i + 1]});
      antitonic = false;
      break;
    }
  }
  out.is_negation = boundary && antitonic;

  // N4: strictly decreasing on samples that are distinguishable.
  bool decreasing = out.is_negation;
  for (std::size_t i = 0; decreasing && i + 1 < xs.size(); ++i) {
    if (xs[i + 1] - xs[i] < 1e-9) continue;
    if (!(values[i + 1] < values[i])) {
      out.witnesses.push_back({"N4", xs[i], xs[i + 1]});
      decreasing = false;
    }
  }

  // N3: adjacent jumps above the threshold must vanish under refinement.
  bool continuous = out.is_negation;
  const double threshold = continuity_threshold(config);
  const std::function<double(double)> section = [&n](double x) { return n.at(x).value(); };
  for (std::size_t i = 0; continuous && i + 1 < xs.size(); ++i) {
    if (std::abs(values[i + 1] - values[i]) <= threshold) continue;
    if (const auto jump = persistent_jump(section, xs[i], xs[i + 1], threshold)) {
      out.witnesses.push_back({"N3", (*jump)[0], (*jump)[1]});
      continuous = false;
    }
  }
  out.is_strict = out.is_negation && decreasing && continuous;

  // N5
  bool involutive = out.is_strict;
  for (std::size_t i = 0; involutive && i < xs.size(); ++i) {
    const double back = n.at(values[i]).value();
    if (std::abs(back - xs[i]) > tol) {
      out.witnesses.push_back({"N5", xs[i], back});
      involutive = false;
    }
  }
  out.is_strong = involutive;

  // N6
  bool crisp = out.is_negation;
  for (std::size_t i = 0; crisp && i < xs.size(); ++i) {
    if (!near_binary(values[i], tol)) {
      out.witnesses.push_back({"N6", xs[i], values[i]});
      crisp = false;
    }
  }
  out.is_crisp = crisp;

  // N7: two-valued exactly at the endpoints.
  bool frontier = out.is_negation;
  for (std::size_t i = 1; frontier && i + 1 < xs.size(); ++i) {
    if (near_binary(values[i], tol)) {
      out.witnesses.push_back({"N7", xs[i], values[i]});
      frontier = false;
    }
  }
  out.is_frontier = frontier;
  return out;
}

FusionFunction dual(const FusionFunction& f, const Negation& n) {
  Role role = Role::unclassified;
  if (f.role() == Role::aggregation) {
    role = Role::aggregation;
  } else if (n.strict() && f.role() == Role::overlap) {
    role = Role::grouping;
  } else if (n.strict() && f.role() == Role::grouping) {
    role = Role::overlap;
  }
  const std::size_t arity = f.arity();
  auto body = [f, n, arity](std::span<const UnitValue> xs) {
    std::vector<UnitValue> negated(arity);
    for (std::size_t i = 0; i < arity; ++i) negated[i] = n(xs[i]);
    return n(f(std::span<const UnitValue>(negated))).value();
  };
  return FusionFunction("dual(" + f.label() + ", " + n.label() + ")", arity, role, std::move(body),
                        combine(f.evaluation(), n.evaluation()));
}

}  // namespace overlapkit
