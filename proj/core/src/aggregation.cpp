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

#include "overlapkit/aggregation.hpp"

#include <algorithm>
#include <cmath>

namespace overlapkit {

namespace {

template <typename T>
std::string family_label(const FusionFunction& a, const OperatorFamily<T>& family) {
  std::string out = "agg(" + a.label() + ";";
  for (std::size_t i = 0; i < family.size(); ++i) {
    out += (i == 0 ? " " : ", ") + detail::member_label(family[i]);
  }
  return out + ")";
}

void require_size(const FusionFunction& a, std::size_t size) {
  if (a.arity() != size) {
    throw PreconditionError("aggregation '" + a.label() + "' has arity " + std::to_string(a.arity()) +
                            " but the family has " + std::to_string(size) + " members");
  }
}

}  // namespace

const std::vector<std::string>& aggregation_names() {
  static const std::vector<std::string> names{"mean", "min", "max", "product", "identity"};
  return names;
}

FusionFunction make_aggregation(std::string_view name, std::size_t arity) {
  if (arity == 0) throw DomainError("aggregation arity must be positive");
  FusionFunction::Fn fn;
  if (name == "mean") {
    fn = [](std::span<const UnitValue> xs) {
      double sum = 0.0;
      for (const auto& x : xs) sum += x.value();
      return sum / static_cast<double>(xs.size());
    };
  } else if (name == "min") {
    fn = [](std::span<const UnitValue> xs) {
      double m = 1.0;
      for (const auto& x : xs) m = std::min(m, x.value());
      return m;
    };
  } else if (name == "max") {
    fn = [](std::span<const UnitValue> xs) {
      double m = 0.0;
      for (const auto& x : xs) m = std::max(m, x.value());
      return m;
    };
  } else if (name == "product") {
    fn = [](std::span<const UnitValue> xs) {
      double p = 1.0;
      for (const auto& x : xs) p *= x.value();
      return p;
    };
  } else if (name == "identity") {
    if (arity != 1) throw DomainError("identity aggregation is unary");
    fn = [](std::span<const UnitValue> xs) { return xs[0].value(); };
  } else {
    throw DomainError("unknown aggregation '" + std::string(name) + "'");
  }
  return FusionFunction(std::string(name), arity, Role::aggregation, std::move(fn));
}

FusionFunction aggregate(const FusionFunction& a, const OperatorFamily<FusionFunction>& family) {
  require_size(a, family.size());
  Evaluation evaluation = a.evaluation();
  for (const auto& f : family.members()) evaluation = combine(evaluation, f.evaluation());
  auto body = [a, family](std::span<const UnitValue> xs) {
    std::vector<UnitValue> inner;
    inner.reserve(family.size());
    for (const auto& f : family.members()) inner.push_back(f(xs));
    return a(std::span<const UnitValue>(inner)).value();
  };
  return FusionFunction(family_label(a, family), family.arity(), Role::unclassified, std::move(body), evaluation);
}

Implication aggregate(const FusionFunction& a, const OperatorFamily<Implication>& family) {
  require_size(a, family.size());
  Evaluation evaluation = a.evaluation();
  for (const auto& i : family.members()) evaluation = combine(evaluation, i.evaluation());
  auto body = [a, family](double x, double y) {
    std::vector<UnitValue> inner;
    inner.reserve(family.size());
    for (const auto& i : family.members()) inner.push_back(i.at(x, y));
    return a(std::span<const UnitValue>(inner)).value();
  };
  return Implication(family_label(a, family), std::move(body), ImplicationFamily::aggregated, evaluation);
}

FusionFunction aggregate_go(const FusionFunction& a, const OperatorFamily<FusionFunction>& gos,
                            const CheckConfig& config) {
  require_size(a, gos.size());
  const auto a_report = check_axioms(a, AxiomSet::aggregation, config);
  if (!a_report.passed()) {
    throw PreconditionError("'" + a.label() + "' fails the aggregation axioms");
  }
  if (check_continuity(a, config).failed()) {
    throw PreconditionError("'" + a.label() + "' is not continuous on the grid");
  }
  for (const auto& go : gos.members()) {
    const auto report = check_axioms(go, AxiomSet::general_overlap, config);
    for (const auto& e : report.entries) {
      if (e.required && e.failed()) {
        throw PreconditionError("member '" + go.label() + "' fails " + e.id);
      }
    }
  }
  return aggregate(a, gos).with_role(Role::general_overlap);
}

PropertyReport check_commutes(const FusionFunction& a, const OperatorFamily<FusionFunction>& gos, const Negation& n,
                              const CheckConfig& config) {
  if (!n.strong()) throw PreconditionError("check_commutes: negation '" + n.label() + "' is not strong");
  std::vector<Implication> parts;
  parts.reserve(gos.size());
  for (const auto& go : gos.members()) parts.push_back(make_gon(go, n));
  const Implication left = aggregate(a, OperatorFamily<Implication>(std::move(parts)));
  const Implication right = make_gon(aggregate_go(dual(a, n), gos, config), n);

  const auto cmp = compare(left, right, config);
  PropertyReport report;
  report.property = "commutes(" + n.label() + ")";
  report.subject = left.label();
  report.samples_checked = cmp.samples_checked;
  report.max_deviation = cmp.deviation;
  report.tolerance = check_tolerance(config, combine(left.evaluation(), right.evaluation()));
  if (cmp.deviation > report.tolerance) {
    report.status = PropertyStatus::fails;
    report.witness =
        PropertyWitness{{cmp.x, cmp.y}, left.at(cmp.x, cmp.y).value(), right.at(cmp.x, cmp.y).value(), cmp.deviation};
  }
  return report;
}

}  // namespace overlapkit
