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

#include "overlapkit/conjunctors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace overlapkit {

namespace {

std::string format_param(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

double min_of(std::span<const UnitValue> xs) {
  double m = 1.0;
  for (const auto& x : xs) m = std::min(m, x.value());
  return m;
}

double max_of(std::span<const UnitValue> xs) {
  double m = 0.0;
  for (const auto& x : xs) m = std::max(m, x.value());
  return m;
}

// Validates the parameter list of a catalog entry against the names it takes.
class ParamReader {
 public:
  ParamReader(std::string_view entry, const Params& params) : entry_(entry), params_(params) {}

  double require(std::string_view key) {
    for (const auto& [k, v] : params_) {
      if (k == key) {
        used_.emplace_back(k);
        return v;
      }
    }
    throw DomainError(std::string(entry_) + " requires parameter '" + std::string(key) + "'");
  }

  void finish() const {
    for (const auto& [k, v] : params_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) {
        throw DomainError(std::string(entry_) + " does not take parameter '" + k + "'");
      }
    }
  }

 private:
  std::string_view entry_;
  const Params& params_;
  std::vector<std::string> used_;
};

double positive_exponent(ParamReader& reader, std::string_view entry, std::string_view key) {
  const double p = reader.require(key);
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError(std::string(entry) + ": " + std::string(key) + " must be positive");
  }
  return p;
}

std::size_t arity_param(ParamReader& reader, std::string_view entry) {
  const double n = reader.require("n");
  if (!(n >= 2.0) || n != std::floor(n) || n > 64.0) {
    throw DomainError(std::string(entry) + ": n must be an integer in [2, 64]");
  }
  return static_cast<std::size_t>(n);
}

FusionFunction binary(std::string label, Role role, std::function<double(double, double)> f, Params params = {}) {
  return FusionFunction(
      std::move(label), 2, role, [f = std::move(f)](std::span<const UnitValue> xs) { return f(xs[0], xs[1]); },
      Evaluation::closed_form, std::move(params));
}

std::string labelled(std::string_view name, const Params& params) {
  std::string out(name);
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ":" : ",");
    out += params[i].first + "=" + format_param(params[i].second);
  }
  return out;
}

// Values of f over axis^arity, stored with the first coordinate most
// significant so that linear index order is lexicographic order.
class GridTable {
 public:
  GridTable(const FusionFunction& f, std::vector<double> axis) : f_(f), axis_(std::move(axis)), arity_(f.arity()) {
    std::size_t total = 1;
    for (std::size_t d = 0; d < arity_; ++d) total *= axis_.size();
    strides_.assign(arity_, 1);
    for (std::size_t d = arity_; d-- > 1;) strides_[d - 1] = strides_[d] * axis_.size();
    values_.resize(total);
    std::vector<UnitValue> point(arity_);
    for (std::size_t i = 0; i < total; ++i) {
      for (std::size_t d = 0; d < arity_; ++d) point[d] = UnitValue(axis_[coord(i, d)]);
      values_[i] = f_(std::span<const UnitValue>(point)).value();
    }
  }

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] std::size_t axis_size() const { return axis_.size(); }
  [[nodiscard]] double value(std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::size_t coord(std::size_t i, std::size_t d) const { return (i / strides_[d]) % axis_.size(); }
  [[nodiscard]] std::size_t stride(std::size_t d) const { return strides_[d]; }
  [[nodiscard]] double axis(std::size_t k) const { return axis_[k]; }

  [[nodiscard]] std::vector<double> point(std::size_t i) const {
    std::vector<double> p(arity_);
    for (std::size_t d = 0; d < arity_; ++d) p[d] = axis_[coord(i, d)];
    return p;
  }

  // f restricted to coordinate d with the others fixed at point i.
  [[nodiscard]] std::function<double(double)> section(std::size_t i, std::size_t d) const {
    auto base = point(i);
    return [this, base, d](double t) mutable {
      std::vector<UnitValue> p;
      p.reserve(base.size());
      for (std::size_t k = 0; k < base.size(); ++k) p.emplace_back(k == d ? t : base[k]);
      return f_(std::span<const UnitValue>(p)).value();
    };
  }

 private:
  const FusionFunction& f_;
  std::vector<double> axis_;
  std::size_t arity_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

AxiomEntry failure(std::string id, std::vector<double> witness, double deviation, std::string note = {}) {
  AxiomEntry e;
  e.id = std::move(id);
  e.status = AxiomStatus::fails;
  e.witness = std::move(witness);
  e.deviation = deviation;
  e.note = std::move(note);
  return e;
}

AxiomEntry success(std::string id, AxiomStatus status = AxiomStatus::holds_on_grid) {
  AxiomEntry e;
  e.id = std::move(id);
  e.status = status;
  return e;
}

AxiomEntry check_symmetry(const GridTable& t, std::string id, double tol) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t d = 0; d + 1 < t.arity(); ++d) {
      const std::size_t a = t.coord(i, d);
      const std::size_t b = t.coord(i, d + 1);
      if (a >= b) continue;
      const std::size_t j = i + (b - a) * t.stride(d) - (b - a) * t.stride(d + 1);
      const double dev = std::abs(t.value(i) - t.value(j));
      if (dev > tol) return failure(std::move(id), t.point(i), dev, "value changes when arguments are swapped");
    }
  }
  return success(std::move(id));
}

AxiomEntry check_monotone(const GridTable& t, std::string id, double tol) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t d = 0; d < t.arity(); ++d) {
      if (t.coord(i, d) + 1 >= t.axis_size()) continue;
      const double drop = t.value(i) - t.value(i + t.stride(d));
      if (drop > tol) return failure(std::move(id), t.point(i), drop, "decreases along argument " + std::to_string(d + 1));
    }
  }
  return success(std::move(id));
}

AxiomEntry check_antitone_first(const GridTable& t, std::string id, double tol) {
  for (std::size_t i = 0; i + t.stride(0) < t.size(); ++i) {
    const double rise = t.value(i + t.stride(0)) - t.value(i);
    if (rise > tol) return failure(std::move(id), t.point(i), rise, "increases along argument 1");
  }
  return success(std::move(id));
}

AxiomEntry check_monotone_along(const GridTable& t, std::string id, std::size_t d, double tol) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.coord(i, d) + 1 >= t.axis_size()) continue;
    const double drop = t.value(i) - t.value(i + t.stride(d));
    if (drop > tol) return failure(std::move(id), t.point(i), drop, "decreases along argument " + std::to_string(d + 1));
  }
  return success(std::move(id));
}

AxiomEntry check_point(const FusionFunction& f, std::string id, double x, double y, double target, double tol) {
  const double dev = std::abs(f.at(x, y).value() - target);
  if (dev > tol) return failure(std::move(id), {x, y}, dev, "expected " + format_param(target));
  return success(std::move(id));
}

AxiomEntry check_continuity(const GridTable& t, std::string id, double threshold) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t d = 0; d < t.arity(); ++d) {
      if (t.coord(i, d) + 1 >= t.axis_size()) continue;
      const double jump = std::abs(t.value(i + t.stride(d)) - t.value(i));
      if (jump <= threshold) continue;
      const double a = t.axis(t.coord(i, d));
      const double b = t.axis(t.coord(i, d) + 1);
      const auto section = t.section(i, d);
      if (const auto bracket = persistent_jump(section, a, b, threshold)) {
        auto w = t.point(i);
        w[d] = (*bracket)[0];
        const double size = std::abs(section((*bracket)[1]) - section((*bracket)[0]));
        return failure(std::move(id), std::move(w), size,
                       "jump persists along argument " + std::to_string(d + 1) + " down to width 1e-9");
      }
    }
  }
  return success(std::move(id));
}

bool any_coordinate(const GridTable& t, std::size_t i, double v) {
  for (std::size_t d = 0; d < t.arity(); ++d) {
    if (t.axis(t.coord(i, d)) == v) return true;
  }
  return false;
}

bool all_coordinates(const GridTable& t, std::size_t i, double v) {
  for (std::size_t d = 0; d < t.arity(); ++d) {
    if (t.axis(t.coord(i, d)) != v) return false;
  }
  return true;
}

// "If" direction: wherever `premise` holds the value must equal `target`.
AxiomEntry check_boundary(const GridTable& t, std::string id, const std::function<bool(std::size_t)>& premise,
                          double target, double tol) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!premise(i)) continue;
    const double dev = std::abs(t.value(i) - target);
    if (dev > tol) return failure(std::move(id), t.point(i), dev, "boundary value is not " + format_param(target));
  }
  return success(std::move(id));
}

// "Only if" direction: the value may equal `target` only where `premise`
// holds. A grid can falsify this but never prove it. The reported deviation
// is how far the witness sits from the premise region.
AxiomEntry check_converse(const GridTable& t, std::string id, const std::function<bool(std::size_t)>& premise,
                          const std::function<double(std::size_t)>& distance, double target, double tol) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (premise(i)) continue;
    if (std::abs(t.value(i) - target) <= tol) {
      return failure(std::move(id), t.point(i), distance(i),
                     "reaches " + format_param(target) + " away from the boundary");
    }
  }
  return success(std::move(id), AxiomStatus::no_counterexample);
}

double min_coordinate(const GridTable& t, std::size_t i) {
  double m = 1.0;
  for (std::size_t d = 0; d < t.arity(); ++d) m = std::min(m, t.axis(t.coord(i, d)));
  return m;
}

double max_coordinate(const GridTable& t, std::size_t i) {
  double m = 0.0;
  for (std::size_t d = 0; d < t.arity(); ++d) m = std::max(m, t.axis(t.coord(i, d)));
  return m;
}

// Combines the "if" and "only if" halves of a biconditional axiom.
AxiomEntry both_ways(std::string id, AxiomEntry if_part, AxiomEntry only_if_part) {
  if (if_part.failed()) {
    if_part.id = std::move(id);
    return if_part;
  }
  only_if_part.id = std::move(id);
  return only_if_part;
}

AxiomEntry check_neutral_one(const FusionFunction& f, const std::vector<double>& xs, double tol) {
  for (double x : xs) {
    const double dev = std::abs(f.at(x, 1.0).value() - x);
    if (dev > tol) return failure("T3", {x, 1.0}, dev, "1 is not neutral");
  }
  return success("T3");
}

void require_binary(const FusionFunction& f, AxiomSet set) {
  if (f.arity() != 2) {
    throw PreconditionError("axiom set " + std::string(to_string(set)) + " needs a binary function, '" + f.label() +
                            "' has arity " + std::to_string(f.arity()));
  }
}

}  // namespace

std::string_view to_string(AxiomSet set) {
  switch (set) {
    case AxiomSet::overlap: return "O";
    case AxiomSet::grouping: return "G";
    case AxiomSet::general_overlap: return "GO";
    case AxiomSet::t_norm: return "T";
    case AxiomSet::aggregation: return "A";
    case AxiomSet::implication: return "I";
  }
  return "GO";
}

std::optional<AxiomSet> axiom_set_from_string(std::string_view name) {
  if (name == "O" || name == "overlap") return AxiomSet::overlap;
  if (name == "G" || name == "grouping") return AxiomSet::grouping;
  if (name == "GO" || name == "general_overlap") return AxiomSet::general_overlap;
  if (name == "T" || name == "t_norm") return AxiomSet::t_norm;
  if (name == "A" || name == "aggregation") return AxiomSet::aggregation;
  if (name == "I" || name == "implication") return AxiomSet::implication;
  return std::nullopt;
}

std::string_view to_string(AxiomStatus status) {
  switch (status) {
    case AxiomStatus::holds_on_grid: return "holds_on_grid";
    case AxiomStatus::no_counterexample: return "no_counterexample";
    case AxiomStatus::fails: return "fails";
  }
  return "fails";
}

bool AxiomReport::passed() const {
  return std::none_of(entries.begin(), entries.end(), [](const AxiomEntry& e) { return e.required && e.failed(); });
}

const AxiomEntry* AxiomReport::find(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"O_mM",   "O_DB",  "O_P",   "O_V",  "O_min",
                                              "GO_max", "GO_TL", "GO_PN", "GO_GN"};
  return names;
}

FusionFunction catalog(std::string_view name, const Params& params) {
  ParamReader reader(name, params);
  if (name == "O_mM") {
    reader.finish();
    return binary("O_mM", Role::overlap,
                  [](double x, double y) { return std::min(x, y) * std::max(x * x, y * y); });
  }
  if (name == "O_DB") {
    reader.finish();
    return binary("O_DB", Role::overlap, [](double x, double y) { return x + y == 0.0 ? 0.0 : 2.0 * x * y / (x + y); });
  }
  if (name == "O_P") {
    const double p = positive_exponent(reader, name, "p");
    reader.finish();
    return binary(
        labelled(name, {{"p", p}}), Role::overlap, [p](double x, double y) { return std::pow(x, p) * std::pow(y, p); },
        {{"p", p}});
  }
  if (name == "O_V") {
    reader.finish();
    return binary("O_V", Role::overlap, [](double x, double y) {
      if (x >= 0.5 && y >= 0.5) {
        const double u = (2.0 * x - 1.0) * (2.0 * x - 1.0);
        const double v = (2.0 * y - 1.0) * (2.0 * y - 1.0);
        return (1.0 + u * v) / 2.0;
      }
      return std::min(x, y);
    });
  }
  if (name == "O_min") {
    reader.finish();
    return binary("O_min", Role::overlap, [](double x, double y) { return std::min(x, y); });
  }
  if (name == "GO_max") {
    reader.finish();
    return binary("GO_max", Role::general_overlap,
                  [](double x, double y) { return std::max(0.0, x * x + y * y - 1.0); });
  }
  if (name == "GO_TL") {
    const double p = positive_exponent(reader, name, "p");
    reader.finish();
    return binary(
        labelled(name, {{"p", p}}), Role::general_overlap,
        [p](double x, double y) { return std::pow(std::min(x, y), p) * std::max(0.0, x + y - 1.0); }, {{"p", p}});
  }
  if (name == "GO_PN" || name == "GO_GN") {
    const std::size_t n = arity_param(reader, name);
    reader.finish();
    const bool geometric = name == "GO_GN";
    auto body = [n, geometric](std::span<const UnitValue> xs) {
      double product = 1.0;
      double sum = 0.0;
      for (const auto& x : xs) {
        product *= x.value();
        sum += x.value();
      }
      const double factor = sum <= 1.0 ? 0.0 : min_of(xs);
      const double lead = geometric ? std::pow(product, 1.0 / static_cast<double>(n)) : product;
      return lead * factor;
    };
    const Params p{{"n", static_cast<double>(n)}};
    return FusionFunction(labelled(name, p), n, Role::general_overlap, std::move(body), Evaluation::closed_form, p);
  }
  throw DomainError("unknown catalog entry '" + std::string(name) + "'");
}

FusionFunction truncate_overlap(const FusionFunction& overlap, double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("trunc: a must lie in (0,1)");
  if (overlap.arity() != 2) throw PreconditionError("trunc: '" + overlap.label() + "' is not binary");
  if (overlap.role() != Role::overlap) {
    throw PreconditionError("trunc: '" + overlap.label() + "' is not tagged as an overlap function");
  }
  auto body = [overlap, a](std::span<const UnitValue> xs) {
    const double cut = overlap.at(max_of(xs), a).value();
    const double lifted = std::max(0.0, overlap(xs).value() - cut);
    return lifted / (1.0 - cut);
  };
  Params params = overlap.params();
  params.emplace_back("a", a);
  return FusionFunction("trunc:" + overlap.label() + ",a=" + format_param(a), 2, Role::general_overlap,
                        std::move(body), overlap.evaluation(), std::move(params));
}

FusionFunction max_grouping() {
  return binary("max_grouping", Role::grouping, [](double x, double y) { return std::max(x, y); });
}

FusionFunction probabilistic_sum() {
  return binary("probsum", Role::grouping, [](double x, double y) { return 1.0 - (1.0 - x) * (1.0 - y); });
}

namespace {

FusionFunction negated_conjugate(const FusionFunction& f, const Negation& n, std::string label, Role role) {
  auto body = [f, n](std::span<const UnitValue> xs) {
    return n(f(n(xs[0]), n(xs[1]))).value();
  };
  return FusionFunction(std::move(label), 2, role, std::move(body), combine(f.evaluation(), n.evaluation()));
}

void require_dual_inputs(const FusionFunction& f, const Negation& n, std::string_view what) {
  if (f.arity() != 2) throw PreconditionError(std::string(what) + ": '" + f.label() + "' is not binary");
  if (!n.strict()) throw PreconditionError(std::string(what) + ": negation '" + n.label() + "' is not strict");
}

}  // namespace

DualConstruction grouping_construction(const FusionFunction& go, const Negation& n, const CheckConfig& config) {
  require_dual_inputs(go, n, "dualG");
  AxiomReport premise = check_axioms(go, AxiomSet::general_overlap, config);
  const auto* a2 = premise.find("GO2a");
  const auto* a3 = premise.find("GO3a");
  const bool holds = premise.passed() && !a2->failed() && !a3->failed();
  auto g = negated_conjugate(go, n, "dualG(" + go.label() + ", " + n.label() + ")",
                             holds ? Role::grouping : Role::unclassified);
  return {std::move(g), std::move(premise), holds};
}

FusionFunction grouping_from(const FusionFunction& go, const Negation& n, const CheckConfig& config) {
  return grouping_construction(go, n, config).function;
}

DualConstruction overlap_construction(const FusionFunction& g, const Negation& n, const CheckConfig& config) {
  require_dual_inputs(g, n, "dualO");
  AxiomReport premise = check_axioms(g, AxiomSet::grouping, config);
  const bool holds = premise.passed();
  auto go = negated_conjugate(g, n, "dualO(" + g.label() + ", " + n.label() + ")",
                              holds ? Role::general_overlap : Role::unclassified);
  return {std::move(go), std::move(premise), holds};
}

FusionFunction overlap_from(const FusionFunction& g, const Negation& n, const CheckConfig& config) {
  return overlap_construction(g, n, config).function;
}

FusionFunction piecewise_neutral_go(double e) {
  if (!(e > 0.0 && e <= 1.0)) throw DomainError("neutral_go: e must lie in (0,1]");
  return binary(
      "neutral_go:e=" + format_param(e), Role::general_overlap,
      [e](double x, double y) {
        if (std::max(x, y) <= e) return std::min(x, y);
        if (std::min(x, y) >= e) return std::max(x, y);
        return x * y / e;
      },
      {{"e", e}});
}

FusionFunction idempotent_go(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("idem_go: p and q must be positive");
  }
  return binary(
      "idem_go:p=" + format_param(p) + ",q=" + format_param(q), Role::general_overlap,
      [p, q](double x, double y) {
        const double s = (std::pow(x, p) * std::pow(y, q) + std::pow(x, q) * std::pow(y, p)) / 2.0;
        return std::pow(s, 1.0 / (p + q));
      },
      {{"p", p}, {"q", q}});
}

AxiomEntry check_continuity(const FusionFunction& f, const CheckConfig& config) {
  config.validate();
  const std::vector<double> axis = f.arity() <= 2 ? sorted_samples(config)
                                                  : regular_grid(std::min(config.grid_resolution, kTripleGridResolution));
  const GridTable table(f, axis);
  return check_continuity(table, "continuity", continuity_threshold(config));
}

AxiomEntry check_associativity(const FusionFunction& f, const CheckConfig& config) {
  if (f.arity() != 2) throw PreconditionError("associativity needs a binary function");
  const double tol = check_tolerance(config, f.evaluation());
  for (const auto& [x, y, z] : sample_triples(config)) {
    const double left = f.at(x, f.at(y, z).value()).value();
    const double right = f.at(f.at(x, y).value(), z).value();
    const double dev = std::abs(left - right);
    if (dev > tol) return failure("T2", {x, y, z}, dev, "f(x, f(y,z)) != f(f(x,y), z)");
  }
  return success("T2");
}

AxiomReport check_axioms(const FusionFunction& f, AxiomSet set, const CheckConfig& config) {
  config.validate();
  if (set != AxiomSet::general_overlap && set != AxiomSet::aggregation) require_binary(f, set);

  const std::size_t arity = f.arity();
  std::vector<double> axis = arity <= 2 ? sorted_samples(config)
                                        : regular_grid(std::min(config.grid_resolution, kTripleGridResolution));
  const GridTable table(f, axis);
  const double tol = check_tolerance(config, f.evaluation());
  // Boundary values in either direction are compared exactly for closed forms.
  const double boundary_tol = f.evaluation() == Evaluation::closed_form ? 0.0 : tol;
  const double threshold = continuity_threshold(config);

  auto some_zero = [&](std::size_t i) { return any_coordinate(table, i, 0.0); };
  auto all_zero = [&](std::size_t i) { return all_coordinates(table, i, 0.0); };
  auto some_one = [&](std::size_t i) { return any_coordinate(table, i, 1.0); };
  auto all_one = [&](std::size_t i) { return all_coordinates(table, i, 1.0); };
  auto lowest = [&](std::size_t i) { return min_coordinate(table, i); };
  auto highest = [&](std::size_t i) { return max_coordinate(table, i); };
  auto lowest_gap = [&](std::size_t i) { return 1.0 - min_coordinate(table, i); };
  auto highest_gap = [&](std::size_t i) { return 1.0 - max_coordinate(table, i); };

  AxiomReport report;
  report.set = set;
  report.subject = f.label();
  report.points_checked = table.size();
  auto& out = report.entries;

  switch (set) {
    case AxiomSet::overlap:
      out.push_back(check_symmetry(table, "O1", tol));
      out.push_back(both_ways("O2", check_boundary(table, "", some_zero, 0.0, boundary_tol),
                              check_converse(table, "", some_zero, lowest, 0.0, boundary_tol)));
      out.push_back(both_ways("O3", check_boundary(table, "", all_one, 1.0, boundary_tol),
                              check_converse(table, "", all_one, lowest_gap, 1.0, boundary_tol)));
      out.push_back(check_monotone(table, "O4", tol));
      out.push_back(check_continuity(table, "O5", threshold));
      break;
    case AxiomSet::grouping:
      out.push_back(check_symmetry(table, "G1", tol));
      out.push_back(both_ways("G2", check_boundary(table, "", all_zero, 0.0, boundary_tol),
                              check_converse(table, "", all_zero, highest, 0.0, boundary_tol)));
      out.push_back(both_ways("G3", check_boundary(table, "", some_one, 1.0, boundary_tol),
                              check_converse(table, "", some_one, highest_gap, 1.0, boundary_tol)));
      out.push_back(check_monotone(table, "G4", tol));
      out.push_back(check_continuity(table, "G5", threshold));
      break;
    case AxiomSet::general_overlap: {
      out.push_back(check_symmetry(table, "GO1", tol));
      out.push_back(check_boundary(table, "GO2", some_zero, 0.0, boundary_tol));
      out.push_back(check_boundary(table, "GO3", all_one, 1.0, boundary_tol));
      out.push_back(check_monotone(table, "GO4", tol));
      out.push_back(check_continuity(table, "GO5", threshold));
      auto a2 = check_converse(table, "GO2a", some_zero, lowest, 0.0, boundary_tol);
      auto a3 = check_converse(table, "GO3a", all_one, lowest_gap, 1.0, boundary_tol);
      a2.required = false;
      a3.required = false;
      out.push_back(std::move(a2));
      out.push_back(std::move(a3));
      break;
    }
    case AxiomSet::t_norm:
      out.push_back(check_symmetry(table, "T1", tol));
      out.push_back(check_associativity(f, config));
      out.push_back(check_neutral_one(f, axis, tol));
      [[fallthrough]];
    case AxiomSet::aggregation: {
      AxiomEntry a1 = check_boundary(table, "A1", all_zero, 0.0, boundary_tol);
      if (!a1.failed()) a1 = check_boundary(table, "A1", all_one, 1.0, boundary_tol);
      out.push_back(std::move(a1));
      out.push_back(check_monotone(table, "A2", tol));
      break;
    }
    case AxiomSet::implication:
      out.push_back(check_antitone_first(table, "I1", tol));
      out.push_back(check_monotone_along(table, "I2", 1, tol));
      out.push_back(check_point(f, "I3", 0.0, 0.0, 1.0, boundary_tol));
      out.push_back(check_point(f, "I4", 1.0, 1.0, 1.0, boundary_tol));
      out.push_back(check_point(f, "I5", 1.0, 0.0, 0.0, boundary_tol));
      break;
  }
  return report;
}

std::optional<UnitValue> find_neutral(const FusionFunction& f, const CheckConfig& config) {
  if (f.arity() != 2) throw PreconditionError("find_neutral needs a binary function");
  const auto xs = sorted_samples(config);
  const double tol = check_tolerance(config, f.evaluation());

  auto deviation = [&](double a) {
    double worst = 0.0;
    for (double x : xs) {
      worst = std::max(worst, std::abs(f.at(x, a).value() - x));
      if (worst > tol) break;
    }
    return worst;
  };

  std::vector<double> candidates;
  for (double a : xs) {
    // Cheap screen: a neutral element must fix 0.5.
    if (std::abs(f.at(0.5, a).value() - 0.5) <= tol) candidates.push_back(a);
  }
  // a -> f(0.5, a) - 0.5 is increasing; both ends of its zero set are
  // candidates, found to full precision.
  if (f.at(0.5, 0.0).value() < 0.5 && f.at(0.5, 1.0).value() >= 0.5) {
    candidates.push_back(bisect_sup([&](double a) { return f.at(0.5, a).value() < 0.5; }, config.bisect_tol / 8));
  }
  if (f.at(0.5, 0.0).value() <= 0.5 && f.at(0.5, 1.0).value() >= 0.5) {
    candidates.push_back(bisect_sup([&](double a) { return f.at(0.5, a).value() <= 0.5; }, config.bisect_tol / 8));
  }

  std::optional<double> best;
  double best_dev = 0.0;
  for (double a : candidates) {
    const double dev = deviation(a);
    if (dev > tol) continue;
    if (!best || dev < best_dev || (dev == best_dev && a > *best)) {
      best = a;
      best_dev = dev;
    }
  }
  if (!best) return std::nullopt;
  return UnitValue(*best);
}

IdempotencyResult check_idempotent(const FusionFunction& f, const CheckConfig& config) {
  const double tol = check_tolerance(config, f.evaluation());
  IdempotencyResult out;
  for (double x : sorted_samples(config)) {
    const double dev = std::abs(f.diagonal(UnitValue(x)).value() - x);
    if (dev > tol) {
      out.witness = x;
      out.deviation = dev;
      return out;
    }
    out.deviation = std::max(out.deviation, dev);
  }
  out.idempotent = true;
  return out;
}

}  // namespace overlapkit
