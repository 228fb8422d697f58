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

#include "overlapkit/implication.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace overlapkit {

namespace {

std::string format_param(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

void require_binary(const FusionFunction& f, std::string_view what) {
  if (f.arity() != 2) throw PreconditionError(std::string(what) + ": '" + f.label() + "' is not binary");
}

void require_role(const FusionFunction& f, Role role, std::string_view what) {
  require_binary(f, what);
  if (f.role() != role) {
    throw PreconditionError(std::string(what) + ": '" + f.label() + "' is tagged " + std::string(to_string(f.role())) +
                            ", expected " + std::string(to_string(role)));
  }
}

bool in_open_closed(double v) { return v > 0.0 && v <= 1.0; }
bool in_closed_open(double v) { return v >= 0.0 && v < 1.0; }

// A threshold found within a few ulps of a 9-digit decimal is taken to be that
// decimal. Rounding inside the implication (x*x + 1 - 1, say) can shift the
// double-precision edge slightly off the value it represents.
std::optional<double> decimal_near(double v) {
  const double r = std::round(v * 1e9) / 1e9;
  if (std::abs(r - v) <= 1e-12) return r;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ImplicationFamily family) {
  switch (family) {
    case ImplicationFamily::gon: return "gon";
    case ImplicationFamily::gn: return "gn";
    case ImplicationFamily::ql: return "ql";
    case ImplicationFamily::residual: return "ro";
    case ImplicationFamily::d: return "d";
    case ImplicationFamily::tn: return "tn";
    case ImplicationFamily::crisp: return "crisp";
    case ImplicationFamily::aggregated: return "agg";
    case ImplicationFamily::custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(CrispKind kind) {
  switch (kind) {
    case CrispKind::C1: return "C1";
    case CrispKind::C2: return "C2";
    case CrispKind::C3: return "C3";
    case CrispKind::C4: return "C4";
  }
  return "C1";
}

std::optional<CrispKind> crisp_kind_from_string(std::string_view name) {
  if (name == "C1") return CrispKind::C1;
  if (name == "C2") return CrispKind::C2;
  if (name == "C3") return CrispKind::C3;
  if (name == "C4") return CrispKind::C4;
  return std::nullopt;
}

Implication::Implication(std::string label, Fn fn, ImplicationFamily family, Evaluation evaluation)
    : label_(std::move(label)), fn_(std::move(fn)), family_(family), evaluation_(evaluation) {
  if (!fn_) throw DomainError("implication '" + label_ + "' has no body");
}

UnitValue Implication::operator()(UnitValue x, UnitValue y) const {
  const double out = fn_(x.value(), y.value());
  if (!(out >= 0.0 && out <= 1.0)) {
    throw DomainError("'" + label_ + "' produced " + std::to_string(out) + ", outside [0,1]");
  }
  return UnitValue(out);
}

FusionFunction Implication::as_fusion() const {
  return FusionFunction(
      label_, 2, Role::unclassified,
      [self = *this](std::span<const UnitValue> xs) { return self(xs[0], xs[1]).value(); }, evaluation_);
}

Implication make_gon(const FusionFunction& go, const Negation& n) {
  require_binary(go, "gon");
  return Implication(
      "gon(" + go.label() + ", " + n.label() + ")",
      [go, n](double x, double y) { return n(go(UnitValue(x), n(UnitValue(y)))).value(); }, ImplicationFamily::gon,
      combine(go.evaluation(), n.evaluation()));
}

Implication make_gn(const FusionFunction& g, const Negation& n) {
  require_role(g, Role::grouping, "gn");
  return Implication(
      "gn(" + g.label() + ", " + n.label() + ")",
      [g, n](double x, double y) { return g(n(UnitValue(x)), UnitValue(y)).value(); }, ImplicationFamily::gn,
      combine(g.evaluation(), n.evaluation()));
}

Implication make_ql(const FusionFunction& o, const FusionFunction& g) {
  require_role(o, Role::overlap, "ql");
  require_role(g, Role::grouping, "ql");
  return Implication(
      "ql(" + o.label() + ", " + g.label() + ")",
      [o, g](double x, double y) {
        if (x < 1.0) return 1.0;
        return g(UnitValue::zero(), o(UnitValue::one(), UnitValue(y))).value();
      },
      ImplicationFamily::ql, combine(o.evaluation(), g.evaluation()));
}

Implication make_residual(const FusionFunction& o, const CheckConfig& config) {
  require_binary(o, "ro");
  config.validate();
  const double tol = config.bisect_tol;
  return Implication(
      "ro(" + o.label() + ")",
      [o, tol](double x, double y) {
        const UnitValue ux(x);
        if (o(ux, UnitValue::zero()).value() > y) {
          throw PreconditionError("ro: " + o.label() + "(" + format_param(x) + ", 0) exceeds " + format_param(y) +
                                  "; no admissible z");
        }
        return bisect_sup([&](double z) { return o(ux, UnitValue(z)).value() <= y; }, tol).value();
      },
      ImplicationFamily::residual, Evaluation::iterative);
}

Implication make_d(const FusionFunction& g) {
  require_role(g, Role::grouping, "d");
  return Implication(
      "d(" + g.label() + ")",
      [g](double x, double y) {
        if (x < 1.0) return 1.0;
        return g(UnitValue::zero(), UnitValue(y)).value();
      },
      ImplicationFamily::d, g.evaluation());
}

Implication make_tn(const FusionFunction& t, const Negation& n, const CheckConfig& config) {
  require_binary(t, "tn");
  const auto report = check_axioms(t, AxiomSet::t_norm, config);
  if (!report.passed()) {
    for (const auto& e : report.entries) {
      if (e.failed()) throw PreconditionError("tn: '" + t.label() + "' is not a t-norm (fails " + e.id + ")");
    }
  }
  return Implication(
      "tn(" + t.label() + ", " + n.label() + ")",
      [t, n](double x, double y) { return n(t(UnitValue(x), n(UnitValue(y)))).value(); }, ImplicationFamily::tn,
      combine(t.evaluation(), n.evaluation()));
}

Implication make_crisp_family(CrispKind kind, double alpha, double beta) {
  bool ok = false;
  switch (kind) {
    case CrispKind::C1: ok = in_open_closed(alpha) && in_closed_open(beta); break;
    case CrispKind::C2: ok = in_closed_open(alpha) && in_open_closed(beta); break;
    case CrispKind::C3: ok = in_open_closed(alpha) && in_open_closed(beta); break;
    case CrispKind::C4: ok = in_closed_open(alpha) && in_closed_open(beta); break;
  }
  if (!ok) {
    throw DomainError("crisp " + std::string(to_string(kind)) + ": alpha=" + format_param(alpha) +
                      ", beta=" + format_param(beta) + " out of range");
  }
  const bool x_closed = kind == CrispKind::C1 || kind == CrispKind::C3;
  const bool y_closed = kind == CrispKind::C1 || kind == CrispKind::C4;
  return Implication(
      "crisp(" + std::string(to_string(kind)) + ", " + format_param(alpha) + ", " + format_param(beta) + ")",
      [alpha, beta, x_closed, y_closed](double x, double y) {
        const bool x_in = x_closed ? x >= alpha : x > alpha;
        const bool y_in = y_closed ? y <= beta : y < beta;
        return x_in && y_in ? 0.0 : 1.0;
      },
      ImplicationFamily::crisp);
}

Negation natural_negation(const Implication& i, const CheckConfig& config) {
  return Negation::from_function(
      "natural(" + i.label() + ")", [i](double x) { return i.at(x, 0.0).value(); }, i.evaluation(), config);
}

FusionFunction recover_go(const Implication& i, const Negation& n, double tol) {
  if (!n.strict()) throw PreconditionError("recover: negation '" + n.label() + "' is not strict");
  return FusionFunction(
      "recover(" + i.label() + ", " + n.label() + ")", 2, Role::general_overlap,
      [i, n, tol](std::span<const UnitValue> xs) {
        const UnitValue inner = invert_strict(n, xs[1], tol);
        return invert_strict(n, i(xs[0], inner), tol).value();
      },
      Evaluation::iterative);
}

AxiomReport check_implication_axioms(const Implication& i, const CheckConfig& config) {
  return check_axioms(i.as_fusion(), AxiomSet::implication, config);
}

std::optional<CrispFit> classify_crisp(const Implication& i, const CheckConfig& config) {
  const auto xs = sorted_samples(config);
  for (double x : xs) {
    for (double y : xs) {
      const double v = i.at(x, y).value();
      if (std::abs(v) > config.eq_tol && std::abs(1.0 - v) > config.eq_tol) return std::nullopt;
    }
  }
  auto is_one = [&](double x, double y) { return i.at(x, y).value() > 0.5; };

  // Left edge of the 0-region along y = 0, lower edge along x = 1.
  const auto x_edge = bisect_boundary([&](double x) { return is_one(x, 0.0); });
  const auto y_edge = bisect_boundary([&](double y) { return !is_one(1.0, y); });
  if (!x_edge || !y_edge) return std::nullopt;

  // Open or closed is read off at the threshold itself.
  double alpha = x_edge->above;
  bool x_closed = true;
  if (const auto d = decimal_near(x_edge->above)) {
    alpha = *d;
    x_closed = !is_one(alpha, 0.0);
  }

  double beta = y_edge->below;
  bool y_closed = true;
  if (const auto d = decimal_near(y_edge->below)) {
    beta = *d;
    y_closed = !is_one(1.0, beta);
  }

  CrispKind kind;
  if (x_closed && y_closed) {
    kind = CrispKind::C1;
  } else if (!x_closed && !y_closed) {
    kind = CrispKind::C2;
  } else if (x_closed) {
    kind = CrispKind::C3;
  } else {
    kind = CrispKind::C4;
  }

  std::optional<Implication> fitted;
  try {
    fitted = make_crisp_family(kind, alpha, beta);
  } catch (const DomainError&) {
    return std::nullopt;
  }

  // The fit must reproduce every sample and the thresholds themselves.
  std::vector<double> probe = xs;
  probe.insert(probe.end(), {alpha, beta});
  for (double x : probe) {
    for (double y : probe) {
      if (is_one(x, y) != (fitted->at(x, y).value() > 0.5)) return std::nullopt;
    }
  }
  return CrispFit{kind, alpha, beta};
}

}  // namespace overlapkit
