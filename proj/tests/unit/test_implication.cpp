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

#include <gtest/gtest.h>

#include <cmath>

#include <overlapkit/conjunctors.hpp>
#include <overlapkit/implication.hpp>
#include <overlapkit/negation.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace ok = overlapkit;

namespace {

ok::FusionFunction cat(std::string_view name, const ok::Params& p = {}) { return ok::catalog(name, p); }
ok::Negation upper(double a) { return ok::make_crisp(ok::CrispSide::upper, ok::UnitValue(a)); }
ok::Negation lower(double a) { return ok::make_crisp(ok::CrispSide::lower, ok::UnitValue(a)); }

std::vector<ok::FusionFunction> binary_catalog() {
  return {cat("O_mM"), cat("O_DB"), cat("O_P", {{"p", 2.0}}), cat("O_V"), cat("O_min"), cat("GO_max"),
          cat("GO_TL", {{"p", 2.0}})};
}

std::vector<ok::Negation> negations() {
  return {ok::make_standard(), ok::make_power_strict(2.0), upper(0.5), lower(0.5), ok::make_top(),
          ok::make_bottom()};
}

}  // namespace

TEST(Gon, ExampleOneClosedForm) {
  const auto i = ok::make_gon(cat("GO_max"), ok::make_standard());
  EXPECT_EQ(i.at(0.6, 0.2).value(), 1.0);
  EXPECT_EQ(i.at(1.0, 0.0).value(), 0.0);
  EXPECT_LE(oracle::sup_deviation(i, oracle::gon_max_zadeh, {}), 1e-12);
  EXPECT_EQ(i.family(), ok::ImplicationFamily::gon);
}

TEST(Gon, CrispLowerExample) {
  // 0 where y <= alpha and x^2 > alpha
  const auto i = ok::make_gon(cat("GO_max"), lower(0.5));
  EXPECT_EQ(i.at(0.8, 0.3).value(), 0.0);
  EXPECT_EQ(i.at(0.7, 0.3).value(), 1.0);
  EXPECT_EQ(i.at(0.8, 0.6).value(), 1.0);
}

// Frozen from 1 - (1 - y^2)^4 and 1 - (1 - y^2)^2.
TEST(Gon, PowerNegationAtXOne) {
  const auto n = ok::make_power_strict(2.0);
  const auto gon = ok::make_gon(cat("GO_max"), n);
  const auto tn = ok::make_tn(cat("O_min"), n);
  const double ys[] = {0.3, 0.5, 0.8};
  const double gon_expected[] = {0.3142503899999999, 0.68359375, 0.98320384};
  const double tn_expected[] = {0.17189999999999994, 0.4375, 0.8704000000000001};
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(gon.at(1.0, ys[k]).value(), gon_expected[k], 1e-14);
    EXPECT_NEAR(tn.at(1.0, ys[k]).value(), tn_expected[k], 1e-14);
    EXPECT_GT(std::abs(gon.at(1.0, ys[k]).value() - tn.at(1.0, ys[k]).value()), 1e-9);
  }
}

TEST(Gon, DistinctFromEveryCatalogTNorm) {
  const ok::CheckConfig config;
  for (const auto& n : {ok::make_standard(), ok::make_power_strict(2.0)}) {
    const auto gon = ok::make_gon(cat("GO_max"), n);
    for (const auto& t : binary_catalog()) {
      if (!ok::check_axioms(t, ok::AxiomSet::t_norm, config).passed()) continue;
      const auto tn = ok::make_tn(t, n, config);
      double worst = 0.0;
      for (double y : ok::sorted_samples(config)) {
        worst = std::max(worst, std::abs(gon.at(1.0, y).value() - tn.at(1.0, y).value()));
      }
      EXPECT_GT(worst, config.eq_tol) << t.label() << " " << n.label();
    }
  }
}

TEST(Gn, Values) {
  const auto top = ok::make_gn(ok::max_grouping(), ok::make_top());
  for (double y : ok::regular_grid(11)) {
    EXPECT_EQ(top.at(1.0, y).value(), y);
    EXPECT_EQ(top.at(0.9, y).value(), 1.0);
    EXPECT_EQ(top.at(0.0, y).value(), 1.0);
  }
  EXPECT_NEAR(ok::make_gn(ok::probabilistic_sum(), ok::make_standard()).at(0.5, 0.5).value(), 0.75, 1e-15);
  EXPECT_THROW(ok::make_gn(cat("O_min"), ok::make_standard()), ok::PreconditionError);
}

TEST(Ql, Branches) {
  const auto i = ok::make_ql(cat("O_min"), ok::max_grouping());
  EXPECT_EQ(i.at(1.0, 0.4).value(), 0.4);
  EXPECT_EQ(i.at(0.99, 0.0).value(), 1.0);
  for (double x : ok::regular_grid(11)) {
    if (x < 1.0) EXPECT_EQ(i.at(x, 0.2).value(), 1.0);
  }
  EXPECT_NEAR(ok::make_ql(cat("O_P", {{"p", 2.0}}), ok::max_grouping()).at(1.0, 0.5).value(), 0.25, 1e-15);
  EXPECT_THROW(ok::make_ql(cat("GO_max"), ok::max_grouping()), ok::PreconditionError);
  EXPECT_THROW(ok::make_ql(cat("O_min"), cat("O_min")), ok::PreconditionError);
}

TEST(Residual, Goguen) {
  const ok::CheckConfig config;
  const auto i = ok::make_residual(cat("O_P", {{"p", 1.0}}), config);
  EXPECT_EQ(i.evaluation(), ok::Evaluation::iterative);
  EXPECT_NEAR(i.at(0.5, 0.2).value(), 0.4, config.bisect_tol);
  EXPECT_EQ(i.at(0.0, 0.3).value(), 1.0);
  EXPECT_LE(oracle::sup_deviation(i, oracle::goguen, config), config.bisect_tol);
}

TEST(Residual, Goedel) {
  const ok::CheckConfig config;
  const auto i = ok::make_residual(cat("O_min"), config);
  EXPECT_NEAR(i.at(0.7, 0.3).value(), 0.3, config.bisect_tol);
  EXPECT_LE(oracle::sup_deviation(i, oracle::goedel, config), config.bisect_tol);
}

TEST(Residual, NonConformingConjunction) {
  const ok::FusionFunction bad("shifted", 2, ok::Role::unclassified,
                               [](std::span<const ok::UnitValue> xs) { return 0.5 + 0.5 * xs[0] * xs[1]; });
  const auto i = ok::make_residual(bad);
  EXPECT_THROW(i.at(0.5, 0.2), ok::PreconditionError);
}

TEST(D, Values) {
  const auto i = ok::make_d(ok::max_grouping());
  EXPECT_EQ(i.at(1.0, 0.4).value(), 0.4);
  EXPECT_EQ(i.at(0.3, 0.0).value(), 1.0);
  const auto s = ok::make_d(ok::probabilistic_sum());
  for (double y : ok::regular_grid(11)) EXPECT_NEAR(s.at(1.0, y).value(), y, 1e-15);
}

TEST(Tn, KleeneDienes) {
  const auto i = ok::make_tn(cat("O_min"), ok::make_standard());
  EXPECT_LE(oracle::sup_deviation(i, oracle::kleene_dienes, {}), 1e-15);
  EXPECT_EQ(i.at(0.0, 0.3).value(), 1.0);
  EXPECT_EQ(i.at(1.0, 0.0).value(), 0.0);
}

TEST(Tn, RejectsNonTNorm) {
  try {
    ok::make_tn(cat("GO_max"), ok::make_standard());
    FAIL() << "expected PreconditionError";
  } catch (const ok::PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("T2"), std::string::npos);
  }
}

TEST(CrispFamily, Cases) {
  EXPECT_EQ(ok::make_crisp_family(ok::CrispKind::C3, 0.5, 0.5).at(0.5, 0.4).value(), 0.0);
  EXPECT_EQ(ok::make_crisp_family(ok::CrispKind::C4, 0.5, 0.5).at(0.5, 0.5).value(), 1.0);
  EXPECT_EQ(ok::make_crisp_family(ok::CrispKind::C1, 0.5, 0.5).at(0.5, 0.5).value(), 0.0);
  EXPECT_EQ(ok::make_crisp_family(ok::CrispKind::C2, 0.5, 0.5).at(0.6, 0.5).value(), 1.0);
  for (auto kind : {ok::CrispKind::C1, ok::CrispKind::C2, ok::CrispKind::C3, ok::CrispKind::C4}) {
    const double alpha = kind == ok::CrispKind::C2 || kind == ok::CrispKind::C4 ? 0.0 : 1.0;
    const double beta = kind == ok::CrispKind::C1 || kind == ok::CrispKind::C4 ? 0.0 : 1.0;
    const auto i = ok::make_crisp_family(kind, alpha, beta);
    for (double y : ok::regular_grid(11)) EXPECT_EQ(i.at(0.0, y).value(), 1.0);
    EXPECT_TRUE(ok::check_implication_axioms(i, {}).passed()) << ok::to_string(kind);
  }
}

TEST(CrispFamily, RangeChecks) {
  EXPECT_THROW(ok::make_crisp_family(ok::CrispKind::C1, 0.0, 0.5), ok::DomainError);
  EXPECT_THROW(ok::make_crisp_family(ok::CrispKind::C1, 0.5, 1.0), ok::DomainError);
  EXPECT_THROW(ok::make_crisp_family(ok::CrispKind::C2, 1.0, 0.5), ok::DomainError);
  EXPECT_THROW(ok::make_crisp_family(ok::CrispKind::C3, 0.5, 0.0), ok::DomainError);
  EXPECT_THROW(ok::make_crisp_family(ok::CrispKind::C4, 1.0, 0.5), ok::DomainError);
  EXPECT_EQ(ok::crisp_kind_from_string("C3"), ok::CrispKind::C3);
  EXPECT_FALSE(ok::crisp_kind_from_string("C5"));
}

TEST(CrispFamily, MatchesOracle) {
  const struct {
    ok::CrispKind kind;
    bool x_closed, y_closed;
  } cases[] = {{ok::CrispKind::C1, true, true},
               {ok::CrispKind::C2, false, false},
               {ok::CrispKind::C3, true, false},
               {ok::CrispKind::C4, false, true}};
  for (const auto& c : cases) {
    const auto i = ok::make_crisp_family(c.kind, 0.4, 0.6);
    const auto ref = [&](double x, double y) { return oracle::crisp(c.x_closed, c.y_closed, 0.4, 0.6, x, y); };
    EXPECT_EQ(oracle::sup_deviation(i, ref, {}), 0.0) << ok::to_string(c.kind);
  }
}

TEST(NaturalNegation, Values) {
  const ok::CheckConfig config;
  const auto nz = ok::natural_negation(ok::make_gon(cat("O_min"), ok::make_standard()), config);
  for (double x : ok::sorted_samples(config)) EXPECT_NEAR(nz.at(x).value(), 1.0 - x, 1e-15);
  EXPECT_TRUE(nz.strong());
  const auto nmax = ok::natural_negation(ok::make_gon(cat("GO_max"), ok::make_standard()), config);
  for (double x : ok::sorted_samples(config)) EXPECT_NEAR(nmax.at(x).value(), 1.0 - x * x, 1e-15);
  EXPECT_FALSE(nmax.strong());
  const auto c3 = ok::natural_negation(ok::make_crisp_family(ok::CrispKind::C3, 0.5, 0.5), config);
  const auto ref = upper(0.5);
  for (double x : ok::sorted_samples(config)) EXPECT_EQ(c3.at(x).value(), ref.at(x).value());
}

// For strict N: N_I equals N exactly when 1 is neutral for GO.
TEST(NaturalNegation, NeutralElementBiconditional) {
  const ok::CheckConfig config;
  for (const auto& n : {ok::make_standard(), ok::make_power_strict(2.0)}) {
    for (const auto& go : binary_catalog()) {
      const auto ni = ok::natural_negation(ok::make_gon(go, n), config);
      double worst = 0.0;
      for (double x : ok::sorted_samples(config)) worst = std::max(worst, std::abs(ni.at(x).value() - n.at(x).value()));
      const auto e = ok::find_neutral(go, config);
      EXPECT_EQ(worst <= config.eq_tol, e && e->value() == 1.0) << go.label() << " " << n.label();
    }
  }
}

TEST(Recover, Roundtrip) {
  const ok::CheckConfig config;
  const auto go = cat("GO_max");
  const auto r = ok::recover_go(ok::make_gon(go, ok::make_standard()), ok::make_standard(), config.bisect_tol);
  EXPECT_NEAR(r.at(0.8, 0.9).value(), 0.45, 2 * config.bisect_tol);
  for (double x : ok::regular_grid(11)) EXPECT_NEAR(r.at(x, 0.0).value(), 0.0, 2 * config.bisect_tol);
  const auto p2 = cat("O_P", {{"p", 2.0}});
  const auto n = ok::make_power_strict(2.0);
  const auto back = ok::recover_go(ok::make_gon(p2, n), n, config.bisect_tol);
  EXPECT_EQ(back.role(), ok::Role::general_overlap);
  double worst = 0.0;
  for (double x : ok::regular_grid(41)) {
    for (double y : ok::regular_grid(41)) worst = std::max(worst, std::abs(back.at(x, y).value() - p2.at(x, y).value()));
  }
  EXPECT_LE(worst, 2 * config.bisect_tol);
  EXPECT_THROW(ok::recover_go(ok::make_gon(go, upper(0.5)), upper(0.5), 1e-8), ok::PreconditionError);
}

TEST(Axioms, EveryGonIsAnImplication) {
  const ok::CheckConfig config;
  for (const auto& go : binary_catalog()) {
    for (const auto& n : negations()) {
      const auto r = ok::check_implication_axioms(ok::make_gon(go, n), config);
      EXPECT_TRUE(r.passed()) << go.label() << " " << n.label();
    }
  }
}

TEST(Axioms, OtherFamiliesAreImplications) {
  const ok::CheckConfig config;
  EXPECT_TRUE(ok::check_implication_axioms(ok::make_ql(cat("O_min"), ok::max_grouping()), config).passed());
  EXPECT_TRUE(ok::check_implication_axioms(ok::make_d(ok::probabilistic_sum()), config).passed());
  EXPECT_TRUE(ok::check_implication_axioms(ok::make_residual(cat("O_P", {{"p", 1.0}}), config), config).passed());
  EXPECT_TRUE(ok::check_implication_axioms(ok::make_gn(ok::max_grouping(), ok::make_standard()), config).passed());
  const ok::Implication conj("conjunction", [](double x, double y) { return x * y; });
  const auto r = ok::check_implication_axioms(conj, config);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.find("I1")->failed());
  EXPECT_TRUE(r.find("I3")->failed());
}

TEST(ClassifyCrisp, PrintedCases) {
  const ok::CheckConfig config;
  const auto c3 = ok::classify_crisp(ok::make_gon(cat("O_min"), upper(0.5)), config);
  ASSERT_TRUE(c3);
  EXPECT_EQ(*c3, (ok::CrispFit{ok::CrispKind::C3, 0.5, 0.5}));
  const auto c4 = ok::classify_crisp(ok::make_gon(cat("O_min"), lower(0.5)), config);
  ASSERT_TRUE(c4);
  EXPECT_EQ(*c4, (ok::CrispFit{ok::CrispKind::C4, 0.5, 0.5}));
  EXPECT_FALSE(ok::classify_crisp(ok::make_gon(cat("GO_max"), ok::make_standard()), config));
}

// Without neutral 1 the threshold moves to sqrt(2 alpha) or similar.
TEST(ClassifyCrisp, GoMaxThresholds) {
  const ok::CheckConfig config;
  const auto a = ok::classify_crisp(ok::make_gon(cat("GO_max"), lower(0.25)), config);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, (ok::CrispFit{ok::CrispKind::C4, 0.5, 0.25}));
  const auto b = ok::classify_crisp(ok::make_gon(cat("GO_TL", {{"p", 2.0}}), upper(0.125)), config);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, (ok::CrispFit{ok::CrispKind::C3, 0.5, 0.125}));
}

TEST(ClassifyCrisp, RecoversEveryFamily) {
  const ok::CheckConfig config;
  for (auto kind : {ok::CrispKind::C1, ok::CrispKind::C2, ok::CrispKind::C3, ok::CrispKind::C4}) {
    const auto fit = ok::classify_crisp(ok::make_crisp_family(kind, 0.3, 0.7), config);
    ASSERT_TRUE(fit) << ok::to_string(kind);
    EXPECT_EQ(*fit, (ok::CrispFit{kind, 0.3, 0.7}));
  }
}

// If GO(1,y) <= y and x <= N(N(x)) then y <= I(x,y).
TEST(Invariants, MonotoneBound) {
  const ok::CheckConfig config;
  const auto axis = ok::sorted_samples(config);
  for (const auto& go : binary_catalog()) {
    bool premise = true;
    for (double y : axis) premise = premise && go.at(1.0, y).value() <= y + config.eq_tol;
    if (!premise) continue;
    for (const auto& n : negations()) {
      bool below = true;
      for (double x : axis) below = below && x <= n.at(n.at(x).value()).value() + config.eq_tol;
      if (!below) continue;
      const auto i = ok::make_gon(go, n);
      for (double x : axis) {
        for (double y : axis) ASSERT_LE(y, i.at(x, y).value() + config.eq_tol) << go.label() << " " << n.label();
      }
    }
  }
}

TEST(Invariants, CrispIffCrispNegation) {
  const ok::CheckConfig config;
  for (const auto& go : {cat("O_min"), cat("O_P", {{"p", 1.0}})}) {
    EXPECT_TRUE(ok::classify_crisp(ok::make_gon(go, upper(0.5)), config)) << go.label();
    EXPECT_FALSE(ok::classify_crisp(ok::make_gon(go, ok::make_standard()), config)) << go.label();
  }
}
