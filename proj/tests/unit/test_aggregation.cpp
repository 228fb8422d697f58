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

#include <overlapkit/aggregation.hpp>
#include <overlapkit/conjunctors.hpp>
#include <overlapkit/negation.hpp>

#include "support/generators.hpp"

namespace ok = overlapkit;

namespace {

ok::FusionFunction cat(std::string_view name, const ok::Params& p = {}) { return ok::catalog(name, p); }
using FusionFamily = ok::OperatorFamily<ok::FusionFunction>;
using ImplicationFamily = ok::OperatorFamily<ok::Implication>;

}  // namespace

TEST(Family, Validation) {
  EXPECT_THROW(FusionFamily({}), ok::DomainError);
  EXPECT_THROW(FusionFamily({cat("O_min"), cat("GO_PN", {{"n", 3.0}})}), ok::PreconditionError);
  const FusionFamily f({cat("O_min"), cat("GO_max")});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.arity(), 2u);
}

TEST(Aggregations, Names) {
  for (const auto& name : ok::aggregation_names()) {
    const auto a = ok::make_aggregation(name, name == "identity" ? 1 : 3);
    EXPECT_EQ(a.role(), ok::Role::aggregation);
    EXPECT_TRUE(ok::check_axioms(a, ok::AxiomSet::aggregation, {}).passed()) << name;
  }
  EXPECT_THROW(ok::make_aggregation("median", 2), ok::DomainError);
  EXPECT_THROW(ok::make_aggregation("identity", 2), ok::DomainError);
  EXPECT_THROW(ok::make_aggregation("mean", 0), ok::DomainError);
}

TEST(Aggregate, MeanOfIdenticalIsMember) {
  const auto a = ok::aggregate(ok::make_aggregation("mean", 2), FusionFamily({cat("O_min"), cat("O_min")}));
  for (auto [x, y] : gen::pairs(200)) EXPECT_NEAR(a.at(x, y).value(), std::min(x, y), 1e-15);
}

TEST(Aggregate, MeanValue) {
  const auto a =
      ok::aggregate(ok::make_aggregation("mean", 2), FusionFamily({cat("O_P", {{"p", 1.0}}), cat("O_min")}));
  EXPECT_NEAR(a.at(0.5, 0.5).value(), 0.375, 1e-15);
  EXPECT_EQ(a.label(), "agg(mean; O_P:p=1, O_min)");
}

TEST(Aggregate, MinAtOne) {
  const auto a =
      ok::aggregate(ok::make_aggregation("min", 2), FusionFamily({cat("GO_max"), cat("GO_TL", {{"p", 2.0}})}));
  EXPECT_EQ(a.at(1.0, 1.0).value(), 1.0);
}

TEST(Aggregate, ArityMismatch) {
  EXPECT_THROW(ok::aggregate(ok::make_aggregation("mean", 3), FusionFamily({cat("O_min"), cat("GO_max")})),
               ok::PreconditionError);
}

TEST(Aggregate, ImplicationsStayImplications) {
  const ok::CheckConfig config;
  const ImplicationFamily is({ok::make_gon(cat("GO_max"), ok::make_standard()),
                              ok::make_gon(cat("O_P", {{"p", 2.0}}), ok::make_standard()),
                              ok::make_ql(cat("O_min"), ok::max_grouping())});
  for (const auto& name : {"mean", "min", "max", "product"}) {
    const auto i = ok::aggregate(ok::make_aggregation(name, 3), is);
    EXPECT_EQ(i.family(), ok::ImplicationFamily::aggregated);
    EXPECT_TRUE(ok::check_implication_axioms(i, config).passed()) << name;
  }
}

TEST(AggregateGo, MeanOfGeneralOverlaps) {
  const ok::CheckConfig config;
  const auto f = ok::aggregate_go(ok::make_aggregation("mean", 2),
                                  FusionFamily({cat("GO_max"), cat("O_P", {{"p", 2.0}})}), config);
  EXPECT_EQ(f.role(), ok::Role::general_overlap);
  EXPECT_TRUE(ok::check_axioms(f, ok::AxiomSet::general_overlap, config).passed());
  for (double x : ok::regular_grid(11)) {
    EXPECT_EQ(f.at(x, 0.0).value(), 0.0);
    EXPECT_EQ(f.at(0.0, x).value(), 0.0);
  }
  EXPECT_EQ(f.at(1.0, 1.0).value(), 1.0);
}

TEST(AggregateGo, Preconditions) {
  const ok::CheckConfig config;
  const ok::FusionFunction step("step", 2, ok::Role::aggregation, [](std::span<const ok::UnitValue> xs) {
    return xs[0] + xs[1] >= 1.0 ? std::max(xs[0].value(), xs[1].value()) : 0.0;
  });
  EXPECT_THROW(ok::aggregate_go(step, FusionFamily({cat("O_min"), cat("GO_max")}), config), ok::PreconditionError);
  const ok::FusionFunction asym("asym", 2, ok::Role::general_overlap,
                                [](std::span<const ok::UnitValue> xs) { return xs[0] * xs[0] * xs[1]; });
  EXPECT_THROW(ok::aggregate_go(ok::make_aggregation("mean", 2), FusionFamily({cat("O_min"), asym}), config),
               ok::PreconditionError);
}

TEST(Commutes, MeanAndMin) {
  const ok::CheckConfig config;
  const auto n = ok::make_standard();
  const auto r = ok::check_commutes(ok::make_aggregation("mean", 2),
                                    FusionFamily({cat("GO_max"), cat("O_P", {{"p", 2.0}})}), n, config);
  EXPECT_TRUE(r.holds());
  EXPECT_LE(r.max_deviation, 1e-9);
  const auto m = ok::check_commutes(ok::make_aggregation("min", 2),
                                    FusionFamily({cat("O_min"), cat("O_P", {{"p", 1.0}})}), n, config);
  EXPECT_LE(m.max_deviation, 1e-9);
}

TEST(Commutes, IdentityIsExact) {
  const auto r = ok::check_commutes(ok::make_aggregation("identity", 1), FusionFamily({cat("GO_max")}),
                                    ok::make_standard(), {});
  EXPECT_EQ(r.max_deviation, 0.0);
}

TEST(Commutes, RequiresStrong) {
  EXPECT_THROW(ok::check_commutes(ok::make_aggregation("mean", 2), FusionFamily({cat("O_min"), cat("GO_max")}),
                                  ok::make_power_strict(2.0), {}),
               ok::PreconditionError);
}

TEST(Commutes, WholeCatalogWithZadeh) {
  const ok::CheckConfig config;
  const std::vector<ok::FusionFunction> gos{cat("O_mM"), cat("O_DB"), cat("O_P", {{"p", 2.0}}), cat("O_V"),
                                            cat("O_min"), cat("GO_max"), cat("GO_TL", {{"p", 2.0}})};
  for (const auto& name : {"mean", "min", "max", "product"}) {
    for (std::size_t k = 0; k + 1 < gos.size(); ++k) {
      const auto r = ok::check_commutes(ok::make_aggregation(name, 2), FusionFamily({gos[k], gos[k + 1]}),
                                        ok::make_standard(), config);
      EXPECT_TRUE(r.holds()) << name << " " << gos[k].label();
    }
  }
}

TEST(Dual, AggregationStaysAggregation) {
  for (const auto& name : {"mean", "min", "max", "product"}) {
    for (const auto& n : {ok::make_standard(), ok::make_power_strict(2.0)}) {
      const auto d = ok::dual(ok::make_aggregation(name, 2), n);
      EXPECT_TRUE(ok::check_axioms(d, ok::AxiomSet::aggregation, {}).passed()) << name << " " << n.label();
    }
  }
}
