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

#include <overlapkit/expression.hpp>
#include <overlapkit/properties.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace ok = overlapkit;

TEST(ParseNegation, Names) {
  EXPECT_NEAR(ok::parse_negation("zadeh").at(0.3).value(), 0.7, 1e-15);
  EXPECT_NEAR(ok::parse_negation("standard").at(0.3).value(), 0.7, 1e-15);
  EXPECT_EQ(ok::parse_negation("crisp_lower:0.5").at(0.5).value(), 1.0);
  EXPECT_EQ(ok::parse_negation("crisp_upper:0.5").at(0.5).value(), 0.0);
  EXPECT_EQ(ok::parse_negation("top").at(0.99).value(), 1.0);
  EXPECT_EQ(ok::parse_negation("bottom").at(0.01).value(), 0.0);
  EXPECT_NEAR(ok::parse_negation("power:2").at(0.9).value(), 0.19, 1e-15);
  EXPECT_NEAR(ok::parse_negation("inverse(power:2)").at(0.19).value(), 0.9, 1e-8);
  const auto nat = ok::parse_negation("natural(gon(GO_max, zadeh))");
  EXPECT_NEAR(nat.at(0.5).value(), 0.75, 1e-15);
}

TEST(ParseNegation, Errors) {
  EXPECT_THROW(ok::parse_negation("crisp_lower:1"), ok::ParseError);
  EXPECT_THROW(ok::parse_negation("power:-1"), ok::ParseError);
  EXPECT_THROW(ok::parse_negation("power"), ok::ParseError);
  EXPECT_THROW(ok::parse_negation("nonsense"), ok::ParseError);
  EXPECT_THROW(ok::parse_negation("inverse(top)"), ok::PreconditionError);
}

TEST(ParseFusion, Catalog) {
  EXPECT_NEAR(ok::parse_fusion("O_P:p=2").at(0.5, 0.5).value(), 0.0625, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("GO_TL:p=2").at(0.6, 0.9).value(), 0.18, 1e-15);
  EXPECT_EQ(ok::parse_fusion("GO_PN:n=3").arity(), 3u);
  EXPECT_EQ(ok::parse_fusion(" GO_max ").label(), "GO_max");
}

TEST(ParseFusion, Constructions) {
  const auto t = ok::parse_fusion("trunc:O_P:p=1,a=0.5");
  EXPECT_NEAR(t.at(0.75, 0.75).value(), 0.3, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("neutral_go:e=0.5").at(0.3, 0.8).value(), 0.48, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("idem_go:p=1,q=2").at(0.3, 0.8).value(), 0.5091643369659489, 1e-14);
  EXPECT_EQ(ok::parse_fusion("max_grouping").at(0.2, 0.7).value(), 0.7);
  EXPECT_NEAR(ok::parse_fusion("probsum").at(0.5, 0.5).value(), 0.75, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("mean").at(0.2, 0.6).value(), 0.4, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("dualG(O_P:p=1, zadeh)").at(0.5, 0.5).value(), 0.75, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("dualO(max_grouping, zadeh)").at(0.3, 0.8).value(), 0.3, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("dual(O_min, zadeh)").at(0.2, 0.7).value(), 0.7, 1e-15);
  EXPECT_NEAR(ok::parse_fusion("recover(gon(GO_max, zadeh), zadeh)").at(0.8, 0.9).value(), 0.45, 2e-8);
  const auto agg = ok::parse_fusion("agg(mean; GO_max, O_P:p=2)");
  EXPECT_EQ(agg.role(), ok::Role::general_overlap);
  EXPECT_NEAR(agg.at(0.8, 0.9).value(), (0.45 + 0.5184) / 2.0, 1e-15);
}

TEST(ParseFusion, Errors) {
  EXPECT_THROW(ok::parse_fusion("O_P"), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion("O_P:p=abc"), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion("O_P:q=1"), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion("dualG(O_min, zadeh"), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion("dualG(O_min)"), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion("trunc:O_min,a=2"), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion("agg(median; O_min, O_min)"), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion(""), ok::ParseError);
  EXPECT_THROW(ok::parse_fusion("dualG(O_min, top)"), ok::PreconditionError);
}

TEST(ParseImplication, Families) {
  const ok::CheckConfig config;
  EXPECT_EQ(ok::parse_implication("gon(GO_max, zadeh)").at(0.6, 0.2).value(), 1.0);
  EXPECT_LE(oracle::sup_deviation(ok::parse_implication("gon(GO_max, zadeh)"), oracle::gon_max_zadeh, config), 1e-12);
  EXPECT_EQ(ok::parse_implication("gn(max_grouping, top)").at(1.0, 0.3).value(), 0.3);
  EXPECT_EQ(ok::parse_implication("ql(O_min, max_grouping)").at(1.0, 0.4).value(), 0.4);
  EXPECT_NEAR(ok::parse_implication("ro(O_P:p=1)").at(0.5, 0.2).value(), 0.4, 1e-8);
  EXPECT_EQ(ok::parse_implication("d(max_grouping)").at(1.0, 0.4).value(), 0.4);
  EXPECT_LE(oracle::sup_deviation(ok::parse_implication("tn(O_min, zadeh)"), oracle::kleene_dienes, config), 1e-15);
  EXPECT_EQ(ok::parse_implication("crisp(C3, 0.5, 0.5)").at(0.5, 0.4).value(), 0.0);
  const auto agg = ok::parse_implication("agg(mean; gon(GO_max, zadeh), gon(O_P:p=2, zadeh))");
  EXPECT_EQ(agg.family(), ok::ImplicationFamily::aggregated);
}

TEST(ParseImplication, Errors) {
  EXPECT_THROW(ok::parse_implication("gon(GO_max)"), ok::ParseError);
  EXPECT_THROW(ok::parse_implication("crisp(C9, 0.5, 0.5)"), ok::ParseError);
  EXPECT_THROW(ok::parse_implication("crisp(C1, 0, 0.5)"), ok::ParseError);
  EXPECT_THROW(ok::parse_implication("gon(GO_max, zadeh) extra"), ok::ParseError);
  EXPECT_THROW(ok::parse_implication("gn(O_min, zadeh)"), ok::PreconditionError);
  EXPECT_THROW(ok::parse_implication("tn(GO_max, zadeh)"), ok::PreconditionError);
}

// Every syntax line names a constructor the parser accepts.
TEST(Grammar, EntriesAreNonEmpty) {
  const auto& entries = ok::grammar_entries();
  EXPECT_GE(entries.size(), 30u);
  for (const auto& e : entries) {
    EXPECT_FALSE(e.syntax.empty());
    EXPECT_FALSE(e.summary.empty());
    EXPECT_TRUE(e.kind == "negation" || e.kind == "fusion" || e.kind == "implication");
  }
}

// Seeded sweep: parsed and directly built objects agree pointwise.
TEST(Grammar, ParsedMatchesDirect) {
  const auto parsed = ok::parse_implication("gon(O_P:p=2, power:2)");
  const auto direct = ok::make_gon(ok::catalog("O_P", {{"p", 2.0}}), ok::make_power_strict(2.0));
  for (auto [x, y] : gen::pairs(300)) EXPECT_EQ(parsed.at(x, y).value(), direct.at(x, y).value());
}
