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
#include <filesystem>
#include <fstream>

#include <overlapkit/negation.hpp>
#include <overlapkit/numerics.hpp>

namespace ok = overlapkit;

namespace {

ok::CheckConfig grid_only(int resolution) {
  ok::CheckConfig c;
  c.grid_resolution = resolution;
  c.random_samples = 0;
  return c;
}

std::vector<double> values(const std::vector<ok::UnitValue>& xs) {
  std::vector<double> out;
  for (auto x : xs) out.push_back(x.value());
  return out;
}

}  // namespace

TEST(UnitValue, RejectsOutOfRange) {
  EXPECT_THROW(ok::UnitValue(-0.1), ok::DomainError);
  EXPECT_THROW(ok::UnitValue(1.0000001), ok::DomainError);
  EXPECT_THROW(ok::UnitValue(std::nan("")), ok::DomainError);
  EXPECT_EQ(ok::UnitValue(0.25).value(), 0.25);
  EXPECT_EQ(ok::UnitValue::one().value(), 1.0);
}

TEST(SampleGrid, EndpointsAndSpacing) {
  EXPECT_EQ(values(ok::sample_grid(grid_only(3))), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(values(ok::sample_grid(grid_only(2))), (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(values(ok::sample_grid(grid_only(5))), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
}

TEST(SampleGrid, RandomTailIsSeeded) {
  ok::CheckConfig c;
  const auto a = values(ok::sample_grid(c));
  const auto b = values(ok::sample_grid(c));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 301u);
  c.rng_seed = 7;
  EXPECT_NE(values(ok::sample_grid(c)), a);
}

TEST(SampleGrid, RegularGridIsExactAtQuarters) {
  const auto g = ok::regular_grid(101);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_EQ(g[50], 0.5);
  EXPECT_EQ(g[25], 0.25);
  EXPECT_THROW(ok::regular_grid(1), ok::DomainError);
}

TEST(SampleGrid, SortedSamplesAscendingUnique) {
  const auto s = ok::sorted_samples({});
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
}

TEST(SampleTriples, ReducedGridPlusRandom) {
  ok::CheckConfig c;
  EXPECT_EQ(ok::sample_triples(c).size(), 21u * 21u * 21u + 200u);
  c.grid_resolution = 5;
  c.random_samples = 0;
  EXPECT_EQ(ok::sample_triples(c).size(), 125u);
}

TEST(BisectSup, StepPredicate) {
  const auto z = ok::bisect_sup([](double v) { return v <= 0.4; }, 1e-8);
  EXPECT_NEAR(z.value(), 0.4, 1e-8);
}

TEST(BisectSup, LinearPredicate) {
  const auto z = ok::bisect_sup([](double v) { return v * 0.5 <= 0.2; }, 1e-8);
  EXPECT_NEAR(z.value(), 0.4, 1e-8);
}

TEST(BisectSup, WholeInterval) {
  EXPECT_EQ(ok::bisect_sup([](double) { return true; }, 1e-8).value(), 1.0);
}

TEST(BisectSup, Errors) {
  EXPECT_THROW(ok::bisect_sup([](double) { return false; }, 1e-8), ok::PreconditionError);
  EXPECT_THROW(ok::bisect_sup([](double) { return true; }, 0.0), ok::DomainError);
}

TEST(BisectSup, IterationCount) {
  EXPECT_EQ(ok::bisection_iterations(1e-8), 29);
  EXPECT_EQ(ok::bisection_iterations(0.5), 3);
}

TEST(BisectBoundary, AdjacentDoubles) {
  const auto b = ok::bisect_boundary([](double v) { return v < 0.3; });
  ASSERT_TRUE(b);
  EXPECT_LT(b->below, 0.3);
  EXPECT_EQ(b->above, 0.3);
  EXPECT_EQ(std::nextafter(b->below, 1.0), b->above);
  EXPECT_FALSE(ok::bisect_boundary([](double) { return true; }));
}

TEST(InvertStrict, Standard) {
  const auto n = ok::make_standard();
  EXPECT_NEAR(ok::invert_strict(n, ok::UnitValue(0.3), 1e-8).value(), 0.7, 1e-8);
  EXPECT_NEAR(ok::invert_strict(n, ok::UnitValue(0.0), 1e-8).value(), 1.0, 1e-8);
}

TEST(InvertStrict, Power) {
  const auto n = ok::make_power_strict(2.0);
  EXPECT_NEAR(ok::invert_strict(n, ok::UnitValue(0.19), 1e-8).value(), 0.9, 1e-8);
}

TEST(InvertStrict, RejectsNonStrict) {
  EXPECT_THROW(ok::invert_strict(ok::make_crisp(ok::CrispSide::upper, ok::UnitValue(0.5)), ok::UnitValue(0.3), 1e-8),
               ok::PreconditionError);
}

TEST(Tolerance, ClosedFormVersusIterative) {
  ok::CheckConfig c;
  EXPECT_EQ(ok::check_tolerance(c, ok::Evaluation::closed_form), 1e-9);
  EXPECT_EQ(ok::check_tolerance(c, ok::Evaluation::iterative), 2e-8);
  EXPECT_EQ(ok::combine(ok::Evaluation::closed_form, ok::Evaluation::iterative), ok::Evaluation::iterative);
  EXPECT_DOUBLE_EQ(ok::continuity_threshold(c), 10.0 / 101.0);
}

TEST(PersistentJump, StepVersusSteepRamp) {
  const auto step = [](double x) { return x < 0.5 ? 0.0 : 1.0; };
  EXPECT_TRUE(ok::persistent_jump(step, 0.49, 0.51, 0.1));
  const auto ramp = [](double x) { return std::clamp((x - 0.495) * 100.0, 0.0, 1.0); };
  EXPECT_FALSE(ok::persistent_jump(ramp, 0.49, 0.51, 0.1));
}

TEST(Config, ParseLayersOverBase) {
  const auto c = ok::parse_config("# comment\ngrid_resolution = 11\n\neq_tol=1e-6 # trailing\n");
  EXPECT_EQ(c.grid_resolution, 11);
  EXPECT_EQ(c.eq_tol, 1e-6);
  EXPECT_EQ(c.random_samples, 200);
  ok::CheckConfig base;
  base.rng_seed = 9;
  EXPECT_EQ(ok::parse_config("random_samples = 3", base).rng_seed, 9u);
}

TEST(Config, Errors) {
  EXPECT_THROW(ok::parse_config("grid_resolution"), ok::ParseError);
  EXPECT_THROW(ok::parse_config("colour = blue"), ok::ParseError);
  EXPECT_THROW(ok::parse_config("eq_tol = abc"), ok::ParseError);
  EXPECT_THROW(ok::parse_config("grid_resolution = 1"), ok::DomainError);
  EXPECT_THROW(ok::load_config("/nonexistent/overlapkit.conf"), ok::ParseError);
}

TEST(Config, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "overlapkit_numerics_test.conf";
  {
    std::ofstream out(path);
    out << "rng_seed = 5\nbisect_tol = 1e-7\n";
  }
  const auto c = ok::load_config(path);
  EXPECT_EQ(c.rng_seed, 5u);
  EXPECT_EQ(c.bisect_tol, 1e-7);
  std::filesystem::remove(path);
}
