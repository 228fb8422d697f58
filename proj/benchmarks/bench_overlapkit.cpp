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

#include <benchmark/benchmark.h>

#include <overlapkit/conjunctors.hpp>
#include <overlapkit/implication.hpp>
#include <overlapkit/negation.hpp>
#include <overlapkit/properties.hpp>

namespace ok = overlapkit;

namespace {

// Cycles through 1001 evenly spaced points of [0,1].
double point(int& k) {
  k = (k + 1) % 1001;
  return k / 1000.0;
}

void BM_GonEval(benchmark::State& state) {
  const auto i = ok::make_gon(ok::catalog("GO_max"), ok::make_standard());
  int k = 0;
  for (auto _ : state) {
    const double x = point(k);
    benchmark::DoNotOptimize(i.at(x, 1.0 - x));
  }
}
BENCHMARK(BM_GonEval);

// Residuals bisect on every call.
void BM_ResidualEval(benchmark::State& state) {
  const auto r = ok::make_residual(ok::catalog("O_P", {{"p", 2.0}}));
  int k = 0;
  for (auto _ : state) {
    const double x = point(k);
    benchmark::DoNotOptimize(r.at(x, 0.3));
  }
}
BENCHMARK(BM_ResidualEval);

void BM_InvertStrict(benchmark::State& state) {
  const auto n = ok::make_power_strict(0.5);
  int k = 0;
  for (auto _ : state) {
    const double y = point(k);
    benchmark::DoNotOptimize(ok::invert_strict(n, ok::UnitValue(y), 1e-8));
  }
}
BENCHMARK(BM_InvertStrict);

void BM_CheckAxioms(benchmark::State& state) {
  const auto f = ok::catalog("O_mM");
  ok::CheckConfig config;
  config.grid_resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ok::check_axioms(f, ok::AxiomSet::overlap, config));
}
BENCHMARK(BM_CheckAxioms)->Arg(21)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

// Triples make EP the most expensive property.
void BM_CheckExchange(benchmark::State& state) {
  const auto i = ok::make_gon(ok::catalog("O_min"), ok::make_standard());
  const ok::CheckConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ok::check_property(i, ok::Property::EP, std::nullopt, config));
  }
}
BENCHMARK(BM_CheckExchange)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
