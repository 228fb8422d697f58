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

#include "overlapkit/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "overlapkit/negation.hpp"

namespace overlapkit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    // from_chars for double is not available on every toolchain we target.
    std::string buffer(text);
    std::size_t consumed = 0;
    try {
      value = static_cast<T>(std::stod(buffer, &consumed));
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != buffer.size() || buffer.empty()) {
      throw ParseError("config key '" + std::string(key) + "': bad number '" + buffer + "'");
    }
  } else {
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw ParseError("config key '" + std::string(key) + "': bad integer '" + std::string(text) + "'");
    }
  }
  return value;
}

// Uniform double in [0,1] from the top 53 bits, independent of the standard
// library's distribution implementation.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void CheckConfig::validate() const {
  if (grid_resolution < 2) throw DomainError("grid_resolution must be at least 2");
  if (random_samples < 0) throw DomainError("random_samples must be nonnegative");
  if (!(eq_tol > 0.0)) throw DomainError("eq_tol must be positive");
  if (!(bisect_tol > 0.0)) throw DomainError("bisect_tol must be positive");
}

CheckConfig parse_config(std::string_view text, const CheckConfig& base) {
  CheckConfig config = base;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "grid_resolution") {
      config.grid_resolution = parse_number<int>(key, value);
    } else if (key == "random_samples") {
      config.random_samples = parse_number<int>(key, value);
    } else if (key == "rng_seed") {
      config.rng_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "eq_tol") {
      config.eq_tol = parse_number<double>(key, value);
    } else if (key == "bisect_tol") {
      config.bisect_tol = parse_number<double>(key, value);
    } else {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  config.validate();
  return config;
}

CheckConfig load_config(const std::filesystem::path& path, const CheckConfig& base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), base);
}

std::vector<double> regular_grid(int resolution) {
  if (resolution < 2) throw DomainError("grid resolution must be at least 2");
  std::vector<double> grid(static_cast<std::size_t>(resolution));
  const double steps = resolution - 1;
  for (int i = 0; i < resolution; ++i) grid[static_cast<std::size_t>(i)] = i / steps;
  return grid;
}

std::vector<UnitValue> sample_grid(const CheckConfig& config) {
  config.validate();
  std::vector<UnitValue> samples;
  samples.reserve(static_cast<std::size_t>(config.grid_resolution + config.random_samples));
  for (double x : regular_grid(config.grid_resolution)) samples.emplace_back(x);
  std::mt19937_64 rng(config.rng_seed);
  for (int i = 0; i < config.random_samples; ++i) samples.emplace_back(unit_draw(rng));
  return samples;
}

std::vector<double> sorted_samples(const CheckConfig& config) {
  const auto samples = sample_grid(config);
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

std::vector<std::array<double, 3>> sample_triples(const CheckConfig& config) {
  config.validate();
  const auto axis = regular_grid(std::min(config.grid_resolution, kTripleGridResolution));
  std::vector<std::array<double, 3>> triples;
  triples.reserve(axis.size() * axis.size() * axis.size() + static_cast<std::size_t>(config.random_samples));
  for (double x : axis) {
    for (double y : axis) {
      for (double z : axis) triples.push_back({x, y, z});
    }
  }
  // A separate stream from sample_grid() so the two never alias.
  std::mt19937_64 rng(config.rng_seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < config.random_samples; ++i) {
    const double x = unit_draw(rng);
    const double y = unit_draw(rng);
    const double z = unit_draw(rng);
    triples.push_back({x, y, z});
  }
  return triples;
}

int bisection_iterations(double tol) {
  if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  return static_cast<int>(std::ceil(std::log2(1.0 / tol))) + 2;
}

UnitValue invert_strict(const Negation& n, UnitValue y, double tol) {
  if (!n.strict()) {
    throw PreconditionError("invert_strict: negation '" + n.label() + "' is not strict");
  }
  return bisect_sup([&](double z) { return n(UnitValue(z)) >= y; }, tol);
}

double check_tolerance(const CheckConfig& config, Evaluation evaluation) {
  return evaluation == Evaluation::closed_form ? config.eq_tol : 2.0 * config.bisect_tol;
}

double continuity_threshold(const CheckConfig& config) { return 10.0 / config.grid_resolution; }

std::optional<std::array<double, 2>> persistent_jump(const std::function<double(double)>& f,
                                                     double a, double b, double threshold) {
  double fa = f(a);
  double fb = f(b);
  if (std::abs(fb - fa) <= threshold) return std::nullopt;
  while (b - a > 1e-9) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (std::abs(fm - fa) >= std::abs(fb - fm)) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
    if (std::abs(fb - fa) <= threshold) return std::nullopt;
  }
  return std::array<double, 2>{a, b};
}

}  // namespace overlapkit
