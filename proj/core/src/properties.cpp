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

#include "overlapkit/properties.hpp"

#include <algorithm>
#include <cmath>

namespace overlapkit {

namespace {

// Accumulates a scan: the first violation wins the witness, the largest
// violation measure goes to max_deviation.
class Scan {
 public:
  Scan(std::string property, std::string subject, double tolerance) {
    report_.property = std::move(property);
    report_.subject = std::move(subject);
    report_.tolerance = tolerance;
  }

  void count() { ++report_.samples_checked; }

  void observe(double deviation) { report_.max_deviation = std::max(report_.max_deviation, deviation); }

  void violation(std::vector<double> point, double lhs, double rhs, double deviation) {
    observe(deviation);
    if (report_.witness) return;
    report_.status = PropertyStatus::fails;
    report_.witness = PropertyWitness{std::move(point), lhs, rhs, deviation};
  }

  // Equality check lhs = rhs within tolerance.
  void equal(std::vector<double> point, double lhs, double rhs) {
    const double dev = std::abs(lhs - rhs);
    if (dev > report_.tolerance) {
      violation(std::move(point), lhs, rhs, dev);
    } else {
      observe(dev);
    }
  }

  PropertyReport finish() && { return std::move(report_); }

 private:
  PropertyReport report_;
};

double ev(const Implication& i, double x, double y) { return i.at(x, y).value(); }
double ev(const Negation& n, double x) { return n.at(x).value(); }

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::NP: return "NP";
    case Property::IP: return "IP";
    case Property::EP: return "EP";
    case Property::EP1: return "EP1";
    case Property::IB: return "IB";
    case Property::LOP: return "LOP";
    case Property::ROP: return "ROP";
    case Property::CP: return "CP";
    case Property::LCP: return "L-CP";
    case Property::RCP: return "R-CP";
  }
  return "NP";
}

std::optional<Property> property_from_string(std::string_view name) {
  for (Property p : all_properties()) {
    if (name == to_string(p)) return p;
  }
  if (name == "LCP") return Property::LCP;
  if (name == "RCP") return Property::RCP;
  return std::nullopt;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all{Property::NP,  Property::IP,  Property::EP, Property::EP1, Property::IB,
                                         Property::LOP, Property::ROP, Property::CP, Property::LCP, Property::RCP};
  return all;
}

bool needs_negation(Property p) { return p == Property::CP || p == Property::LCP || p == Property::RCP; }

std::string_view to_string(PropertyStatus status) {
  return status == PropertyStatus::holds_on_grid ? "holds_on_grid" : "fails";
}

PropertyReport check_unary_property(const Implication& i, Property p, const CheckConfig& config) {
  config.validate();
  const auto xs = sorted_samples(config);
  const double tol = check_tolerance(config, i.evaluation());
  Scan scan(std::string(to_string(p)), i.label(), tol);

  switch (p) {
    case Property::NP:
      for (double y : xs) {
        scan.count();
        scan.equal({1.0, y}, ev(i, 1.0, y), y);
      }
      break;
    case Property::IP:
      for (double x : xs) {
        scan.count();
        const double v = ev(i, x, x);
        if (1.0 - v > tol) {
          scan.violation({x, x}, v, 1.0, 1.0 - v);
        } else {
          scan.observe(1.0 - v);
        }
      }
      break;
    case Property::LOP:
      for (double x : xs) {
        for (double y : xs) {
          if (x > y) continue;
          scan.count();
          const double v = ev(i, x, y);
          if (1.0 - v > tol) {
            scan.violation({x, y}, v, 1.0, 1.0 - v);
          } else {
            scan.observe(1.0 - v);
          }
        }
      }
      break;
    case Property::ROP:
      for (double x : xs) {
        for (double y : xs) {
          if (x - y <= config.eq_tol) continue;
          scan.count();
          const double v = ev(i, x, y);
          // Deviation is how far the pair sits above the diagonal.
          if (v >= 1.0 - tol) scan.violation({x, y}, v, 1.0, x - y);
        }
      }
      break;
    case Property::IB:
      for (double x : xs) {
        for (double y : xs) {
          scan.count();
          const double inner = ev(i, x, y);
          scan.equal({x, y}, ev(i, x, inner), inner);
        }
      }
      break;
    default:
      throw PreconditionError(std::string(to_string(p)) + " is not a two-place property of I alone");
  }
  return std::move(scan).finish();
}

PropertyReport check_ep(const Implication& i, Property variant, const CheckConfig& config) {
  if (variant != Property::EP && variant != Property::EP1) {
    throw PreconditionError("check_ep takes EP or EP1, not " + std::string(to_string(variant)));
  }
  config.validate();
  const double tol = check_tolerance(config, i.evaluation());
  Scan scan(std::string(to_string(variant)), i.label(), tol);
  for (const auto& [x, y, z] : sample_triples(config)) {
    scan.count();
    const double lhs = ev(i, x, ev(i, y, z));
    const double rhs = ev(i, y, ev(i, x, z));
    if (variant == Property::EP) {
      scan.equal({x, y, z}, lhs, rhs);
    } else if (lhs >= 1.0 - tol) {
      if (1.0 - rhs > tol) {
        scan.violation({x, y, z}, lhs, rhs, 1.0 - rhs);
      } else {
        scan.observe(1.0 - rhs);
      }
    }
  }
  return std::move(scan).finish();
}

PropertyReport check_contraposition(const Implication& i, const Negation& n, Property variant,
                                    const CheckConfig& config) {
  if (!needs_negation(variant)) {
    throw PreconditionError("check_contraposition takes CP, L-CP or R-CP, not " + std::string(to_string(variant)));
  }
  config.validate();
  const auto xs = sorted_samples(config);
  const double tol = check_tolerance(config, combine(i.evaluation(), n.evaluation()));
  Scan scan(std::string(to_string(variant)) + "(" + n.label() + ")", i.label(), tol);

  std::vector<double> negated(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) negated[k] = ev(n, xs[k]);

  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < xs.size(); ++b) {
      const double x = xs[a];
      const double y = xs[b];
      scan.count();
      switch (variant) {
        case Property::CP: scan.equal({x, y}, ev(i, x, y), ev(i, negated[b], negated[a])); break;
        case Property::LCP: scan.equal({x, y}, ev(i, negated[a], y), ev(i, negated[b], x)); break;
        default: scan.equal({x, y}, ev(i, x, negated[b]), ev(i, y, negated[a])); break;
      }
    }
  }
  return std::move(scan).finish();
}

PropertyReport check_property(const Implication& i, Property p, const std::optional<Negation>& n,
                              const CheckConfig& config) {
  if (needs_negation(p)) {
    if (!n) throw PreconditionError(std::string(to_string(p)) + " needs a negation");
    return check_contraposition(i, *n, p, config);
  }
  if (p == Property::EP || p == Property::EP1) return check_ep(i, p, config);
  return check_unary_property(i, p, config);
}

Comparison compare(const Implication& a, const Implication& b, const CheckConfig& config) {
  config.validate();
  Comparison out;
  bool first = true;
  for (double x : sorted_samples(config)) {
    for (double y : sorted_samples(config)) {
      ++out.samples_checked;
      const double dev = std::abs(ev(a, x, y) - ev(b, x, y));
      if (first || dev > out.deviation) {
        out = {dev, x, y, out.samples_checked};
        first = false;
      }
    }
  }
  return out;
}

bool range_is_proper(const Implication& i, const CheckConfig& config) {
  config.validate();
  const auto xs = sorted_samples(config);
  std::vector<double> image;
  image.reserve(xs.size() * xs.size() + 2);
  image.push_back(0.0);
  image.push_back(1.0);
  for (double x : xs) {
    for (double y : xs) image.push_back(ev(i, x, y));
  }
  std::sort(image.begin(), image.end());
  const double cell = 1.0 / static_cast<double>(config.grid_resolution - 1);
  for (std::size_t k = 0; k + 1 < image.size(); ++k) {
    if (image[k + 1] - image[k] > 2.0 * cell) return true;
  }
  return false;
}

}  // namespace overlapkit
