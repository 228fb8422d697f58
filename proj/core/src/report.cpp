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

#include "overlapkit/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace overlapkit {

namespace {

using nlohmann::json;

std::string join_point(const std::vector<double>& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_value(point[i]);
  }
  return out + ")";
}

json entry_json(const AxiomEntry& e) {
  json j{{"id", e.id}, {"status", to_string(e.status)}, {"required", e.required}};
  if (e.failed()) {
    j["witness"] = e.witness;
    j["deviation"] = e.deviation;
  }
  if (!e.note.empty() && e.failed()) j["note"] = e.note;
  return j;
}

json property_json(const PropertyReport& r) {
  json j{{"property", r.property},
         {"subject", r.subject},
         {"status", to_string(r.status)},
         {"samples_checked", r.samples_checked},
         {"max_deviation", r.max_deviation},
         {"tolerance", r.tolerance}};
  if (r.witness) {
    j["witness"] = json{{"point", r.witness->point},
                        {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs},
                        {"deviation", r.witness->deviation}};
  }
  return j;
}

}  // namespace

std::string format_value(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(9) << v;
  return out.str();
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string to_text(const AxiomReport& report) {
  std::vector<std::vector<std::string>> rows{{"axiom", "status", "witness", "deviation"}};
  for (const auto& e : report.entries) {
    std::string status(to_string(e.status));
    if (!e.required) status += " (informational)";
    rows.push_back({e.id, status, e.failed() ? join_point(e.witness) : "-",
                    e.failed() ? format_value(e.deviation) : "-"});
  }
  std::string out = report.subject + " against " + std::string(to_string(report.set)) + " axioms (" +
                    std::to_string(report.points_checked) + " points): " + (report.passed() ? "passed" : "FAILED") +
                    "\n";
  return out + text_table(rows);
}

std::string to_text(const std::vector<PropertyReport>& reports) {
  std::vector<std::vector<std::string>> rows{
      {"subject", "property", "status", "max_deviation", "tolerance", "witness", "lhs", "rhs"}};
  for (const auto& r : reports) {
    rows.push_back({r.subject, r.property, std::string(to_string(r.status)), format_value(r.max_deviation),
                    format_value(r.tolerance), r.witness ? join_point(r.witness->point) : "-",
                    r.witness ? format_value(r.witness->lhs) : "-", r.witness ? format_value(r.witness->rhs) : "-"});
  }
  return text_table(rows);
}

std::string to_csv(const AxiomReport& report) {
  std::string out = csv_row({"subject", "set", "axiom", "status", "required", "witness", "deviation"}) + "\n";
  for (const auto& e : report.entries) {
    out += csv_row({report.subject, std::string(to_string(report.set)), e.id, std::string(to_string(e.status)),
                    e.required ? "yes" : "no", e.failed() ? join_point(e.witness) : "",
                    e.failed() ? format_value(e.deviation) : ""}) +
           "\n";
  }
  return out;
}

std::string to_csv(const std::vector<PropertyReport>& reports) {
  std::string out = csv_row({"subject", "property", "status", "samples_checked", "max_deviation", "tolerance",
                             "witness", "lhs", "rhs", "deviation"}) +
                    "\n";
  for (const auto& r : reports) {
    out += csv_row({r.subject, r.property, std::string(to_string(r.status)), std::to_string(r.samples_checked),
                    format_value(r.max_deviation), format_value(r.tolerance),
                    r.witness ? join_point(r.witness->point) : "", r.witness ? format_value(r.witness->lhs) : "",
                    r.witness ? format_value(r.witness->rhs) : "",
                    r.witness ? format_value(r.witness->deviation) : ""}) +
           "\n";
  }
  return out;
}

std::string to_json(const AxiomReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) entries.push_back(entry_json(e));
  const json j{{"subject", report.subject},
               {"set", to_string(report.set)},
               {"passed", report.passed()},
               {"points_checked", report.points_checked},
               {"entries", entries}};
  return j.dump(2) + "\n";
}

std::string to_json(const std::vector<PropertyReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(property_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace overlapkit
