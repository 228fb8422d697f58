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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "overlapkit/conjunctors.hpp"
#include "overlapkit/properties.hpp"

namespace overlapkit {

/// Fixed notation with 9 decimals.
std::string format_value(double v);

/// One CSV line (no trailing newline), quoting fields per RFC 4180.
std::string csv_row(const std::vector<std::string>& fields);

/// Left-aligned columns separated by two spaces; the first row is the header.
std::string text_table(const std::vector<std::vector<std::string>>& rows);

std::string to_text(const AxiomReport& report);
std::string to_text(const std::vector<PropertyReport>& reports);
std::string to_csv(const AxiomReport& report);
std::string to_csv(const std::vector<PropertyReport>& reports);
/// Pretty-printed JSON. Numbers keep full double precision.
std::string to_json(const AxiomReport& report);
std::string to_json(const std::vector<PropertyReport>& reports);

}  // namespace overlapkit
