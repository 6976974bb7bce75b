// Copyright 2026 The curvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace curvlab {

inline constexpr const char* kToolVersion = "curvlab/1";

/// Rows of real values sampled on a grid, one row per point.
struct GridReport {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Round-trip decimal form; NaN becomes the empty string.
std::string format_number(double v);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& s);

/// Header row plus one line per row, CRLF line endings.
std::string to_csv(const GridReport& report);

/// {"meta": ..., "columns": [...], "rows": [[...], ...]}; NaN becomes null.
std::string to_json(const GridReport& report);

enum class ReportFormat { kCsv, kJson };

ReportFormat parse_format(const std::string& name);

/// Writes the report to `path`. CSV output gets its meta in the sidecar
/// `<path>.meta.json`.
void write_report(const GridReport& report, const std::string& path,
                  ReportFormat format);

}  // namespace curvlab
