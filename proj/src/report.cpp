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

#include "curvlab/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "curvlab/errors.hpp"

namespace curvlab {

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const GridReport& report) {
  std::string out;
  for (std::size_t k = 0; k < report.columns.size(); ++k) {
    if (k) out += ',';
    out += csv_field(report.columns[k]);
  }
  out += "\r\n";
  for (const auto& row : report.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += format_number(row[k]);
    }
    out += "\r\n";
  }
  return out;
}

std::string to_json(const GridReport& report) {
  nlohmann::ordered_json doc;
  doc["meta"] = report.meta;
  doc["columns"] = report.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    auto r = nlohmann::ordered_json::array();
    for (double v : row) {
      if (std::isnan(v)) {
        r.push_back(nullptr);
      } else {
        r.push_back(v);
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw ValidationError("unknown report format '" + name + "'");
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot open '" + path + "' for writing");
  }
  out << text;
  if (!out) {
    throw InputError("failed writing '" + path + "'");
  }
}

}  // namespace

void write_report(const GridReport& report, const std::string& path,
                  ReportFormat format) {
  if (format == ReportFormat::kJson) {
    write_file(path, to_json(report));
    return;
  }
  write_file(path, to_csv(report));
  write_file(path + ".meta.json", report.meta.dump(2) + "\n");
}

}  // namespace curvlab
