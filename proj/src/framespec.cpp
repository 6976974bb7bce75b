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

#include "curvlab/framespec.hpp"

#include <fstream>
#include <sstream>

#include "curvlab/errors.hpp"

namespace curvlab {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ValidationError(std::string(where) + ": missing integer field '" +
                          key + "'");
  }
  return j.at(key).get<int>();
}

HolomorphicFrame builtin_from_json(const json& doc) {
  const std::string name = doc.at("builtin").get<std::string>();
  const json params = doc.value("params", json::object());
  if (!params.is_object()) {
    throw ValidationError("framespec: 'params' must be an object");
  }
  if (name == "hardy") {
    return hardy_frame(require_int(params, "N", "hardy"));
  }
  if (name == "bergman") {
    return bergman_frame(require_int(params, "N", "bergman"));
  }
  if (name == "bott") {
    return bott_frame();
  }
  if (name == "constant") {
    return constant_frame(require_int(params, "N", "constant"),
                          params.value("n", 1));
  }
  if (name == "weighted_shift") {
    if (!params.contains("weights") || !params.at("weights").is_array()) {
      throw ValidationError("weighted_shift: 'weights' array required");
    }
    std::vector<double> w;
    for (const json& x : params.at("weights")) {
      if (!x.is_number()) {
        throw ValidationError("weighted_shift: weights must be numbers");
      }
      w.push_back(x.get<double>());
    }
    const int N = params.value("N", static_cast<int>(w.size()) + 1);
    return weighted_shift_frame(w, N);
  }
  if (name == "direct_sum") {
    if (!params.contains("parts") || !params.at("parts").is_array() ||
        params.at("parts").size() < 2) {
      throw ValidationError("direct_sum: 'parts' needs at least two specs");
    }
    const json& parts = params.at("parts");
    HolomorphicFrame acc = frame_from_json(parts.at(0));
    for (std::size_t i = 1; i < parts.size(); ++i) {
      acc = direct_sum(acc, frame_from_json(parts.at(i)));
    }
    return acc;
  }
  throw ValidationError("framespec: unknown builtin '" + name + "'");
}

HolomorphicFrame explicit_from_json(const json& doc) {
  const int n = require_int(doc, "n", "framespec");
  const int N = require_int(doc, "N", "framespec");
  if (N < 1 || n < 1 || n > N) {
    throw ValidationError("framespec: need N >= n >= 1");
  }
  double radius = HolomorphicFrame::kInfiniteRadius;
  if (doc.contains("radius") && !doc.at("radius").is_null()) {
    if (!doc.at("radius").is_number()) {
      throw ValidationError("framespec: 'radius' must be a number");
    }
    radius = doc.at("radius").get<double>();
  }
  if (!doc.contains("coeffs") || !doc.at("coeffs").is_array()) {
    throw ValidationError("framespec: 'coeffs' array required");
  }
  int degree = doc.value("degree", 0);
  for (const json& e : doc.at("coeffs")) {
    if (!e.is_array() || e.size() != 5) {
      throw ValidationError(
          "framespec: coefficient entries are [degree,row,col,re,im]");
    }
    degree = std::max(degree, e.at(0).get<int>());
  }
  std::vector<CMatrix> coeffs(static_cast<std::size_t>(degree + 1),
                              CMatrix::Zero(N, n));
  for (const json& e : doc.at("coeffs")) {
    const int k = e.at(0).get<int>();
    const int r = e.at(1).get<int>();
    const int c = e.at(2).get<int>();
    if (k < 0 || r < 0 || r >= N || c < 0 || c >= n) {
      std::ostringstream os;
      os << "framespec: coefficient index out of range " << e.dump();
      throw ValidationError(os.str());
    }
    if (!e.at(3).is_number() || !e.at(4).is_number()) {
      throw ValidationError("framespec: coefficient values must be numbers");
    }
    coeffs[static_cast<std::size_t>(k)](r, c) +=
        Complex(e.at(3).get<double>(), e.at(4).get<double>());
  }
  return HolomorphicFrame(doc.value("label", std::string("frame")),
                          std::move(coeffs), radius);
}

}  // namespace

HolomorphicFrame frame_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ValidationError("framespec: document must be a JSON object");
  }
  if (doc.contains("version") &&
      doc.at("version") != json(kFrameSpecVersion)) {
    throw ValidationError("framespec: unsupported version " +
                          doc.at("version").dump());
  }
  try {
    if (doc.contains("builtin")) {
      HolomorphicFrame f = builtin_from_json(doc);
      if (doc.contains("label") && doc.at("label").is_string()) {
        return HolomorphicFrame(doc.at("label").get<std::string>(),
                                f.coeffs(), f.radius());
      }
      return f;
    }
    return explicit_from_json(doc);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("framespec: ") + e.what());
  }
}

json frame_to_json(const HolomorphicFrame& frame) {
  json doc = json::object();
  doc["version"] = kFrameSpecVersion;
  doc["label"] = frame.label();
  doc["n"] = frame.rank();
  doc["N"] = frame.dim();
  if (std::isfinite(frame.radius())) {
    doc["radius"] = frame.radius();
  }
  doc["degree"] = frame.degree();
  json coeffs = json::array();
  for (int k = 0; k <= frame.degree(); ++k) {
    const CMatrix& c = frame.coeffs()[static_cast<std::size_t>(k)];
    for (Eigen::Index col = 0; col < c.cols(); ++col) {
      for (Eigen::Index row = 0; row < c.rows(); ++row) {
        const Complex v = c(row, col);
        if (v != Complex(0.0, 0.0)) {
          coeffs.push_back({k, row, col, v.real(), v.imag()});
        }
      }
    }
  }
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

HolomorphicFrame load_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open frame file '" + path + "'");
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("frame file '" + path + "': " + e.what());
  }
  return frame_from_json(doc);
}

void save_frame_file(const HolomorphicFrame& frame, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write frame file '" + path + "'");
  }
  out << frame_to_json(frame).dump(2) << "\n";
}

}  // namespace curvlab
