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

#include <nlohmann/json.hpp>

#include "curvlab/frame.hpp"

namespace curvlab {

inline constexpr const char* kFrameSpecVersion = "framespec/1";

/// Parse a FrameSpec document. Builtins are expanded to explicit
/// coefficients, so the result is indistinguishable from an explicit spec.
HolomorphicFrame frame_from_json(const nlohmann::json& doc);

/// Explicit-coefficient FrameSpec. An infinite radius is omitted.
nlohmann::json frame_to_json(const HolomorphicFrame& frame);

HolomorphicFrame load_frame_file(const std::string& path);
void save_frame_file(const HolomorphicFrame& frame, const std::string& path);

}  // namespace curvlab
