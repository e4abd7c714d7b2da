// Copyright 2026 The zxkit Authors
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

#include <json.hpp>

#include "zxkit/diagram.hpp"

namespace zxkit {

/// Version-1 diagram document. Exact phases are written as "num/den" in
/// units of pi, numeric phases as a JSON number in radians.
nlohmann::json diagram_to_json(const Diagram& d);
/// Throws FormatError on schema violations and IllFormed if the graph
/// breaks a diagram invariant.
Diagram diagram_from_json(const nlohmann::json& j);

std::string dump_diagram(const Diagram& d, int indent = 2);
Diagram parse_diagram(const std::string& text);

Diagram load_diagram(const std::string& path);
void save_diagram(const Diagram& d, const std::string& path);

}  // namespace zxkit
