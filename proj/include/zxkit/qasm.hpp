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

#include "zxkit/circuit.hpp"

namespace zxkit {

/**
 * Parses the OpenQASM 2.0 subset: the version header, an optional include,
 * a single qreg, `//` comments and the gates h x z s sdg t tdg rz rx cx cz
 * swap. Angles are `pi`, `k*pi`, `pi/d`, `k*pi/d` with an optional leading
 * minus (kept exact), or a decimal number of radians.
 *
 * Throws QasmSyntaxError (with line and column) on malformed input and
 * UnsupportedGate for statements outside the subset.
 */
Circuit parse_qasm(const std::string& text);
Circuit load_qasm(const std::string& path);

/// Writes the circuit back out; exact angles as `k*pi/d`, numeric ones with
/// 17 significant digits, so parse_qasm(emit_qasm(c)) == c.
std::string emit_qasm(const Circuit& c);
void save_qasm(const Circuit& c, const std::string& path);

}  // namespace zxkit
