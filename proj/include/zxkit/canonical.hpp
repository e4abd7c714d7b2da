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

#include <cstdint>
#include <string>

#include "zxkit/diagram.hpp"

namespace zxkit {

/**
 * Relabelling-invariant text form of a diagram: kinds, phases, edge
 * multiplicities, boundary order and scalar, laid out in a canonical vertex
 * order found by colour refinement plus individualisation search.
 *
 * Structural, not semantic: Z(0) and X(0) wires have equal matrices but
 * different forms. If the search exceeds its leaf budget the form falls
 * back to the refined colouring alone (prefixed "wl:"), which is still
 * invariant but may collide for non-isomorphic graphs.
 */
std::string canonical_form(const Diagram& d);

/// 64-bit FNV-1a of canonical_form, as 16 hex digits.
std::string canonical_hash(const Diagram& d);

}  // namespace zxkit
