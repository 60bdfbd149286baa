// Copyright 2026 The extcliff Authors
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
#include <string_view>

#include <json.hpp>
#include "extcliff/circuit.hpp"

namespace extcliff {

/// Task schema:
///   {"n": 3,
///    "input":  {"kind": "bits", "bits": "010"} | {"kind": "product", "states": [M, ...]},
///    "circuit": "H 0\nCX 0 1\n",
///    "output": {"kind": "bits"} | {"kind": "product", "unitaries": [M, ...]}}
/// A matrix M is either a 2x2 row-major array of [re, im] pairs or one of the
/// names "I", "H", "S", "T", "X", "Y", "Z".
///
/// Throws ParseError on any schema violation.
Task task_from_json(const nlohmann::json& j);
Task parse_task(std::string_view text);

nlohmann::json task_to_json(const Task& task);
nlohmann::json unitary_to_json(const SingleQubitUnitary& u);
SingleQubitUnitary unitary_from_json(const nlohmann::json& j);

/// "0110" <-> {0,1,1,0}; throws ParseError on other characters.
Bits parse_bits(std::string_view text);
std::string bits_to_string(std::span<const std::uint8_t> bits);

}  // namespace extcliff
