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

#include "extcliff/gate.hpp"

#include <stdexcept>

namespace extcliff {

Gate Gate::controlled(std::size_t cbit, Gate inner) {
  if (inner.condition.has_value()) {
    throw std::invalid_argument("controlled gate cannot be nested");
  }
  switch (inner.kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::X:
    case GateKind::CX:
      break;
    default:
      throw std::invalid_argument(std::string("classical control only wraps H/S/X/CX, got ") +
                                  gate_name(inner.kind));
  }
  inner.condition = cbit;
  return inner;
}

std::size_t Gate::arity() const {
  switch (kind) {
    case GateKind::CX:
      return 2;
    case GateKind::TOF:
      return 3;
    default:
      return 1;
  }
}

bool Gate::is_basic_clifford() const {
  return kind == GateKind::H || kind == GateKind::S || kind == GateKind::X ||
         kind == GateKind::CX;
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::X:
      return "X";
    case GateKind::T:
      return "T";
    case GateKind::CX:
      return "CX";
    case GateKind::TOF:
      return "TOF";
    case GateKind::Measure:
      return "M";
  }
  return "?";
}

std::string to_string(const Gate& gate) {
  std::string out;
  if (gate.condition) {
    out = "C c" + std::to_string(*gate.condition) + " ";
  }
  out += gate_name(gate.kind);
  for (std::size_t q : gate.qubits()) {
    out += ' ';
    out += std::to_string(q);
  }
  if (gate.kind == GateKind::Measure) {
    out += " c" + std::to_string(gate.cbit);
  }
  return out;
}

}  // namespace extcliff
