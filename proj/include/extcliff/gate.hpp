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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace extcliff {

enum class GateKind : std::uint8_t { H, S, X, T, CX, TOF, Measure };

/// One circuit instruction.
///
/// `Measure` writes the computational-basis outcome of `wires[0]` into
/// classical bit `cbit`. Any of H/S/X/CX may carry a `condition`, in which
/// case it acts only when that classical bit is 1. X is shorthand for HSSH.
struct Gate {
  GateKind kind = GateKind::H;
  std::array<std::size_t, 3> wires{};
  std::size_t cbit = 0;
  std::optional<std::size_t> condition;

  static Gate make(GateKind kind, std::size_t a, std::size_t b = 0, std::size_t c = 0) {
    Gate g;
    g.kind = kind;
    g.wires = {a, b, c};
    return g;
  }
  static Gate h(std::size_t q) { return make(GateKind::H, q); }
  static Gate s(std::size_t q) { return make(GateKind::S, q); }
  static Gate x(std::size_t q) { return make(GateKind::X, q); }
  static Gate t(std::size_t q) { return make(GateKind::T, q); }
  static Gate cx(std::size_t control, std::size_t target) {
    return make(GateKind::CX, control, target);
  }
  static Gate tof(std::size_t c1, std::size_t c2, std::size_t target) {
    return make(GateKind::TOF, c1, c2, target);
  }
  static Gate measure(std::size_t q, std::size_t cbit) {
    Gate g = make(GateKind::Measure, q);
    g.cbit = cbit;
    return g;
  }
  /// Classically controlled copy of `inner`; throws unless inner is H/S/X/CX.
  static Gate controlled(std::size_t cbit, Gate inner);

  std::size_t arity() const;
  std::span<const std::size_t> qubits() const { return {wires.data(), arity()}; }

  /// H, S, X or CX (possibly classically controlled).
  bool is_basic_clifford() const;

  bool operator==(const Gate&) const = default;
};

const char* gate_name(GateKind kind);

/// Text form used by the circuit file format, e.g. "CX 0 1" or "C c2 X 4".
std::string to_string(const Gate& gate);

}  // namespace extcliff
