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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "extcliff/gate.hpp"
#include "extcliff/pauli.hpp"
#include "extcliff/unitary.hpp"

namespace extcliff {

using Bits = std::vector<std::uint8_t>;

/// Ordered gate list over `num_qubits` wires with classical bits for
/// intermediate measurement records.
///
/// `append` enforces: wires in range and pairwise distinct, and every
/// classical condition reads a bit written by an earlier Measure. The
/// classical register grows to cover the highest bit a Measure writes.
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits);

  void append(const Gate& gate);
  void append(std::span<const Gate> gates);
  /// Appends every gate of `other` (same width required).
  void append(const Circuit& other);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_cbits() const { return num_cbits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  std::size_t count(GateKind kind) const;
  bool has_measurements() const { return count(GateKind::Measure) > 0; }
  bool is_adaptive() const;
  /// Every gate is one of H, S, X, CX, Measure or a controlled basic gate.
  bool is_clifford() const;

  /// Same gates on a wider register.
  Circuit widened(std::size_t num_qubits) const;

  /// Reversed, inverted gate list of a measurement-free circuit.
  /// S^dag is written as S S S and T^dag as T S S S (that is, T^7).
  Circuit inverse() const;

  bool operator==(const Circuit& other) const {
    return num_qubits_ == other.num_qubits_ && gates_ == other.gates_;
  }

 private:
  std::size_t num_qubits_;
  std::size_t num_cbits_ = 0;
  std::vector<Gate> gates_;
  std::vector<bool> written_;
};

/// Every wire starts in |bits_i>.
struct BasisInput {
  Bits bits;
};
/// Wire i starts in V_i|0>.
struct ProductInput {
  std::vector<SingleQubitUnitary> states;
};
using InputSpec = std::variant<BasisInput, ProductInput>;

/// Computational-basis readout of every wire.
struct BasisOutput {};
/// Wire i is read out in the basis {U_i|0>, U_i|1>}.
struct ProductOutput {
  std::vector<SingleQubitUnitary> unitaries;
};
using OutputSpec = std::variant<BasisOutput, ProductOutput>;

/// A computational task (input preparation, circuit, output measurement).
class Task {
 public:
  Task(InputSpec input, Circuit circuit, OutputSpec output);

  std::size_t num_qubits() const { return circuit_.num_qubits(); }
  const InputSpec& input() const { return input_; }
  const Circuit& circuit() const { return circuit_; }
  const OutputSpec& output() const { return output_; }

  bool has_product_input() const { return std::holds_alternative<ProductInput>(input_); }
  bool has_product_output() const { return std::holds_alternative<ProductOutput>(output_); }

  /// V with V|0> equal to the input state of `wire` (X^b for basis inputs).
  SingleQubitUnitary input_unitary(std::size_t wire) const;
  /// U defining the readout basis of `wire` (identity for basis outputs).
  SingleQubitUnitary output_unitary(std::size_t wire) const;

 private:
  InputSpec input_;
  Circuit circuit_;
  OutputSpec output_;
};

enum class InputKind : std::uint8_t { Bits, Prod };
enum class Adaptivity : std::uint8_t { NonAdapt, Adapt };
enum class OutputKind : std::uint8_t { Bits, Prod };

struct IngredientProfile {
  InputKind input = InputKind::Bits;
  Adaptivity adaptivity = Adaptivity::NonAdapt;
  OutputKind output = OutputKind::Bits;

  bool operator==(const IngredientProfile&) const = default;
  /// Componentwise inclusion BITS < PROD and NONADAPT < ADAPT.
  bool is_subset_of(const IngredientProfile& other) const;
};

/// "(IN(BITS), NONADAPT, OUT(PROD))".
std::string to_string(const IngredientProfile& profile);
/// Accepts "BITS,NONADAPT,PROD" style triples (case-insensitive, IN()/OUT() optional).
IngredientProfile parse_profile(std::string_view text);
/// The eight profiles in a fixed order (input fastest, then adaptivity, then output).
std::vector<IngredientProfile> all_profiles();

/// BITS iff every V_i (resp. U_i) is identity up to phase or the side is a
/// basis spec; ADAPT iff any classically controlled gate is present.
/// Throws std::invalid_argument for circuits containing T or TOF.
IngredientProfile classify_task(const Task& task);

/// Replaces every TOF with the 2-control H/T/CX/S network; T^dag is T^7.
Circuit expand_toffoli(const Circuit& circuit);

enum class GadgetMode : std::uint8_t { MagicInput, ProductOutput };

struct GadgetizedTask {
  Task task;
  std::vector<std::size_t> postselect_wires;
  Bits postselect_values;
  /// ancilla_of_t[j] is the wire added for the j-th T gate.
  std::vector<std::size_t> ancilla_of_t;
};

/// Removes every T gate using one fresh ancilla per T (appended after the
/// existing wires, in T order). Original wires start in |0>.
///
/// MagicInput: T on l becomes CX(l, a) with a prepared as (|0> + e^{i pi/4}|1>)/sqrt2
/// and read out in the computational basis.
/// ProductOutput: a starts in |0>, T on l becomes CX(l, a), and a is read out
/// after T then H, i.e. with U_a = (H T)^dag.
/// Postselecting every ancilla on 0 reproduces the original circuit.
GadgetizedTask gadgetize_t(const Circuit& circuit, GadgetMode mode);

/// Swaps input and output roles of a measurement-free task with exactly one
/// product side, preserving the outcome probability:
///   ((BITS x, B, PROD U), y) -> ((PROD U_i X^{y_i}, B^dag, BITS), x)
///   ((PROD V, B, BITS), x)  -> ((BITS x, B^dag, PROD V), 0...0)
std::pair<Task, Bits> task_transpose(const Task& task, std::span<const std::uint8_t> outcome);

/// One gate per line: `H 0`, `CX 0 1`, `TOF 0 1 2`, `M 3 c0`, `C c0 X 4`;
/// `#` starts a comment. Without `num_qubits` the width is max wire + 1.
Circuit parse_circuit(std::string_view text, std::optional<std::size_t> num_qubits = std::nullopt);
std::string serialize_circuit(const Circuit& circuit);

/// Heisenberg-picture conjugation c^dag p c through a unitary Clifford circuit.
inline ConjugationResult conjugate_through_circuit(const PauliOperator& p, const Circuit& c) {
  return conjugate_through_gates(p, c.gates());
}

}  // namespace extcliff
