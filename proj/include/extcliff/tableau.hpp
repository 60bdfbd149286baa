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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "extcliff/gate.hpp"
#include "extcliff/pauli.hpp"

namespace extcliff {

/// Stabilizer state on n qubits in destabilizer/stabilizer form.
///
/// Row i of each half is a PauliOperator with phase exponent 0 or 2.
/// destabilizer(i) anticommutes with stabilizer(i) and commutes with every
/// other row.
class StabilizerTableau {
 public:
  /// |0...0>; throws std::invalid_argument if `num_qubits` is zero.
  explicit StabilizerTableau(std::size_t num_qubits);

  /// |bits>, with stabilizer i equal to (-1)^{bits_i} Z_i.
  static StabilizerTableau init_basis(std::span<const std::uint8_t> bits);

  std::size_t num_qubits() const { return n_; }
  const PauliOperator& stabilizer(std::size_t i) const { return stab_[i]; }
  const PauliOperator& destabilizer(std::size_t i) const { return destab_[i]; }

  /// Conjugates every row by an unconditioned H, S, X or CX.
  void apply(const Gate& gate);

  struct Measurement {
    std::uint8_t outcome = 0;
    /// 1.0 for a deterministic outcome, 0.5 for a random one.
    double probability = 1.0;
  };

  /// Z-basis measurement of `wire`, collapsing the state. The RNG is only
  /// consulted when the outcome is random.
  Measurement measure_z(std::size_t wire, std::mt19937_64& rng);

  /// Projects onto `outcome` and returns its probability (0, 0.5 or 1).
  /// A zero-probability projection leaves the state untouched.
  double measure_z_forced(std::size_t wire, std::uint8_t outcome);

  /// Fixed outcome of measuring `wire`, or nullopt when it is random.
  std::optional<std::uint8_t> deterministic_outcome(std::size_t wire) const;

  /// <psi|p|psi> in {-1, 0, +1}; throws std::invalid_argument for a non-Hermitian p.
  int pauli_expectation(const PauliOperator& p) const;

  /// Checks the commutation structure and sign restrictions of all rows.
  bool is_valid() const;

  /// One "+XZIY" row per line, destabilizers first.
  std::string dump() const;

 private:
  void check_wire(std::size_t wire) const;
  /// Index of a stabilizer anticommuting with Z_wire, if any.
  std::optional<std::size_t> random_pivot(std::size_t wire) const;
  void collapse(std::size_t wire, std::size_t pivot, std::uint8_t outcome);
  /// conjugate_in_place without the per-row checks.
  static void conjugate_row(PauliOperator& p, GateKind kind, std::size_t a, std::size_t b);

  std::size_t n_;
  std::vector<PauliOperator> destab_;
  std::vector<PauliOperator> stab_;
};

}  // namespace extcliff
