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
#include <span>
#include <vector>

#include "extcliff/circuit.hpp"
#include "extcliff/unitary.hpp"

namespace extcliff {

/// Dense pure state. Wire q is bit q of the amplitude index.
class DenseState {
 public:
  /// |0...0> on `num_qubits` wires (0 allowed: a single amplitude 1).
  explicit DenseState(std::size_t num_qubits);
  static DenseState from_product(std::span<const SingleQubitUnitary> states);
  static DenseState from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t index) const { return amps_[index]; }

  void apply_matrix(std::size_t q, const Matrix2& m);
  /// Any unconditioned H/S/X/T/CX/TOF gate.
  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

  /// Probability that measuring q gives 1.
  double probability_one(std::size_t q) const;
  /// Projects q onto |b>, renormalizes, and returns the prior probability.
  /// A (near) zero-probability projection leaves the state untouched.
  double project(std::size_t q, std::uint8_t b);
  /// Drops wire q, assumed to be in |b>; higher wires shift down by one.
  void remove_qubit(std::size_t q, std::uint8_t b);
  /// Appends a new highest wire in state (v0, v1).
  void add_qubit(const std::array<Complex, 2>& v);

  double norm_squared() const;
  Complex inner(const DenseState& other) const;
  /// |<this|other>|^2, insensitive to global phase.
  double fidelity(const DenseState& other) const;

 private:
  std::size_t n_;
  std::vector<Complex> amps_;
};

struct OracleLimits {
  /// Peak number of simultaneously live wires.
  std::size_t width_limit = 22;
  /// At most 2^branch_limit measurement records are explored.
  std::size_t branch_limit = 20;
};

/// Conditional outcome probabilities below this are pruned from enumeration.
inline constexpr double kBranchPruneThreshold = 1e-12;

struct BranchOutcome {
  /// Intermediate measurement outcomes in execution order.
  Bits record;
  /// Classical register at the end of the branch.
  Bits cbits;
  double probability = 0.0;
  /// Normalized post-circuit state, before the output rotations.
  DenseState state{0};
};

/// Enumerates every reachable measurement record. Needs n <= width_limit.
std::vector<BranchOutcome> run_branches(const Task& task, const OracleLimits& limits = {});

/// log2 of Pr(output wires `wires` read `values`), -infinity when zero.
///
/// Wires enter the dense register at first use and leave once their readout
/// is fixed, so only the peak live width counts against the limit.
double log2_marginal_probability(const Task& task, std::span<const std::size_t> wires,
                                 std::span<const std::uint8_t> values,
                                 const OracleLimits& limits = {});

double marginal_probability(const Task& task, std::span<const std::size_t> wires,
                            std::span<const std::uint8_t> values, const OracleLimits& limits = {});

/// Pr(all n output wires read y).
double joint_probability(const Task& task, std::span<const std::uint8_t> y,
                         const OracleLimits& limits = {});

/// Pr(target | condition); throws ZeroProbabilityCondition if Pr(condition) is 0.
double postselect_probability(const Task& task, std::span<const std::size_t> cond_wires,
                              std::span<const std::uint8_t> cond_values,
                              std::span<const std::size_t> target_wires,
                              std::span<const std::uint8_t> target_values,
                              const OracleLimits& limits = {});

/// p_T(y) for all 2^n outcomes, index bit q = y_q.
std::vector<double> output_distribution(const Task& task, const OracleLimits& limits = {});

struct PostselectedState {
  double probability = 0.0;
  /// State of the remaining wires (in increasing wire order) after the readout
  /// of `wires` in their output bases gave `values`.
  DenseState state{0};
};

/// Needs a measurement-free task; throws ZeroProbabilityCondition on a zero event.
PostselectedState postselected_state(const Task& task, std::span<const std::size_t> wires,
                                     std::span<const std::uint8_t> values,
                                     const OracleLimits& limits = {});

/// Column-major 2^n x 2^n matrix of a measurement-free circuit; entry (r, c)
/// is at index c * 2^n + r.
std::vector<Complex> circuit_unitary(const Circuit& circuit);

/// Dense matrix of a Pauli operator in the same layout.
std::vector<Complex> pauli_dense(const PauliOperator& p);

}  // namespace extcliff
