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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extcliff/gate.hpp"

namespace extcliff {

using Complex = std::complex<double>;

/// Tolerance for every complex-number comparison in the library.
inline constexpr double kTolerance = 1e-9;

/// n-qubit Pauli operator i^k P_0 (x) ... (x) P_{n-1}.
///
/// Each tensor factor is encoded by an (x, z) bit pair: (0,0)=I, (1,0)=X,
/// (1,1)=Y, (0,1)=Z. The factor is the Hermitian matrix itself (Y, not XZ),
/// so the operator is Hermitian exactly when k is even. Single-qubit products
/// follow XY = iZ cyclically.
class PauliOperator {
 public:
  /// Identity on `num_qubits` qubits; throws std::invalid_argument if zero.
  explicit PauliOperator(std::size_t num_qubits);

  /// Parses "XZIY", "+XZ", "-Y", "iX", "-iZZ" (sign prefix optional).
  static PauliOperator from_string(std::string_view text);

  /// `pauli` in {'I','X','Y','Z'} on qubit q, identity elsewhere.
  static PauliOperator single(std::size_t num_qubits, std::size_t q, char pauli);

  std::size_t num_qubits() const { return num_qubits_; }
  std::uint8_t phase_exp() const { return phase_exp_; }
  void set_phase_exp(int k) { phase_exp_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4); }
  void add_phase_exp(int k) { set_phase_exp(phase_exp_ + k); }

  bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1u; }
  bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1u; }
  void set(std::size_t q, bool x_bit, bool z_bit);
  char pauli_at(std::size_t q) const;

  /// Matrix phase i^k as a complex number.
  Complex phase() const;
  bool is_hermitian() const { return (phase_exp_ & 1u) == 0; }
  /// True when every tensor factor is I (the phase may be anything).
  bool is_identity_string() const;
  bool commutes_with(const PauliOperator& other) const;

  /// this <- this * rhs (matrix product, phase tracked exactly).
  PauliOperator& operator*=(const PauliOperator& rhs);
  PauliOperator inverse() const;

  std::span<const std::uint64_t> x_words() const { return xs_; }
  std::span<const std::uint64_t> z_words() const { return zs_; }

  /// Diagnostic rendering "i^k · XZIY".
  std::string to_string() const;
  /// Signed rendering "+XZIY" / "-XZIY" / "+iXZ" used in tableau dumps.
  std::string to_signed_string() const;

  bool operator==(const PauliOperator&) const = default;

 private:
  friend class StabilizerTableau;
  void check_same_size(const PauliOperator& other) const;

  std::size_t num_qubits_;
  std::uint8_t phase_exp_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
};

PauliOperator operator*(PauliOperator lhs, const PauliOperator& rhs);

/// Matrix product p*q; throws std::invalid_argument on a length mismatch.
PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q);

/// In-place g p g^dagger for g in {H, S, X, CX}; unconditioned gates only.
void conjugate_in_place(PauliOperator& p, const Gate& g);

/// g p g^dagger; throws std::out_of_range for a bad wire and
/// std::invalid_argument for a gate outside {H, S, X, CX}.
PauliOperator conjugate_by_gate(const PauliOperator& p, const Gate& g);

/// c^dagger p c = gamma * pauli, with `pauli` carrying phase exponent 0.
struct ConjugationResult {
  Complex gamma{1.0, 0.0};
  PauliOperator pauli;
};

/// Heisenberg-picture conjugation through a gate sequence (first gate applied
/// first to the state). Linear in the number of gates.
ConjugationResult conjugate_through_gates(const PauliOperator& p, std::span<const Gate> gates);

}  // namespace extcliff
