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

#include "extcliff/pauli.hpp"

namespace extcliff {

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// 2x2 unitary. Construction throws std::invalid_argument unless
/// U U^dagger = I entrywise within kTolerance.
class SingleQubitUnitary {
 public:
  explicit SingleQubitUnitary(const Matrix2& m);

  static SingleQubitUnitary identity();
  static SingleQubitUnitary hadamard();
  static SingleQubitUnitary phase_s();
  static SingleQubitUnitary t_gate();
  static SingleQubitUnitary pauli_x();
  static SingleQubitUnitary pauli_y();
  static SingleQubitUnitary pauli_z();

  const Complex& operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }
  const Matrix2& matrix() const { return m_; }

  SingleQubitUnitary adjoint() const;
  /// U|b> for b in {0,1}.
  std::array<Complex, 2> column(std::size_t b) const { return {m_[0][b], m_[1][b]}; }
  std::array<Complex, 2> apply(const std::array<Complex, 2>& v) const;

  /// True when U = e^{i theta} I within kTolerance.
  bool is_identity_up_to_phase() const;

  friend SingleQubitUnitary operator*(const SingleQubitUnitary& a, const SingleQubitUnitary& b);

 private:
  Matrix2 m_;
};

/// Coefficients of U = a_I I + a_X X + a_Y Y + a_Z Z.
struct PauliCoefficients {
  std::array<Complex, 4> a{};

  /// sum_i a_i sigma^i as a matrix.
  Matrix2 reconstruct() const;
};

/// a_i = tr(sigma^i U) / 2, ordered (I, X, Y, Z).
PauliCoefficients decompose_single_qubit(const SingleQubitUnitary& u);

/// sigma^index as a matrix, index ordered (I, X, Y, Z).
Matrix2 pauli_matrix(int index);

/// sigma^i sigma^j = i^phase_exp sigma^pauli.
struct SinglePauliProduct {
  int phase_exp;
  int pauli;
};
SinglePauliProduct multiply_single_paulis(int i, int j);

/// Real coefficients c with U Z U^dagger = sum_P c_P sigma^P, ordered
/// (I, X, Y, Z). Built from sum_{i,j} a_i conj(a_j) sigma^i Z sigma^j, which
/// makes it the Bloch vector of U|0>; c_I vanishes.
std::array<double, 4> rotated_z_expansion(const SingleQubitUnitary& u);

/// <psi| sigma^P |psi> for |psi> = V|0>, ordered (I, X, Y, Z).
std::array<double, 4> bloch_expectations(const SingleQubitUnitary& v);

}  // namespace extcliff
