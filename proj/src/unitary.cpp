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

#include "extcliff/unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace extcliff {

namespace {

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
  return out;
}

Matrix2 adjoint_of(const Matrix2& m) {
  return {{{std::conj(m[0][0]), std::conj(m[1][0])}, {std::conj(m[0][1]), std::conj(m[1][1])}}};
}

}  // namespace

SingleQubitUnitary::SingleQubitUnitary(const Matrix2& m) : m_(m) {
  const Matrix2 p = multiply(m_, adjoint_of(m_));
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Complex expected = r == c ? Complex{1, 0} : Complex{0, 0};
      if (std::abs(p[r][c] - expected) > kTolerance) {
        throw std::invalid_argument("matrix is not unitary within tolerance");
      }
    }
  }
}

SingleQubitUnitary SingleQubitUnitary::identity() { return SingleQubitUnitary({{{1, 0}, {0, 1}}}); }

SingleQubitUnitary SingleQubitUnitary::hadamard() {
  const double h = std::numbers::sqrt2 / 2;
  return SingleQubitUnitary({{{h, h}, {h, -h}}});
}

SingleQubitUnitary SingleQubitUnitary::phase_s() {
  return SingleQubitUnitary({{{1, 0}, {0, Complex{0, 1}}}});
}

SingleQubitUnitary SingleQubitUnitary::t_gate() {
  return SingleQubitUnitary({{{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}}});
}

SingleQubitUnitary SingleQubitUnitary::pauli_x() { return SingleQubitUnitary({{{0, 1}, {1, 0}}}); }

SingleQubitUnitary SingleQubitUnitary::pauli_y() {
  return SingleQubitUnitary({{{0, Complex{0, -1}}, {Complex{0, 1}, 0}}});
}

SingleQubitUnitary SingleQubitUnitary::pauli_z() { return SingleQubitUnitary({{{1, 0}, {0, -1}}}); }

SingleQubitUnitary SingleQubitUnitary::adjoint() const { return SingleQubitUnitary(adjoint_of(m_)); }

std::array<Complex, 2> SingleQubitUnitary::apply(const std::array<Complex, 2>& v) const {
  return {m_[0][0] * v[0] + m_[0][1] * v[1], m_[1][0] * v[0] + m_[1][1] * v[1]};
}

bool SingleQubitUnitary::is_identity_up_to_phase() const {
  return std::abs(m_[0][1]) < kTolerance && std::abs(m_[1][0]) < kTolerance &&
         std::abs(m_[0][0] - m_[1][1]) < kTolerance;
}

SingleQubitUnitary operator*(const SingleQubitUnitary& a, const SingleQubitUnitary& b) {
  return SingleQubitUnitary(multiply(a.m_, b.m_));
}

Matrix2 pauli_matrix(int index) {
  switch (index) {
    case 0:
      return {{{1, 0}, {0, 1}}};
    case 1:
      return {{{0, 1}, {1, 0}}};
    case 2:
      return {{{0, Complex{0, -1}}, {Complex{0, 1}, 0}}};
    case 3:
      return {{{1, 0}, {0, -1}}};
    default:
      throw std::out_of_range("Pauli index must be 0..3");
  }
}

Matrix2 PauliCoefficients::reconstruct() const {
  Matrix2 out{};
  for (int i = 0; i < 4; ++i) {
    const Matrix2 s = pauli_matrix(i);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out[r][c] += a[i] * s[r][c];
  }
  return out;
}

PauliCoefficients decompose_single_qubit(const SingleQubitUnitary& u) {
  PauliCoefficients coeffs;
  for (int i = 0; i < 4; ++i) {
    const Matrix2 prod = multiply(pauli_matrix(i), u.matrix());
    coeffs.a[i] = (prod[0][0] + prod[1][1]) / 2.0;
  }
  return coeffs;
}

SinglePauliProduct multiply_single_paulis(int i, int j) {
  static constexpr char kNames[4] = {'I', 'X', 'Y', 'Z'};
  PauliOperator p = PauliOperator::single(1, 0, kNames[i]);
  p *= PauliOperator::single(1, 0, kNames[j]);
  const int index = p.x(0) ? (p.z(0) ? 2 : 1) : (p.z(0) ? 3 : 0);
  return {p.phase_exp(), index};
}

std::array<double, 4> rotated_z_expansion(const SingleQubitUnitary& u) {
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const PauliCoefficients coeffs = decompose_single_qubit(u);
  std::array<Complex, 4> acc{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // sigma^i Z sigma^j as i^k sigma^P.
      const SinglePauliProduct iz = multiply_single_paulis(i, 3);
      const SinglePauliProduct izj = multiply_single_paulis(iz.pauli, j);
      acc[izj.pauli] += coeffs.a[i] * std::conj(coeffs.a[j]) *
                        kPhases[(iz.phase_exp + izj.phase_exp) % 4];
    }
  }
  return {acc[0].real(), acc[1].real(), acc[2].real(), acc[3].real()};
}

std::array<double, 4> bloch_expectations(const SingleQubitUnitary& v) {
  const Complex a = v(0, 0);
  const Complex b = v(1, 0);
  const Complex ab = std::conj(a) * b;
  return {1.0, 2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

}  // namespace extcliff
