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

#include <doctest.h>

#include <random>

#include "extcliff/circuit.hpp"
#include "extcliff/pauli.hpp"
#include "extcliff/statevec.hpp"
#include "extcliff/unitary.hpp"
#include "support/random_tasks.hpp"

using namespace extcliff;
using namespace extcliff::testing;

namespace {

std::vector<Complex> scaled(std::vector<Complex> m, Complex s) {
  for (auto& v : m) v *= s;
  return m;
}

}  // namespace

TEST_CASE("single-qubit products follow XY = iZ") {
  const auto X = PauliOperator::from_string("X");
  const auto Y = PauliOperator::from_string("Y");
  const auto Z = PauliOperator::from_string("Z");
  CHECK(X * Y == PauliOperator::from_string("iZ"));
  CHECK(Y * Z == PauliOperator::from_string("iX"));
  CHECK(Z * X == PauliOperator::from_string("iY"));
  CHECK(X * Z == PauliOperator::from_string("-iY"));
  CHECK(Y * Y == PauliOperator::from_string("I"));
}

TEST_CASE("from_string and rendering") {
  const auto p = PauliOperator::from_string("-iXZIY");
  CHECK(p.num_qubits() == 4);
  CHECK(p.phase_exp() == 3);
  CHECK_FALSE(p.is_hermitian());
  CHECK(p.pauli_at(0) == 'X');
  CHECK(p.pauli_at(3) == 'Y');
  CHECK(p.to_signed_string() == "-iXZIY");
  CHECK(PauliOperator::from_string("+ZZ").to_signed_string() == "+ZZ");
  CHECK_THROWS(PauliOperator::from_string("XQ"));
  CHECK_THROWS(PauliOperator(0));
  CHECK_THROWS(pauli_multiply(PauliOperator(2), PauliOperator(3)));
}

TEST_CASE("multiplication matches dense matrices") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 4);
    const auto p = random_pauli(n, rng);
    const auto q = random_pauli(n, rng);
    const std::size_t dim = std::size_t{1} << n;
    REQUIRE(max_abs_diff(pauli_dense(p * q), matmul(pauli_dense(p), pauli_dense(q), dim)) < 1e-12);
    const bool dense_commute =
        max_abs_diff(matmul(pauli_dense(p), pauli_dense(q), dim), matmul(pauli_dense(q), pauli_dense(p), dim)) < 1e-12;
    REQUIRE(p.commutes_with(q) == dense_commute);
    REQUIRE((p * p.inverse()).is_identity_string());
    REQUIRE((p * p.inverse()).phase_exp() == 0);
  }
}

TEST_CASE("multiplication across word boundaries") {
  PauliOperator a(130), b(130);
  a.set(0, true, false);
  a.set(129, true, true);
  b.set(0, false, true);
  b.set(129, false, true);
  // (X)(Z) = -iY and (Y)(Z) = iX.
  const auto c = a * b;
  CHECK(c.pauli_at(0) == 'Y');
  CHECK(c.pauli_at(129) == 'X');
  CHECK(c.phase_exp() == 0);
  CHECK(a.commutes_with(b));
}

TEST_CASE("conjugation by single gates matches g p g^dag") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 3);
    const auto p = random_pauli(n, rng);
    const Gate g = random_basic_gate(n, rng);
    Circuit c(n);
    c.append(g);
    const auto U = circuit_unitary(c);
    const std::size_t dim = std::size_t{1} << n;
    const auto want = matmul(matmul(U, pauli_dense(p), dim), adjoint(U, dim), dim);
    REQUIRE(max_abs_diff(pauli_dense(conjugate_by_gate(p, g)), want) < 1e-12);
  }
  CHECK_THROWS(conjugate_by_gate(PauliOperator(2), Gate::t(0)));
  CHECK_THROWS(conjugate_by_gate(PauliOperator(2), Gate::h(5)));
}

TEST_CASE("conjugate_through_gates gives c^dag p c = gamma P") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 4);
    const Circuit c = random_unitary_clifford(n, 1 + uniform_index(rng, 30), rng);
    const auto p = random_pauli(n, rng);
    const auto r = conjugate_through_circuit(p, c);
    REQUIRE(r.pauli.phase_exp() == 0);
    const std::size_t dim = std::size_t{1} << n;
    const auto U = circuit_unitary(c);
    const auto want = matmul(matmul(adjoint(U, dim), pauli_dense(p), dim), U, dim);
    REQUIRE(max_abs_diff(scaled(pauli_dense(r.pauli), r.gamma), want) < 1e-10);
  }
}

TEST_CASE("known conjugations") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  // (H0 CX)^dag Z1 (H0 CX) = X0 Z1 after reordering: CX Z1 CX = Z0 Z1, H Z0 H = X0.
  const auto r = conjugate_through_circuit(PauliOperator::from_string("IZ"), c);
  CHECK(r.gamma == Complex{1, 0});
  CHECK(r.pauli.to_signed_string() == "+XZ");

  Circuit s(1);
  s.append(Gate::s(0));
  const auto rs = conjugate_through_circuit(PauliOperator::from_string("X"), s);
  CHECK(rs.pauli.to_signed_string() == "+Y");
  CHECK(std::abs(rs.gamma - Complex{-1, 0}) < 1e-12);
}

TEST_CASE("single-qubit Pauli decomposition reconstructs the unitary") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_unitary(rng);
    const auto m = decompose_single_qubit(u).reconstruct();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) REQUIRE(std::abs(m[r][c] - u(r, c)) < 1e-12);
    const auto rz = rotated_z_expansion(u);
    const auto bloch = bloch_expectations(u);
    REQUIRE(std::abs(rz[0]) < 1e-12);
    for (int k = 1; k < 4; ++k) REQUIRE(rz[k] == doctest::Approx(bloch[k]).epsilon(1e-10));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto prod = multiply_single_paulis(i, j);
      const Matrix2 a = pauli_matrix(i), b = pauli_matrix(j), c = pauli_matrix(prod.pauli);
      Complex phase{1, 0};
      for (int k = 0; k < prod.phase_exp; ++k) phase *= Complex{0, 1};
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) {
          const Complex ab = a[r][0] * b[0][col] + a[r][1] * b[1][col];
          CHECK(std::abs(ab - phase * c[r][col]) < 1e-12);
        }
    }
}

TEST_CASE("unitary validation") {
  CHECK_THROWS(SingleQubitUnitary({{{Complex{1, 0}, Complex{1, 0}}, {Complex{0, 0}, Complex{1, 0}}}}));
  CHECK(SingleQubitUnitary::pauli_z().is_identity_up_to_phase() == false);
  CHECK((SingleQubitUnitary::phase_s() * SingleQubitUnitary::phase_s() * SingleQubitUnitary::pauli_z())
            .is_identity_up_to_phase());
  const auto t = SingleQubitUnitary::t_gate();
  CHECK(std::abs((t * t).matrix()[1][1] - Complex{0, 1}) < 1e-12);
}
