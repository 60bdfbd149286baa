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

#include <numbers>
#include <random>

#include "extcliff/circuit.hpp"
#include "extcliff/errors.hpp"
#include "extcliff/statevec.hpp"
#include "extcliff/task_json.hpp"
#include "support/random_tasks.hpp"

using namespace extcliff;
using namespace extcliff::testing;

namespace {

std::vector<Complex> toffoli_matrix() {
  std::vector<Complex> m(64);
  for (std::size_t c = 0; c < 8; ++c) {
    const std::size_t r = (c & 1u) && (c & 2u) ? c ^ 4u : c;
    m[c * 8 + r] = 1.0;
  }
  return m;
}

IngredientProfile profile(InputKind in, Adaptivity a, OutputKind out) { return {in, a, out}; }

}  // namespace

TEST_CASE("append validation") {
  Circuit c(3);
  CHECK_THROWS(c.append(Gate::h(3)));
  CHECK_THROWS(c.append(Gate::cx(1, 1)));
  CHECK_THROWS(c.append(Gate::tof(0, 2, 2)));
  CHECK_THROWS(c.append(Gate::controlled(0, Gate::x(1))));
  c.append(Gate::measure(0, 2));
  CHECK(c.num_cbits() == 3);
  CHECK_THROWS(c.append(Gate::controlled(1, Gate::x(1))));
  c.append(Gate::controlled(2, Gate::x(1)));
  CHECK(c.is_adaptive());
  CHECK(c.is_clifford());
  CHECK_THROWS(Gate::controlled(0, Gate::t(1)));
}

TEST_CASE("text format round trip") {
  const std::string text = "# qubits 5\nH 0\nS 1\nX 2\nT 3\nCX 0 1\nTOF 0 1 2\nM 3 c0\nC c0 X 4\nC c0 CX 1 2\n";
  const Circuit c = parse_circuit(text);
  CHECK(c.num_qubits() == 5);
  CHECK(c.size() == 9);
  CHECK(serialize_circuit(c) == text);
  CHECK(parse_circuit(serialize_circuit(c)) == c);
  CHECK(parse_circuit("H 2\n").num_qubits() == 3);
  CHECK(parse_circuit("H 0  # comment\n\n", 4).num_qubits() == 4);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    (void)parse_circuit("H 0\nFOO 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_circuit("CX 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("C c0 X 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("H 5\n", 3), ParseError);
  CHECK_THROWS_AS(parse_circuit("M 0 q0\n"), ParseError);
}

TEST_CASE("inverse undoes a Clifford+T circuit") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 3);
    Circuit c = random_unitary_clifford(n, 15, rng);
    c.append(Gate::t(uniform_index(rng, n)));
    c.append(random_unitary_clifford(n, 10, rng));
    Circuit both = c;
    both.append(c.inverse());
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> id(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1.0;
    REQUIRE(max_abs_diff(circuit_unitary(both), id) < 1e-10);
  }
  Circuit m(1);
  m.append(Gate::measure(0, 0));
  CHECK_THROWS(m.inverse());
}

TEST_CASE("expand_toffoli reproduces the Toffoli matrix") {
  Circuit c(3);
  c.append(Gate::tof(0, 1, 2));
  const Circuit e = expand_toffoli(c);
  CHECK(e.count(GateKind::TOF) == 0);
  CHECK(e.count(GateKind::T) == 7);
  CHECK(max_abs_diff(circuit_unitary(e), toffoli_matrix()) < 1e-9);
  CHECK(max_abs_diff(circuit_unitary(c), toffoli_matrix()) < 1e-12);

  Circuit other(4);
  other.append(Gate::tof(3, 1, 0));
  CHECK(max_abs_diff(circuit_unitary(expand_toffoli(other)), circuit_unitary(other)) < 1e-9);
}

TEST_CASE("classify_task") {
  Circuit c(2);
  c.append(Gate::h(0));
  CHECK(classify_task(Task(BasisInput{{0, 1}}, c, BasisOutput{})) ==
        profile(InputKind::Bits, Adaptivity::NonAdapt, OutputKind::Bits));
  const auto phase_id = SingleQubitUnitary::phase_s() * SingleQubitUnitary::phase_s() * SingleQubitUnitary::pauli_z();
  const std::vector<SingleQubitUnitary> zs{phase_id, SingleQubitUnitary::identity()};
  CHECK(classify_task(Task(ProductInput{zs}, c, BasisOutput{})) ==
        profile(InputKind::Bits, Adaptivity::NonAdapt, OutputKind::Bits));
  const std::vector<SingleQubitUnitary> hs{SingleQubitUnitary::hadamard(), SingleQubitUnitary::identity()};
  CHECK(classify_task(Task(BasisInput{{0, 0}}, c, ProductOutput{hs})) ==
        profile(InputKind::Bits, Adaptivity::NonAdapt, OutputKind::Prod));
  Circuit a(2);
  a.append(Gate::measure(0, 0));
  a.append(Gate::controlled(0, Gate::h(1)));
  CHECK(classify_task(Task(ProductInput{hs}, a, ProductOutput{hs})) ==
        profile(InputKind::Prod, Adaptivity::Adapt, OutputKind::Prod));
  Circuit t(1);
  t.append(Gate::t(0));
  CHECK_THROWS_AS(classify_task(Task(BasisInput{{0}}, t, BasisOutput{})), std::invalid_argument);
  CHECK_THROWS(Task(BasisInput{{0}}, c, BasisOutput{}));
}

TEST_CASE("profiles: strings, parsing and inclusion") {
  const auto p = profile(InputKind::Bits, Adaptivity::NonAdapt, OutputKind::Prod);
  CHECK(to_string(p) == "(IN(BITS), NONADAPT, OUT(PROD))");
  CHECK(parse_profile("bits,nonadapt,prod") == p);
  CHECK(parse_profile(to_string(p)) == p);
  CHECK_THROWS(parse_profile("bits,sometimes,prod"));
  CHECK(all_profiles().size() == 8);
  CHECK(p.is_subset_of(profile(InputKind::Prod, Adaptivity::NonAdapt, OutputKind::Prod)));
  CHECK_FALSE(p.is_subset_of(profile(InputKind::Prod, Adaptivity::Adapt, OutputKind::Bits)));
}

TEST_CASE("T gadget in product-output mode reproduces T") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = random_unitary_clifford(1, 12, rng);
    c.append(Gate::t(0));
    const GadgetizedTask g = gadgetize_t(c, GadgetMode::ProductOutput);
    REQUIRE(g.ancilla_of_t.size() == 1);
    const std::size_t a = g.ancilla_of_t[0];
    REQUIRE(g.postselect_wires == std::vector<std::size_t>{a});
    CHECK(g.task.circuit().count(GateKind::T) == 0);
    const PostselectedState ps = postselected_state(g.task, g.postselect_wires, g.postselect_values);
    CHECK(ps.probability == doctest::Approx(0.5).epsilon(1e-9));
    DenseState want(1);
    want.apply(c);
    REQUIRE(ps.state.fidelity(want) > 1 - 1e-9);
  }
}

TEST_CASE("T gadget in magic-input mode postselects to the T circuit") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::t(0));
  c.append(Gate::cx(0, 1));
  c.append(Gate::t(1));
  c.append(Gate::h(1));
  const GadgetizedTask g = gadgetize_t(c, GadgetMode::MagicInput);
  CHECK(g.task.num_qubits() == 4);
  CHECK(g.task.has_product_input());
  CHECK_FALSE(g.task.has_product_output());
  const PostselectedState ps = postselected_state(g.task, g.postselect_wires, g.postselect_values);
  CHECK(ps.probability == doctest::Approx(0.25).epsilon(1e-9));
  DenseState want(2);
  want.apply(c);
  CHECK(ps.state.fidelity(want) > 1 - 1e-9);
}

TEST_CASE("task_transpose preserves outcome probabilities") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 4);
    const Circuit b = random_unitary_clifford(n, 20, rng);
    const Bits x = random_bits(n, rng);
    const Task forward(BasisInput{x}, b, ProductOutput{random_unitaries(n, rng)});
    const auto dist = output_distribution(forward);
    for (std::size_t y = 0; y < dist.size(); ++y) {
      const auto [tp, out] = task_transpose(forward, index_bits(y, n));
      REQUIRE(out == x);
      REQUIRE(joint_probability(tp, out) == doctest::Approx(dist[y]).epsilon(1e-9));
    }
    const Task backward(ProductInput{random_unitaries(n, rng)}, b, BasisOutput{});
    const auto [tb, zero] = task_transpose(backward, x);
    REQUIRE(zero == Bits(n, 0));
    REQUIRE(joint_probability(tb, zero) == doctest::Approx(joint_probability(backward, x)).epsilon(1e-9));
  }
  Circuit m(1);
  m.append(Gate::measure(0, 0));
  CHECK_THROWS(task_transpose(Task(BasisInput{{0}}, m, ProductOutput{{SingleQubitUnitary::hadamard()}}), Bits{0}));
}

TEST_CASE("task JSON round trip") {
  const std::string text = R"({"n": 2,
    "input": {"kind": "product", "states": ["H", [[[1,0],[0,0]],[[0,0],[1,0]]]]},
    "circuit": "CX 0 1\nM 1 c0\nC c0 H 0\n",
    "output": {"kind": "product", "unitaries": ["S", "T"]}})";
  const Task t = parse_task(text);
  CHECK(t.num_qubits() == 2);
  CHECK(t.circuit().is_adaptive());
  CHECK(std::abs(t.output_unitary(1)(1, 1) - std::polar(1.0, std::numbers::pi / 4)) < 1e-12);
  const Task again = task_from_json(task_to_json(t));
  CHECK(again.circuit() == t.circuit());
  CHECK(std::abs(again.input_unitary(0)(0, 1) - t.input_unitary(0)(0, 1)) < 1e-12);

  const Task b = parse_task(R"({"n": 3, "input": {"kind": "bits", "bits": "101"}, "circuit": "", "output": {"kind": "bits"}})");
  CHECK(bits_to_string(std::get<BasisInput>(b.input()).bits) == "101");
  CHECK(std::get<BasisInput>(parse_task(R"({"n": 2, "input": {"kind": "bits"}, "circuit": "H 0", "output": {"kind": "bits"}})")
                                 .input())
            .bits == Bits{0, 0});

  CHECK_THROWS_AS(parse_task("{"), ParseError);
  CHECK_THROWS_AS(parse_task(R"({"n": 2, "input": {"kind": "bits", "bits": "1"}, "circuit": "", "output": {"kind": "bits"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_task(R"({"n": 1, "input": {"kind": "product", "states": [[[[1,0],[1,0]],[[0,0],[1,0]]]]}, "circuit": "", "output": {"kind": "bits"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_bits("01x"), ParseError);
}
