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

#include <cmath>

#include "extcliff/cnf.hpp"
#include "extcliff/errors.hpp"
#include "extcliff/statevec.hpp"
#include "support/random_tasks.hpp"

using namespace extcliff;
using namespace extcliff::testing;

namespace {

CnfFormula formula(std::size_t n, std::vector<std::vector<Literal>> clauses) {
  return CnfFormula{n, std::move(clauses)};
}

/// Runs C_f on every input with target and ancillas at 1.
void check_toffoli_truth_table(const CnfFormula& f) {
  const CompiledFormula cf = compile_to_toffoli(f);
  const auto& L = cf.layout;
  for (std::uint64_t x = 0; x < (1ull << f.num_vars); ++x) {
    Bits in(L.width, 1);
    for (std::size_t i = 0; i < f.num_vars; ++i) in[i] = (x >> i) & 1u;
    const Bits out = run_classical(cf.circuit, in);
    Bits want = in;
    want[L.target] = f.evaluate(x) ? 1 : 0;
    REQUIRE(out == want);
  }
}

}  // namespace

TEST_CASE("parse_dimacs basic clause and padding") {
  const CnfFormula f = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::vector<Literal>{1, 2, 3});

  const CnfFormula g = parse_dimacs("c unit clause\np cnf 1 1\n1 0\n");
  CHECK(g.clauses[0] == std::vector<Literal>{1, 1, 1});

  const CnfFormula h = parse_dimacs("p cnf 2 1\n-1 2 0\n");
  CHECK(h.clauses[0] == std::vector<Literal>{-1, 2, 2});
}

TEST_CASE("parse_dimacs errors") {
  CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), ParseError);  // x3 missing
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);  // clause count
  DimacsOptions pad;
  pad.auto_pad = true;
  const CnfFormula f = parse_dimacs("p cnf 3 1\n1 2 0\n", pad);
  CHECK(f.clauses.size() == 2);
  CHECK(count_sat(f) == 2 * 3);  // x3 is free
}

TEST_CASE("count_sat and abs_sat examples") {
  const CnfFormula f = formula(3, {{1, 2, 3}});
  CHECK(count_sat(f) == 7);
  CHECK(abs_sat(f) == 6);
  const CnfFormula g = formula(1, {{1, 1, 1}});
  CHECK(count_sat(g) == 1);
  CHECK(abs_sat(g) == 0);
  const CnfFormula contradiction = formula(1, {{1, 1, 1}, {-1, -1, -1}});
  CHECK(count_sat(contradiction) == 0);
  CHECK(abs_sat(contradiction) == 2);
}

TEST_CASE("truth_table agrees with evaluate") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 9);
    const CnfFormula f = random_formula(n, (n + 2) / 3 + uniform_index(rng, 3), rng);
    const auto table = truth_table(f);
    for (std::uint64_t a = 0; a < (1ull << n); ++a) {
      REQUIRE(((table[a / 64] >> (a % 64)) & 1u) == (f.evaluate(a) ? 1u : 0u));
    }
  }
}

TEST_CASE("reduce_count_to_abssat doubles the count") {
  const CnfFormula phi = formula(1, {{1, 1, 1}});
  const CnfFormula tilde = reduce_count_to_abssat(phi);
  CHECK(tilde.num_vars == 2);
  CHECK(tilde.clauses[0].size() == 4);
  CHECK(count_sat(tilde) == 3);
  CHECK(abs_sat(tilde) == 2);

  const CnfFormula unsat = formula(1, {{1, 1, 1}, {-1, -1, -1}});
  CHECK(abs_sat(reduce_count_to_abssat(unsat)) == 0);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 10);
    const CnfFormula f = random_formula(n, (n + 2) / 3 + uniform_index(rng, 4), rng);
    CHECK(abs_sat(reduce_count_to_abssat(f)) == 2 * count_sat(f));
  }
}

TEST_CASE("C_f truth tables restore the ancillas") {
  check_toffoli_truth_table(formula(3, {{1, 2, 3}}));
  check_toffoli_truth_table(formula(2, {{1, 1, 2}}));
  check_toffoli_truth_table(formula(2, {{-1, -1, -2}, {1, 2, -2}}));
  check_toffoli_truth_table(reduce_count_to_abssat(formula(3, {{1, -2, 3}, {-1, 2, 2}})));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 8);
    check_toffoli_truth_table(random_formula(n, (n + 2) / 3 + uniform_index(rng, 3), rng));
  }
}

TEST_CASE("C_f layout has 6N+2 wires for width-3 clauses") {
  const CnfFormula f = formula(3, {{1, 2, 3}, {-1, 2, -3}});
  const CompiledFormula cf = compile_to_toffoli(f);
  CHECK(cf.layout.width == 6 * 2 + 2);
  CHECK(cf.layout.target == 3);
  CHECK(cf.layout.s() == cf.layout.width - 4);
  CHECK(cf.circuit.count(GateKind::TOF) == cf.circuit.size());
}

TEST_CASE("Q_f maps |x,0,0> to |x,f(x),0> on the dense oracle") {
  const CnfFormula f = formula(2, {{1, 1, 2}});
  const CompiledFormula q = compile_to_clifford_t(f);
  CHECK(q.circuit.count(GateKind::TOF) == 0);
  CHECK(q.layout.t_count == 7 * q.layout.toffoli_count);
  for (std::uint64_t x = 0; x < 4; ++x) {
    Bits in(q.layout.width, 0);
    for (std::size_t i = 0; i < 2; ++i) in[i] = (x >> i) & 1u;
    Task t(BasisInput{in}, q.circuit, BasisOutput{});
    Bits want = in;
    want[q.layout.target] = f.evaluate(x) ? 1 : 0;
    CHECK(joint_probability(t, want) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("G_f probability equals #f / 2^n") {
  const CnfFormula f = formula(3, {{1, 2, 3}});
  const ReductionTask g = build_gf_task(f);
  CHECK(g.task.circuit().is_adaptive());
  CHECK(g.task.circuit().is_clifford());
  const Bits y = gf_accepting_outcome(g.layout);
  const double p = joint_probability(g.task, y);
  CHECK(p == doctest::Approx(7.0 / 8.0).epsilon(1e-12));
  CHECK(extract_count(p, 3).rounded == 7);

  const CnfFormula unsat = formula(1, {{1, 1, 1}, {-1, -1, -1}});
  const ReductionTask u = build_gf_task(unsat);
  CHECK(joint_probability(u.task, gf_accepting_outcome(u.layout)) == doctest::Approx(0.0));
}

TEST_CASE("G_f branches: one record per input assignment") {
  const CnfFormula f = formula(3, {{1, 2, 3}});
  const ReductionTask g = build_gf_task(f);
  OracleLimits limits;
  limits.width_limit = 22;
  const auto branches = run_branches(g.task, limits);
  CHECK(branches.size() == 8);
  for (const auto& b : branches) {
    CHECK(b.probability == doctest::Approx(1.0 / 8.0));
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < 3; ++i) z |= std::uint64_t{b.cbits[i]} << i;
    std::size_t expect_index = f.evaluate(z) ? (std::size_t{1} << g.layout.target) : 0;
    CHECK(std::norm(b.state.amplitude(expect_index)) == doctest::Approx(1.0));
  }
}

TEST_CASE("M_f layout, magic marginal and extraction") {
  const CnfFormula f = formula(2, {{1, 1, 2}});
  const ReductionTask m = build_mf_task(f);
  const auto& L = m.layout;
  CHECK(L.K() == 7 * L.toffoli_count);
  CHECK(L.width == 2 + 1 + L.s() + L.K());
  CHECK(m.task.has_product_input());
  CHECK_FALSE(m.task.circuit().has_measurements());
  CHECK(classify_task(m.task) == IngredientProfile{InputKind::Prod, Adaptivity::NonAdapt, OutputKind::Bits});

  const Bits zeros(L.width, 0);
  const double lp = log2_marginal_probability(m.task, L.magic_wires, Bits(L.K(), 0));
  CHECK(lp == doctest::Approx(-static_cast<double>(L.K())).epsilon(1e-9));

  std::vector<std::size_t> all(L.width);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const double log_joint = log2_marginal_probability(m.task, all, zeros);
  const Extraction e = extract_abssat_log2(log_joint, 2, L.K());
  CHECK(std::abs(e.value - static_cast<double>(abs_sat(f))) < 1e-4);
  CHECK(e.rounded == abs_sat(f));
}

TEST_CASE("extraction arithmetic") {
  CHECK(extract_abssat(0.0, 3, 5).rounded == 0);
  CHECK(extract_abssat(std::exp2(-2.0 * 3 - 4), 3, 4).value == doctest::Approx(1.0));
  CHECK(extract_count(0.0, 4).rounded == 0);
  CHECK(extract_count(1.0, 4).rounded == 16);
  CHECK(extract_count(0.5 + 1e-3, 1).flagged);
}

TEST_CASE("layout JSON names every role") {
  const CompiledFormula cf = compile_to_toffoli(formula(3, {{1, 2, 3}}));
  const auto j = layout_to_json(cf.layout);
  CHECK(j["target"] == 3);
  CHECK(j["input_wires"].size() == 3);
  CHECK(j["s"] == cf.layout.s());
}
