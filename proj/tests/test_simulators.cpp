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
#include <random>

#include "extcliff/errors.hpp"
#include "extcliff/simulators.hpp"
#include "extcliff/statevec.hpp"
#include "support/random_tasks.hpp"

using namespace extcliff;
using namespace extcliff::testing;

namespace {

std::vector<std::size_t> random_wires(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

}  // namespace

TEST_CASE("strong_nonadaptive_bits matches the oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 6);
    const Circuit c = random_clifford(n, 20, uniform_index(rng, 4), false, rng);
    const Task t(BasisInput{random_bits(n, rng)}, c, BasisOutput{});
    const auto wires = random_wires(n, 1 + uniform_index(rng, n), rng);
    const Bits y = random_bits(wires.size(), rng);
    REQUIRE(strong_nonadaptive_bits(t, wires, y) == doctest::Approx(marginal_probability(t, wires, y)).epsilon(1e-9));
  }
  Circuit a(2);
  a.append(Gate::measure(0, 0));
  a.append(Gate::controlled(0, Gate::x(1)));
  const std::vector<std::size_t> w{0};
  CHECK_THROWS_AS(strong_nonadaptive_bits(Task(BasisInput{{0, 0}}, a, BasisOutput{}), w, Bits{0}), ProfileError);
}

TEST_CASE("str_b_product matches the oracle") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 5);
    const Circuit c = random_clifford(n, 20, uniform_index(rng, 3), false, rng);
    const Task t(ProductInput{random_unitaries(n, rng)}, c, ProductOutput{random_unitaries(n, rng)});
    const auto wires = random_wires(n, 1 + uniform_index(rng, std::min<std::size_t>(n, 3)), rng);
    const Bits y = random_bits(wires.size(), rng);
    REQUIRE(str_b_product(t, wires, y) == doctest::Approx(marginal_probability(t, wires, y)).epsilon(1e-9));
    const auto pair = str_1_product_pair(t, wires[0]);
    REQUIRE(pair[0] + pair[1] == 1.0);
  }
  Circuit c(4);
  const Task t(BasisInput{Bits(4, 0)}, c, BasisOutput{});
  CHECK_THROWS(str_b_product(t, std::vector<std::size_t>{0, 1, 2, 3}, Bits(4, 0)));
}

TEST_CASE("weak_adaptive_bits reproduces a teleportation-style correction") {
  // Bell pair, measure wire 0, correct wire 1: both outputs agree always.
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  c.append(Gate::measure(0, 0));
  c.append(Gate::controlled(0, Gate::x(1)));
  const Task t(BasisInput{{0, 0}}, c, BasisOutput{});
  std::mt19937_64 rng(5);
  int ones = 0;
  for (int k = 0; k < 1000; ++k) {
    const Bits y = weak_adaptive_bits(t, rng);
    REQUIRE(y[1] == 0);
    ones += y[0];
  }
  CHECK(ones > 430);
  CHECK(ones < 570);
}

TEST_CASE("weak_adaptive_bits frequencies track the oracle") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 3);
    const Circuit c = random_clifford(n, 15, 2, true, rng);
    const Task t(BasisInput{random_bits(n, rng)}, c, BasisOutput{});
    const auto dist = output_distribution(t);
    std::vector<int> counts(dist.size());
    const int samples = 4000;
    for (int k = 0; k < samples; ++k) {
      const Bits y = weak_adaptive_bits(t, rng);
      std::size_t idx = 0;
      for (std::size_t q = 0; q < n; ++q) idx |= std::size_t{y[q]} << q;
      ++counts[idx];
    }
    for (std::size_t i = 0; i < dist.size(); ++i) {
      const double sigma = std::sqrt(std::max(0.0, samples * dist[i] * (1 - dist[i])));
      REQUIRE(std::abs(counts[i] - samples * dist[i]) <= 5 * sigma + 1e-9);
    }
  }
}

TEST_CASE("weak1_adaptive_outprod frequencies track the oracle") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 3);
    const Circuit c = random_clifford(n, 15, 2, true, rng);
    const Task t(BasisInput{random_bits(n, rng)}, c, ProductOutput{random_unitaries(n, rng)});
    const std::size_t w = uniform_index(rng, n);
    const double p1 = marginal_probability(t, std::vector<std::size_t>{w}, Bits{1});
    const int samples = 4000;
    int ones = 0;
    for (int k = 0; k < samples; ++k) ones += weak1_adaptive_outprod(t, w, rng);
    const double sigma = std::sqrt(std::max(0.0, samples * p1 * (1 - p1)));
    REQUIRE(std::abs(ones - samples * p1) <= 5 * sigma + 1e-9);
  }
}

TEST_CASE("dispatch routes P cells and refuses hard ones") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  const Task bits(BasisInput{{0, 0}}, c, BasisOutput{});

  SimQuery strong;
  strong.notion = SimNotion::Str;
  strong.values = {0, 0};
  const auto r = dispatch(bits, strong);
  REQUIRE(std::holds_alternative<ProbabilityResult>(r));
  CHECK(std::get<ProbabilityResult>(r).probability == doctest::Approx(0.5));
  CHECK(std::get<ProbabilityResult>(r).algorithm == "tableau-strong");

  const std::vector<SingleQubitUnitary> hs{SingleQubitUnitary::hadamard(), SingleQubitUnitary::identity()};
  const Task prod_in(ProductInput{hs}, c, BasisOutput{});
  SimQuery joint;
  joint.notion = SimNotion::StrN;
  joint.values = {0, 0};
  const auto refusal = dispatch(prod_in, joint);
  REQUIRE(std::holds_alternative<HardnessRefusal>(refusal));
  CHECK(std::get<HardnessRefusal>(refusal).label == ComplexityLabel::SharpP);
  CHECK(std::get<HardnessRefusal>(refusal).provenance == "Thm 1");

  DispatchOptions forced;
  forced.force_oracle = true;
  const auto oracle = dispatch(prod_in, joint, forced);
  REQUIRE(std::holds_alternative<ProbabilityResult>(oracle));
  CHECK(std::get<ProbabilityResult>(oracle).algorithm == "oracle");
  CHECK(std::get<ProbabilityResult>(oracle).probability ==
        doctest::Approx(joint_probability(prod_in, Bits{0, 0})).epsilon(1e-12));

  SimQuery weak;
  weak.notion = SimNotion::WeakN;
  weak.seed = 9;
  const auto s = dispatch(bits, weak);
  REQUIRE(std::holds_alternative<SampleResult>(s));
  CHECK(std::get<SampleResult>(s).values[0] == std::get<SampleResult>(s).values[1]);
  const auto s2 = dispatch(bits, weak);
  CHECK(std::get<SampleResult>(s2).values == std::get<SampleResult>(s).values);

  SimQuery bad;
  bad.notion = SimNotion::Str1;
  bad.wires = {0, 1};
  bad.values = {0, 0};
  CHECK_THROWS_AS(dispatch(bits, bad), std::invalid_argument);
}

TEST_CASE("oracle_sample draws from the joint distribution") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  c.append(Gate::t(1));
  const Task t(BasisInput{{0, 0}}, c, BasisOutput{});
  std::mt19937_64 rng(1);
  const std::vector<std::size_t> w{0, 1};
  for (int k = 0; k < 100; ++k) {
    const Bits y = oracle_sample(t, w, rng);
    REQUIRE(y[0] == y[1]);
  }
}

TEST_CASE("batched samplers match repeated single draws") {
  std::mt19937_64 gen(505);
  const Circuit c = random_clifford(4, 20, 3, true, gen);
  const Task bits(BasisInput{random_bits(4, gen)}, c, BasisOutput{});
  std::mt19937_64 a(8), b(8);
  const auto batch = weak_adaptive_bits(bits, 50, a);
  for (const Bits& y : batch) REQUIRE(y == weak_adaptive_bits(bits, b));

  const Task prod(BasisInput{random_bits(4, gen)}, c, ProductOutput{random_unitaries(4, gen)});
  std::mt19937_64 p(9), q(9);
  std::size_t ones = 0;
  for (int k = 0; k < 50; ++k) ones += weak1_adaptive_outprod(prod, 2, q);
  CHECK(weak1_adaptive_outprod_ones(prod, 2, 50, p) == ones);
}
