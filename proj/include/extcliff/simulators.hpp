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
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "extcliff/circuit.hpp"
#include "extcliff/classify.hpp"
#include "extcliff/statevec.hpp"
#include "extcliff/tableau.hpp"

namespace extcliff {

/// Largest |I| accepted by str_b_product unless overridden.
inline constexpr std::size_t kDefaultBMax = 3;

/// Exact Pr(y_I) for a task in (BITS, NONADAPT, BITS) or any sub-profile.
/// Intermediate measurements are deferred onto fresh tableau wires, then the
/// queried wires are projected one after another, each contributing 1, 1/2 or 0.
/// Throws ProfileError for other profiles.
double strong_nonadaptive_bits(const Task& task, std::span<const std::size_t> wires,
                               std::span<const std::uint8_t> values);

/// One sample of all n output bits for a task in (BITS, ADAPT, BITS), with
/// classical controls resolved from the sampled measurement record.
Bits weak_adaptive_bits(const Task& task, std::mt19937_64& rng);
/// `shots` independent samples; the profile is checked once.
std::vector<Bits> weak_adaptive_bits(const Task& task, std::size_t shots, std::mt19937_64& rng);

/// Exact Pr(y_I) for a task in (PROD, NONADAPT, PROD) with |I| <= b_max.
///
/// |I| = 1 sums a_i conj(a_j) <alpha| B^dag (sigma^i Z sigma^j) B |alpha> over
/// the 16 Pauli pairs of U = sum a_i sigma^i. Larger I expand each readout
/// projector (I + (-1)^y U Z U^dag) / 2 into at most 4 Pauli terms. Each term
/// is conjugated through B and evaluated on the product input state.
/// Intermediate measurements are deferred onto fresh |0> wires.
double str_b_product(const Task& task, std::span<const std::size_t> wires,
                     std::span<const std::uint8_t> values, std::size_t b_max = kDefaultBMax);

/// Both single-wire probabilities; p[0] + p[1] == 1 holds exactly.
std::array<double, 2> str_1_product_pair(const Task& task, std::size_t wire);

/// One sample of output wire `wire` for a task in (BITS, ADAPT, PROD). The
/// circuit is run on a tableau, then <U Z U^dag> is read off the final state.
std::uint8_t weak1_adaptive_outprod(const Task& task, std::size_t wire, std::mt19937_64& rng);
/// Number of ones among `shots` samples of weak1_adaptive_outprod.
std::size_t weak1_adaptive_outprod_ones(const Task& task, std::size_t wire, std::size_t shots,
                                        std::mt19937_64& rng);

/// Samples `wires` from the dense oracle, one conditional marginal per wire.
Bits oracle_sample(const Task& task, std::span<const std::size_t> wires, std::mt19937_64& rng,
                   const OracleLimits& limits = {});

struct SimQuery {
  SimNotion notion = SimNotion::Str;
  /// Empty means all wires.
  std::vector<std::size_t> wires;
  /// Required for strong notions, ignored for weak ones.
  Bits values;
  std::uint64_t seed = 0;
};

struct ProbabilityResult {
  double probability = 0.0;
  std::string algorithm;
};

struct SampleResult {
  std::vector<std::size_t> wires;
  Bits values;
  std::string algorithm;
};

/// Returned instead of an answer when the cell is not efficiently simulable.
struct HardnessRefusal {
  IngredientProfile profile;
  SimNotion notion = SimNotion::Str;
  ComplexityLabel label = ComplexityLabel::SharpP;
  std::string provenance;
};

using SimResult = std::variant<ProbabilityResult, SampleResult, HardnessRefusal>;

struct DispatchOptions {
  bool force_oracle = false;
  OracleLimits limits;
  std::size_t b_max = kDefaultBMax;
};

/// Routes a query to the algorithm for its table cell, or refuses with the
/// cell's label. With `force_oracle`, hard cells are answered by the dense
/// oracle (WidthLimitExceeded if the task is too wide).
///
/// Throws std::invalid_argument for malformed queries (wire count not
/// matching the notion, missing values for strong notions).
SimResult dispatch(const Task& task, const SimQuery& query, const DispatchOptions& options = {});

}  // namespace extcliff
