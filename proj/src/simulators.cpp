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

#include "extcliff/simulators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "extcliff/errors.hpp"

namespace extcliff {

namespace {

constexpr IngredientProfile kBitsNonadaptBits{InputKind::Bits, Adaptivity::NonAdapt, OutputKind::Bits};
constexpr IngredientProfile kBitsAdaptBits{InputKind::Bits, Adaptivity::Adapt, OutputKind::Bits};
constexpr IngredientProfile kProdNonadaptProd{InputKind::Prod, Adaptivity::NonAdapt, OutputKind::Prod};
constexpr IngredientProfile kBitsAdaptProd{InputKind::Bits, Adaptivity::Adapt, OutputKind::Prod};

IngredientProfile profile_of(const Task& task) {
  try {
    return classify_task(task);
  } catch (const std::invalid_argument& e) {
    throw ProfileError(e.what());
  }
}

void require_profile(const Task& task, const IngredientProfile& allowed, const char* who) {
  const IngredientProfile p = profile_of(task);
  if (!p.is_subset_of(allowed)) {
    throw ProfileError(std::string(who) + " needs a task in " + to_string(allowed) + ", got " +
                       to_string(p));
  }
}

void check_query(const Task& task, std::span<const std::size_t> wires,
                 std::span<const std::uint8_t> values) {
  if (wires.size() != values.size()) throw std::invalid_argument("wire and value counts differ");
  std::vector<bool> seen(task.num_qubits(), false);
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= task.num_qubits()) throw std::out_of_range("queried wire out of range");
    if (seen[wires[i]]) throw std::invalid_argument("wire queried twice");
    seen[wires[i]] = true;
    if (values[i] > 1) throw std::invalid_argument("outcome values must be 0 or 1");
  }
}

/// Input bit-string of a task whose input side classifies as BITS.
Bits basis_bits(const Task& task) {
  if (const auto* b = std::get_if<BasisInput>(&task.input())) return b->bits;
  return Bits(task.num_qubits(), 0);
}

/// Measurement-free copy of a nonadaptive circuit: Measure(q) becomes
/// CX(q, a) onto a fresh |0> wire a appended after the original wires.
std::pair<std::size_t, std::vector<Gate>> defer_measurements(const Circuit& c) {
  std::size_t width = c.num_qubits();
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (const Gate& g : c.gates()) {
    if (g.condition) throw ProfileError("deferred measurement needs a nonadaptive circuit");
    if (g.kind == GateKind::Measure) {
      gates.push_back(Gate::cx(g.wires[0], width++));
    } else {
      gates.push_back(g);
    }
  }
  return {width, std::move(gates)};
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int pauli_index(const PauliOperator& p, std::size_t q) {
  return p.x(q) ? (p.z(q) ? 2 : 1) : (p.z(q) ? 3 : 0);
}

/// Product-state expectations of conjugated Paulis, with deferred ancillas in |0>.
class ProductEvaluator {
 public:
  explicit ProductEvaluator(const Task& task) {
    auto [width, gates] = defer_measurements(task.circuit());
    width_ = width;
    gates_ = std::move(gates);
    bloch_.reserve(width_);
    for (std::size_t w = 0; w < task.num_qubits(); ++w) bloch_.push_back(bloch_expectations(task.input_unitary(w)));
    bloch_.resize(width_, {1.0, 0.0, 0.0, 1.0});
  }

  std::size_t width() const { return width_; }

  /// <alpha| B^dag p B |alpha> for a Pauli operator on the extended register.
  Complex expectation(const PauliOperator& p) const {
    const ConjugationResult r = conjugate_through_gates(p, gates_);
    double prod = 1.0;
    for (std::size_t q = 0; q < width_ && prod != 0.0; ++q) {
      const int idx = pauli_index(r.pauli, q);
      if (idx) prod *= bloch_[q][idx];
    }
    return r.gamma * prod;
  }

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::array<double, 4>> bloch_;
};

PauliOperator single_pauli(std::size_t width, std::size_t wire, int index) {
  static constexpr char kNames[4] = {'I', 'X', 'Y', 'Z'};
  return PauliOperator::single(width, wire, kNames[index]);
}

/// p0 - p1 on one wire, summed over the 16 sigma^i Z sigma^j terms.
double single_wire_bias(const ProductEvaluator& eval, const SingleQubitUnitary& u, std::size_t wire) {
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const PauliCoefficients a = decompose_single_qubit(u);
  Complex d{0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex coef = a.a[i] * std::conj(a.a[j]);
      if (std::abs(coef) < 1e-15) continue;
      const SinglePauliProduct iz = multiply_single_paulis(i, 3);
      const SinglePauliProduct izj = multiply_single_paulis(iz.pauli, j);
      const Complex phase = kPhases[(iz.phase_exp + izj.phase_exp) % 4];
      d += coef * phase * eval.expectation(single_pauli(eval.width(), wire, izj.pauli));
    }
  }
  return d.real();
}

struct AdaptiveRun {
  StabilizerTableau tableau;
  Bits cbits;
};

AdaptiveRun run_adaptive(const Task& task, std::mt19937_64& rng) {
  AdaptiveRun run{StabilizerTableau::init_basis(basis_bits(task)), Bits(task.circuit().num_cbits(), 0)};
  for (const Gate& g : task.circuit().gates()) {
    if (g.kind == GateKind::Measure) {
      run.cbits[g.cbit] = run.tableau.measure_z(g.wires[0], rng).outcome;
    } else if (!g.condition) {
      run.tableau.apply(g);
    } else if (run.cbits[*g.condition]) {
      Gate plain = g;
      plain.condition.reset();
      run.tableau.apply(plain);
    }
  }
  return run;
}

}  // namespace

double strong_nonadaptive_bits(const Task& task, std::span<const std::size_t> wires,
                               std::span<const std::uint8_t> values) {
  require_profile(task, kBitsNonadaptBits, "strong_nonadaptive_bits");
  check_query(task, wires, values);
  auto [width, gates] = defer_measurements(task.circuit());
  Bits init = basis_bits(task);
  init.resize(width, 0);
  StabilizerTableau t = StabilizerTableau::init_basis(init);
  for (const Gate& g : gates) t.apply(g);
  double p = 1.0;
  for (std::size_t i = 0; i < wires.size() && p > 0.0; ++i) p *= t.measure_z_forced(wires[i], values[i]);
  return p;
}

namespace {

Bits sample_all_bits(const Task& task, std::mt19937_64& rng) {
  AdaptiveRun run = run_adaptive(task, rng);
  Bits out(task.num_qubits());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = run.tableau.measure_z(w, rng).outcome;
  return out;
}

std::uint8_t sample_one_outprod(const Task& task, std::size_t wire, const std::array<double, 4>& c,
                                std::mt19937_64& rng) {
  const AdaptiveRun run = run_adaptive(task, rng);
  double e = c[0];
  for (int p = 1; p < 4; ++p) {
    if (c[p] != 0.0) e += c[p] * run.tableau.pauli_expectation(single_pauli(task.num_qubits(), wire, p));
  }
  const double p0 = std::clamp((1.0 + e) / 2.0, 0.0, 1.0);
  return uniform01(rng) < p0 ? 0 : 1;
}

}  // namespace

Bits weak_adaptive_bits(const Task& task, std::mt19937_64& rng) {
  require_profile(task, kBitsAdaptBits, "weak_adaptive_bits");
  return sample_all_bits(task, rng);
}

std::vector<Bits> weak_adaptive_bits(const Task& task, std::size_t shots, std::mt19937_64& rng) {
  require_profile(task, kBitsAdaptBits, "weak_adaptive_bits");
  std::vector<Bits> out;
  out.reserve(shots);
  for (std::size_t k = 0; k < shots; ++k) out.push_back(sample_all_bits(task, rng));
  return out;
}

std::array<double, 2> str_1_product_pair(const Task& task, std::size_t wire) {
  require_profile(task, kProdNonadaptProd, "str_b_product");
  if (wire >= task.num_qubits()) throw std::out_of_range("queried wire out of range");
  const ProductEvaluator eval(task);
  const double d = std::clamp(single_wire_bias(eval, task.output_unitary(wire), wire), -1.0, 1.0);
  // Larger side first so that the complement is exact.
  const double big = (1.0 + std::abs(d)) / 2.0;
  const double small = 1.0 - big;
  return d >= 0 ? std::array<double, 2>{big, small} : std::array<double, 2>{small, big};
}

double str_b_product(const Task& task, std::span<const std::size_t> wires,
                     std::span<const std::uint8_t> values, std::size_t b_max) {
  require_profile(task, kProdNonadaptProd, "str_b_product");
  check_query(task, wires, values);
  const std::size_t m = wires.size();
  if (m == 0) return 1.0;
  if (m > b_max) {
    throw std::invalid_argument("str_b_product handles at most " + std::to_string(b_max) +
                                " wires, got " + std::to_string(m));
  }
  if (m == 1) return str_1_product_pair(task, wires[0])[values[0]];

  const ProductEvaluator eval(task);
  std::vector<std::array<double, 4>> coeffs(m);
  for (std::size_t k = 0; k < m; ++k) {
    coeffs[k] = rotated_z_expansion(task.output_unitary(wires[k]));
    coeffs[k][0] = 1.0;  // the identity half of the projector
    if (values[k]) {
      for (int p = 1; p < 4; ++p) coeffs[k][p] = -coeffs[k][p];
    }
  }
  double total = 0.0;
  std::vector<int> choice(m, 0);
  const std::size_t terms = std::size_t{1} << (2 * m);
  for (std::size_t code = 0; code < terms; ++code) {
    double coef = 1.0;
    PauliOperator p(eval.width());
    for (std::size_t k = 0; k < m; ++k) {
      choice[k] = static_cast<int>((code >> (2 * k)) & 3u);
      coef *= coeffs[k][choice[k]];
      if (choice[k]) p *= single_pauli(eval.width(), wires[k], choice[k]);
    }
    if (std::abs(coef) < 1e-15) continue;
    total += coef * eval.expectation(p).real();
  }
  return std::clamp(total / static_cast<double>(std::size_t{1} << m), 0.0, 1.0);
}

std::uint8_t weak1_adaptive_outprod(const Task& task, std::size_t wire, std::mt19937_64& rng) {
  require_profile(task, kBitsAdaptProd, "weak1_adaptive_outprod");
  if (wire >= task.num_qubits()) throw std::out_of_range("sampled wire out of range");
  return sample_one_outprod(task, wire, rotated_z_expansion(task.output_unitary(wire)), rng);
}

std::size_t weak1_adaptive_outprod_ones(const Task& task, std::size_t wire, std::size_t shots,
                                        std::mt19937_64& rng) {
  require_profile(task, kBitsAdaptProd, "weak1_adaptive_outprod");
  if (wire >= task.num_qubits()) throw std::out_of_range("sampled wire out of range");
  const std::array<double, 4> c = rotated_z_expansion(task.output_unitary(wire));
  std::size_t ones = 0;
  for (std::size_t k = 0; k < shots; ++k) ones += sample_one_outprod(task, wire, c, rng);
  return ones;
}

Bits oracle_sample(const Task& task, std::span<const std::size_t> wires, std::mt19937_64& rng,
                   const OracleLimits& limits) {
  std::vector<std::size_t> prefix;
  Bits values;
  double log_prefix = 0.0;
  for (std::size_t w : wires) {
    prefix.push_back(w);
    values.push_back(0);
    const double log_zero = log2_marginal_probability(task, prefix, values, limits);
    const double p0 = std::isinf(log_zero) ? 0.0 : std::exp2(log_zero - log_prefix);
    if (uniform01(rng) < p0) {
      log_prefix = log_zero;
    } else {
      values.back() = 1;
      log_prefix = log2_marginal_probability(task, prefix, values, limits);
    }
  }
  return values;
}

SimResult dispatch(const Task& task, const SimQuery& query, const DispatchOptions& options) {
  const IngredientProfile profile = profile_of(task);
  const std::size_t n = task.num_qubits();
  std::vector<std::size_t> wires = query.wires;
  if (wires.empty()) {
    for (std::size_t w = 0; w < n; ++w) wires.push_back(w);
  }
  const SimNotion notion = query.notion;
  if ((notion == SimNotion::Str1 || notion == SimNotion::Weak1) && wires.size() != 1) {
    throw std::invalid_argument(std::string(to_string(notion)) + " takes exactly one wire");
  }
  if (notion == SimNotion::StrN && wires.size() != n) {
    throw std::invalid_argument("STR(n) takes all n wires");
  }
  const bool strong = is_strong(notion);
  if (strong) {
    check_query(task, wires, query.values);
  } else {
    check_query(task, wires, Bits(wires.size(), 0));
  }

  const TableEntry entry = lookup(profile, notion);
  std::mt19937_64 rng(query.seed);
  if (entry.label != ComplexityLabel::P) {
    if (!options.force_oracle) return HardnessRefusal{profile, notion, entry.label, entry.provenance};
    if (strong) {
      return ProbabilityResult{marginal_probability(task, wires, query.values, options.limits), "oracle"};
    }
    return SampleResult{wires, oracle_sample(task, wires, rng, options.limits), "oracle"};
  }

  const bool nonadapt = profile.adaptivity == Adaptivity::NonAdapt;
  auto exact = [&](std::span<const std::size_t> ws, std::span<const std::uint8_t> ys) {
    if (profile == kBitsNonadaptBits) return ProbabilityResult{strong_nonadaptive_bits(task, ws, ys), "tableau-strong"};
    if (nonadapt) return ProbabilityResult{str_b_product(task, ws, ys, options.b_max), "str-b-product"};
    throw std::logic_error("no strong algorithm for " + to_string(profile));
  };
  if (strong) return exact(wires, query.values);

  if (notion == SimNotion::Weak1 && nonadapt) {
    const std::uint8_t zero = 0;
    const ProbabilityResult p0 = exact(wires, std::span<const std::uint8_t>(&zero, 1));
    const std::uint8_t bit = uniform01(rng) < p0.probability ? 0 : 1;
    return SampleResult{wires, {bit}, p0.algorithm + "+coin"};
  }
  if (profile.output == OutputKind::Bits) {
    const Bits all = weak_adaptive_bits(task, rng);
    Bits picked;
    for (std::size_t w : wires) picked.push_back(all[w]);
    return SampleResult{wires, picked, "tableau-weak"};
  }
  if (notion == SimNotion::Weak1) {
    return SampleResult{wires, {weak1_adaptive_outprod(task, wires[0], rng)}, "weak1-outprod"};
  }
  throw std::logic_error("no weak algorithm for " + to_string(profile) + " x " + to_string(notion));
}

}  // namespace extcliff
