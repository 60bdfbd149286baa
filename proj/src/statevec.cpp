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

#include "extcliff/statevec.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "extcliff/errors.hpp"

namespace extcliff {

namespace {

constexpr double kDeadProjection = 1e-30;
/// A live wire whose minority outcome has less weight than this returns to
/// classical tracking. Roundoff residues are near 1e-32.
constexpr double kDemoteThreshold = 1e-24;
constexpr std::size_t kMaxUnitaryWidth = 12;

double log_sum_exp2(const std::vector<double>& logs) {
  double top = -std::numeric_limits<double>::infinity();
  for (double l : logs) top = std::max(top, l);
  if (std::isinf(top)) return top;
  double acc = 0.0;
  for (double l : logs) acc += std::exp2(l - top);
  return top + std::log2(acc);
}

}  // namespace

DenseState::DenseState(std::size_t num_qubits) : n_(num_qubits) {
  if (num_qubits >= 8 * sizeof(std::size_t) - 4) throw std::invalid_argument("dense state too wide");
  amps_.assign(std::size_t{1} << n_, Complex{0, 0});
  amps_[0] = 1.0;
}

DenseState DenseState::from_product(std::span<const SingleQubitUnitary> states) {
  DenseState s(0);
  for (const SingleQubitUnitary& v : states) s.add_qubit(v.column(0));
  return s;
}

DenseState DenseState::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("amplitude count must be a power of two");
  }
  DenseState s(0);
  s.n_ = static_cast<std::size_t>(std::countr_zero(size));
  s.amps_ = std::move(amplitudes);
  return s;
}

void DenseState::apply_matrix(std::size_t q, const Matrix2& m) {
  if (q >= n_) throw std::out_of_range("dense wire out of range");
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = amps_[i], a1 = amps_[i | bit];
    amps_[i] = m[0][0] * a0 + m[0][1] * a1;
    amps_[i | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

void DenseState::apply(const Gate& gate) {
  if (gate.condition || gate.kind == GateKind::Measure) {
    throw std::invalid_argument("DenseState::apply takes unitary, unconditioned gates");
  }
  for (std::size_t q : gate.qubits()) {
    if (q >= n_) throw std::out_of_range("dense wire out of range");
  }
  const std::size_t a = std::size_t{1} << gate.wires[0];
  switch (gate.kind) {
    case GateKind::H:
      apply_matrix(gate.wires[0], SingleQubitUnitary::hadamard().matrix());
      break;
    case GateKind::S:
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & a) amps_[i] *= Complex{0, 1};
      break;
    case GateKind::T: {
      const Complex w = std::polar(1.0, std::numbers::pi / 4);
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & a) amps_[i] *= w;
      break;
    }
    case GateKind::X:
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if (!(i & a)) std::swap(amps_[i], amps_[i | a]);
      break;
    case GateKind::CX: {
      const std::size_t b = std::size_t{1} << gate.wires[1];
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & a) && !(i & b)) std::swap(amps_[i], amps_[i | b]);
      break;
    }
    case GateKind::TOF: {
      const std::size_t b = std::size_t{1} << gate.wires[1];
      const std::size_t c = std::size_t{1} << gate.wires[2];
      for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & a) && (i & b) && !(i & c)) std::swap(amps_[i], amps_[i | c]);
      break;
    }
    case GateKind::Measure:
      break;
  }
}

void DenseState::apply(const Circuit& circuit) {
  if (circuit.num_qubits() != n_) throw std::invalid_argument("circuit width differs from state");
  for (const Gate& g : circuit.gates()) apply(g);
}

double DenseState::probability_one(std::size_t q) const {
  if (q >= n_) throw std::out_of_range("dense wire out of range");
  const std::size_t bit = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & bit) p += std::norm(amps_[i]);
  return p;
}

double DenseState::project(std::size_t q, std::uint8_t b) {
  const double p1 = probability_one(q);
  const double p = b ? p1 : std::max(0.0, norm_squared() - p1);
  if (p < kDeadProjection) return p;
  const std::size_t bit = std::size_t{1} << q;
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (((i & bit) != 0) == (b != 0)) {
      amps_[i] *= scale;
    } else {
      amps_[i] = 0.0;
    }
  }
  return p;
}

void DenseState::remove_qubit(std::size_t q, std::uint8_t b) {
  if (q >= n_) throw std::out_of_range("dense wire out of range");
  const std::size_t low = (std::size_t{1} << q) - 1;
  std::vector<Complex> out(amps_.size() / 2);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t idx = ((k & ~low) << 1) | (std::size_t{b} << q) | (k & low);
    out[k] = amps_[idx];
  }
  amps_ = std::move(out);
  --n_;
}

void DenseState::add_qubit(const std::array<Complex, 2>& v) {
  const std::size_t half = amps_.size();
  amps_.resize(2 * half);
  for (std::size_t k = 0; k < half; ++k) {
    amps_[k + half] = amps_[k] * v[1];
    amps_[k] *= v[0];
  }
  ++n_;
}

double DenseState::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

Complex DenseState::inner(const DenseState& other) const {
  if (other.n_ != n_) throw std::invalid_argument("inner product of different widths");
  Complex s{0, 0};
  for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

double DenseState::fidelity(const DenseState& other) const { return std::norm(inner(other)); }

namespace {

enum class WireStatus : std::uint8_t { Fresh, Live, Known, Done };

struct Branch {
  DenseState psi{0};
  std::vector<std::size_t> slot;
  std::vector<std::size_t> wire_at;
  std::vector<WireStatus> status;
  Bits known;
  Bits cbits;
  Bits record;
  double log2w = 0.0;
};

/// Depth-first walk over measurement records. In lazy mode wires in a basis
/// state are tracked classically and X, CX and TOF act on them as bit flips;
/// S and T on such a wire only add a global phase. A wire enters the dense
/// register when a gate needs it there and leaves once it is back in a basis
/// state, once measured, or once its readout is fixed and no later gate
/// touches it. `fixed[w]` is -1 or the readout of w.
class BranchEngine {
 public:
  using LeafFn = std::function<void(Branch&)>;

  BranchEngine(const Task& task, const OracleLimits& limits, bool lazy, std::vector<int> fixed)
      : task_(task), limits_(limits), lazy_(lazy), fixed_(std::move(fixed)) {
    const std::size_t n = task.num_qubits();
    last_use_.assign(n, kNever);
    const auto& gates = task.circuit().gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
      for (std::size_t q : gates[g].qubits()) last_use_[q] = g;
    }
    retire_after_.resize(gates.size());
    for (std::size_t w = 0; w < n; ++w) {
      if (last_use_[w] != kNever) retire_after_[last_use_[w]].push_back(w);
    }
  }

  void run(const LeafFn& on_leaf) {
    const std::size_t n = task_.num_qubits();
    Branch root;
    root.slot.assign(n, 0);
    root.status.assign(n, WireStatus::Fresh);
    root.known.assign(n, 0);
    root.cbits.assign(task_.circuit().num_cbits(), 0);
    if (lazy_) {
      for (std::size_t w = 0; w < n; ++w) {
        const auto v = task_.input_unitary(w).column(0);
        for (std::uint8_t bit = 0; bit < 2; ++bit) {
          if (std::norm(v[1 - bit]) < kDemoteThreshold) {
            root.status[w] = WireStatus::Known;
            root.known[w] = bit;
          }
        }
      }
    } else {
      if (n > limits_.width_limit) {
        throw WidthLimitExceeded("task needs " + std::to_string(n) + " dense qubits, limit is " +
                                 std::to_string(limits_.width_limit));
      }
      for (std::size_t w = 0; w < n; ++w) make_live(root, w);
    }
    walk(std::move(root), 0, on_leaf);
  }

 private:
  static constexpr std::size_t kNever = static_cast<std::size_t>(-1);

  void make_live(Branch& b, std::size_t w) {
    if (b.status[w] == WireStatus::Live) return;
    if (b.status[w] == WireStatus::Done) throw std::logic_error("wire reused after retirement");
    if (b.psi.num_qubits() >= limits_.width_limit) {
      throw WidthLimitExceeded("more than " + std::to_string(limits_.width_limit) +
                               " live dense qubits needed");
    }
    std::array<Complex, 2> v{};
    if (b.status[w] == WireStatus::Fresh) {
      v = task_.input_unitary(w).column(0);
    } else {
      v[b.known[w]] = 1.0;
    }
    b.psi.add_qubit(v);
    b.slot[w] = b.wire_at.size();
    b.wire_at.push_back(w);
    b.status[w] = WireStatus::Live;
  }

  void drop_slot(Branch& b, std::size_t w, std::uint8_t value) {
    const std::size_t s = b.slot[w];
    b.psi.remove_qubit(s, value);
    b.wire_at.erase(b.wire_at.begin() + static_cast<std::ptrdiff_t>(s));
    for (std::size_t k = s; k < b.wire_at.size(); ++k) b.slot[b.wire_at[k]] = k;
  }

  /// Applies the fixed readout of a wire that has no later gates.
  /// Returns false when the branch has probability zero.
  bool finalize_wire(Branch& b, std::size_t w) {
    const int y = fixed_[w];
    switch (b.status[w]) {
      case WireStatus::Fresh:
        if (y >= 0) {
          const Complex amp = (task_.output_unitary(w).adjoint() * task_.input_unitary(w))(y, 0);
          if (!accumulate(b, std::norm(amp))) return false;
        }
        break;
      case WireStatus::Known:
        if (y >= 0 && !accumulate(b, std::norm(task_.output_unitary(w)(b.known[w], y)))) return false;
        break;
      case WireStatus::Live: {
        if (y < 0) return true;
        b.psi.apply_matrix(b.slot[w], task_.output_unitary(w).adjoint().matrix());
        const double p = b.psi.project(b.slot[w], static_cast<std::uint8_t>(y));
        if (!accumulate(b, p)) return false;
        drop_slot(b, w, static_cast<std::uint8_t>(y));
        b.status[w] = WireStatus::Done;
        demote_all(b);
        return true;
      }
      case WireStatus::Done:
        return true;
    }
    b.status[w] = WireStatus::Done;
    return true;
  }

  bool is_known(const Branch& b, std::size_t w) const { return b.status[w] == WireStatus::Known; }

  /// Applies what it can of `gate` to classically tracked wires and returns
  /// the remainder, if any, for the dense register.
  std::optional<Gate> reduce(Branch& b, Gate gate) const {
    const auto& q = gate.wires;
    switch (gate.kind) {
      case GateKind::X:
        if (!is_known(b, q[0])) return gate;
        b.known[q[0]] ^= 1u;
        return std::nullopt;
      case GateKind::S:
      case GateKind::T:
        if (is_known(b, q[0])) return std::nullopt;
        return gate;
      case GateKind::CX:
        if (!is_known(b, q[0])) return gate;
        if (!b.known[q[0]]) return std::nullopt;
        return reduce(b, Gate::x(q[1]));
      case GateKind::TOF:
        for (int k = 0; k < 2; ++k) {
          if (!is_known(b, q[k])) continue;
          if (!b.known[q[k]]) return std::nullopt;
          return reduce(b, Gate::cx(q[1 - k], q[2]));
        }
        return gate;
      default:
        return gate;
    }
  }

  /// Moves a live wire in a basis state back to classical tracking.
  void demote(Branch& b, std::size_t w) {
    if (b.status[w] != WireStatus::Live) return;
    const double p1 = b.psi.probability_one(b.slot[w]);
    if (p1 >= kDemoteThreshold && 1.0 - p1 >= kDemoteThreshold) return;
    const std::uint8_t bit = p1 < kDemoteThreshold ? 0 : 1;
    b.psi.project(b.slot[w], bit);
    drop_slot(b, w, bit);
    b.status[w] = WireStatus::Known;
    b.known[w] = bit;
  }

  void demote_all(Branch& b) {
    const std::vector<std::size_t> live = b.wire_at;
    for (std::size_t w : live) demote(b, w);
  }

  static bool accumulate(Branch& b, double p) {
    if (p < kDeadProjection) return false;
    b.log2w += std::log2(p);
    return true;
  }

  void leaf(Branch& b, const LeafFn& on_leaf) {
    if (++leaves_ > (std::size_t{1} << limits_.branch_limit)) {
      throw BranchLimitExceeded("more than 2^" + std::to_string(limits_.branch_limit) +
                                " measurement branches");
    }
    if (lazy_) {
      for (std::size_t w = 0; w < b.status.size(); ++w) {
        if (!finalize_wire(b, w)) return;
      }
    }
    on_leaf(b);
  }

  void walk(Branch b, std::size_t from, const LeafFn& on_leaf) {
    const auto& gates = task_.circuit().gates();
    for (std::size_t g = from; g < gates.size(); ++g) {
      const Gate& gate = gates[g];
      if (gate.kind == GateKind::Measure) {
        const std::size_t w = gate.wires[0];
        make_live(b, w);
        const double p1 = b.psi.probability_one(b.slot[w]);
        const double probs[2] = {1.0 - p1, p1};
        const bool keep[2] = {probs[0] >= kBranchPruneThreshold, probs[1] >= kBranchPruneThreshold};
        if (keep[0] && keep[1]) {
          Branch other = b;
          settle(other, gate, 0);
          if (finish_gate(other, g)) walk(std::move(other), g + 1, on_leaf);
          settle(b, gate, 1);
        } else {
          settle(b, gate, keep[1] ? 1 : 0);
        }
      } else if (!gate.condition || b.cbits[*gate.condition]) {
        Gate plain = gate;
        plain.condition.reset();
        const std::optional<Gate> rest = lazy_ ? reduce(b, plain) : std::optional<Gate>(plain);
        if (rest) {
          Gate local = *rest;
          for (std::size_t q : rest->qubits()) make_live(b, q);
          for (std::size_t i = 0; i < rest->arity(); ++i) local.wires[i] = b.slot[rest->wires[i]];
          b.psi.apply(local);
          if (lazy_ && rest->kind != GateKind::S && rest->kind != GateKind::T && rest->kind != GateKind::X) {
            demote(b, rest->wires[rest->arity() - 1]);
          }
        }
      }
      if (!finish_gate(b, g)) return;
    }
    leaf(b, on_leaf);
  }

  void settle(Branch& b, const Gate& gate, std::uint8_t outcome) {
    const std::size_t w = gate.wires[0];
    const double p = b.psi.project(b.slot[w], outcome);
    b.log2w += std::log2(p);
    b.record.push_back(outcome);
    b.cbits[gate.cbit] = outcome;
    if (lazy_) {
      drop_slot(b, w, outcome);
      b.status[w] = WireStatus::Known;
      b.known[w] = outcome;
      demote_all(b);
    }
  }

  bool finish_gate(Branch& b, std::size_t g) {
    if (!lazy_) return true;
    for (std::size_t w : retire_after_[g]) {
      if (b.status[w] == WireStatus::Known || fixed_[w] >= 0) {
        if (!finalize_wire(b, w)) return false;
      }
    }
    return true;
  }

  const Task& task_;
  OracleLimits limits_;
  bool lazy_;
  std::vector<int> fixed_;
  std::vector<std::size_t> last_use_;
  std::vector<std::vector<std::size_t>> retire_after_;
  std::size_t leaves_ = 0;
};

std::vector<int> fixed_readouts(const Task& task, std::span<const std::size_t> wires,
                                std::span<const std::uint8_t> values) {
  if (wires.size() != values.size()) throw std::invalid_argument("wire and value counts differ");
  std::vector<int> fixed(task.num_qubits(), -1);
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= task.num_qubits()) throw std::out_of_range("queried wire out of range");
    if (values[i] > 1) throw std::invalid_argument("outcome values must be 0 or 1");
    if (fixed[wires[i]] >= 0) throw std::invalid_argument("wire queried twice");
    fixed[wires[i]] = values[i];
  }
  return fixed;
}

}  // namespace

std::vector<BranchOutcome> run_branches(const Task& task, const OracleLimits& limits) {
  std::vector<BranchOutcome> out;
  BranchEngine engine(task, limits, false, std::vector<int>(task.num_qubits(), -1));
  engine.run([&](Branch& b) {
    out.push_back({b.record, b.cbits, std::exp2(b.log2w), std::move(b.psi)});
  });
  return out;
}

double log2_marginal_probability(const Task& task, std::span<const std::size_t> wires,
                                 std::span<const std::uint8_t> values, const OracleLimits& limits) {
  std::vector<double> logs;
  BranchEngine engine(task, limits, true, fixed_readouts(task, wires, values));
  engine.run([&](Branch& b) { logs.push_back(b.log2w); });
  return log_sum_exp2(logs);
}

double marginal_probability(const Task& task, std::span<const std::size_t> wires,
                            std::span<const std::uint8_t> values, const OracleLimits& limits) {
  return std::exp2(log2_marginal_probability(task, wires, values, limits));
}

double joint_probability(const Task& task, std::span<const std::uint8_t> y,
                         const OracleLimits& limits) {
  std::vector<std::size_t> wires(task.num_qubits());
  for (std::size_t i = 0; i < wires.size(); ++i) wires[i] = i;
  return marginal_probability(task, wires, y, limits);
}

double postselect_probability(const Task& task, std::span<const std::size_t> cond_wires,
                              std::span<const std::uint8_t> cond_values,
                              std::span<const std::size_t> target_wires,
                              std::span<const std::uint8_t> target_values,
                              const OracleLimits& limits) {
  const double log_cond = log2_marginal_probability(task, cond_wires, cond_values, limits);
  if (std::isinf(log_cond)) throw ZeroProbabilityCondition("postselection event has probability zero");
  std::vector<std::size_t> wires(cond_wires.begin(), cond_wires.end());
  wires.insert(wires.end(), target_wires.begin(), target_wires.end());
  std::vector<std::uint8_t> values(cond_values.begin(), cond_values.end());
  values.insert(values.end(), target_values.begin(), target_values.end());
  const double log_both = log2_marginal_probability(task, wires, values, limits);
  return std::exp2(log_both - log_cond);
}

std::vector<double> output_distribution(const Task& task, const OracleLimits& limits) {
  const std::size_t n = task.num_qubits();
  if (n > limits.width_limit) throw WidthLimitExceeded("output distribution exceeds width limit");
  std::vector<double> dist(std::size_t{1} << n, 0.0);
  BranchEngine engine(task, limits, false, std::vector<int>(n, -1));
  engine.run([&](Branch& b) {
    for (std::size_t w = 0; w < n; ++w) {
      b.psi.apply_matrix(w, task.output_unitary(w).adjoint().matrix());
    }
    const double weight = std::exp2(b.log2w);
    for (std::size_t i = 0; i < dist.size(); ++i) dist[i] += weight * std::norm(b.psi.amplitude(i));
  });
  return dist;
}

PostselectedState postselected_state(const Task& task, std::span<const std::size_t> wires,
                                     std::span<const std::uint8_t> values,
                                     const OracleLimits& limits) {
  if (task.circuit().has_measurements()) {
    throw std::invalid_argument("postselected_state needs a measurement-free task");
  }
  const std::vector<int> fixed = fixed_readouts(task, wires, values);
  auto branches = run_branches(task, limits);
  DenseState psi = std::move(branches.front().state);
  double prob = 1.0;
  for (std::size_t w = 0; w < fixed.size(); ++w) {
    if (fixed[w] < 0) continue;
    psi.apply_matrix(w, task.output_unitary(w).adjoint().matrix());
    const double p = psi.project(w, static_cast<std::uint8_t>(fixed[w]));
    if (p < kDeadProjection) throw ZeroProbabilityCondition("postselection event has probability zero");
    prob *= p;
  }
  for (std::size_t w = fixed.size(); w-- > 0;) {
    if (fixed[w] >= 0) psi.remove_qubit(w, static_cast<std::uint8_t>(fixed[w]));
  }
  return {prob, std::move(psi)};
}

std::vector<Complex> circuit_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.num_qubits();
  if (n > kMaxUnitaryWidth) throw WidthLimitExceeded("circuit_unitary is limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> out(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Complex> e(dim, Complex{0, 0});
    e[c] = 1.0;
    DenseState s = DenseState::from_amplitudes(std::move(e));
    s.apply(circuit);
    for (std::size_t r = 0; r < dim; ++r) out[c * dim + r] = s.amplitude(r);
  }
  return out;
}

std::vector<Complex> pauli_dense(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  if (n > kMaxUnitaryWidth) throw WidthLimitExceeded("pauli_dense is limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << n;
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Complex> out(dim * dim, Complex{0, 0});
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t r = c;
    int k = p.phase_exp();
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (c >> q) & 1u;
      if (p.x(q)) r ^= std::size_t{1} << q;
      if (p.x(q) && p.z(q)) k += bit ? 3 : 1;  // Y|0> = i|1>, Y|1> = -i|0>
      if (!p.x(q) && p.z(q) && bit) k += 2;
    }
    out[c * dim + r] = kPhases[k % 4];
  }
  return out;
}

}  // namespace extcliff
