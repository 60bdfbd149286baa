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

#include "extcliff/tableau.hpp"

#include <stdexcept>

namespace extcliff {

StabilizerTableau::StabilizerTableau(std::size_t num_qubits) : n_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("tableau needs at least one qubit");
  destab_.reserve(n_);
  stab_.reserve(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    destab_.push_back(PauliOperator::single(n_, q, 'X'));
    stab_.push_back(PauliOperator::single(n_, q, 'Z'));
  }
}

StabilizerTableau StabilizerTableau::init_basis(std::span<const std::uint8_t> bits) {
  StabilizerTableau t(bits.size());
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q]) t.stab_[q].set_phase_exp(2);
  }
  return t;
}

void StabilizerTableau::check_wire(std::size_t wire) const {
  if (wire >= n_) {
    throw std::out_of_range("wire " + std::to_string(wire) + " out of range for " +
                            std::to_string(n_) + "-qubit tableau");
  }
}

void StabilizerTableau::apply(const Gate& gate) {
  if (!gate.is_basic_clifford() || gate.condition) {
    throw std::invalid_argument("tableau applies only unconditioned H/S/X/CX, got " +
                                to_string(gate));
  }
  for (std::size_t q : gate.qubits()) check_wire(q);
  if (gate.kind == GateKind::CX && gate.wires[0] == gate.wires[1]) {
    throw std::invalid_argument("CX control equals target");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    conjugate_row(destab_[i], gate.kind, gate.wires[0], gate.wires[1]);
    conjugate_row(stab_[i], gate.kind, gate.wires[0], gate.wires[1]);
  }
}

void StabilizerTableau::conjugate_row(PauliOperator& p, GateKind kind, std::size_t a, std::size_t b) {
  // Same rules as conjugate_in_place, on the raw words.
  std::uint64_t& xa = p.xs_[a >> 6];
  std::uint64_t& za = p.zs_[a >> 6];
  const unsigned sa = a & 63;
  const unsigned bx = (xa >> sa) & 1u, bz = (za >> sa) & 1u;
  switch (kind) {
    case GateKind::H:
      p.phase_exp_ = (p.phase_exp_ + 2 * (bx & bz)) & 3u;
      xa ^= std::uint64_t{bx ^ bz} << sa;
      za ^= std::uint64_t{bx ^ bz} << sa;
      break;
    case GateKind::S:
      p.phase_exp_ = (p.phase_exp_ + 2 * (bx & bz)) & 3u;
      za ^= std::uint64_t{bx} << sa;
      break;
    case GateKind::X:
      p.phase_exp_ = (p.phase_exp_ + 2 * bz) & 3u;
      break;
    default: {  // CX
      std::uint64_t& xb = p.xs_[b >> 6];
      std::uint64_t& zb = p.zs_[b >> 6];
      const unsigned sb = b & 63;
      const unsigned cx = (xb >> sb) & 1u, cz = (zb >> sb) & 1u;
      p.phase_exp_ = (p.phase_exp_ + 2 * (bx & cz & (cx ^ bz ^ 1u))) & 3u;
      za ^= std::uint64_t{cz} << sa;
      xb ^= std::uint64_t{bx} << sb;
      break;
    }
  }
}

std::optional<std::size_t> StabilizerTableau::random_pivot(std::size_t wire) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (stab_[i].x(wire)) return i;
  }
  return std::nullopt;
}

void StabilizerTableau::collapse(std::size_t wire, std::size_t pivot, std::uint8_t outcome) {
  const PauliOperator pivot_row = stab_[pivot];
  for (std::size_t i = 0; i < n_; ++i) {
    if (i != pivot && stab_[i].x(wire)) stab_[i] *= pivot_row;
    if (i != pivot && destab_[i].x(wire)) destab_[i] *= pivot_row;
  }
  destab_[pivot] = pivot_row;
  stab_[pivot] = PauliOperator::single(n_, wire, 'Z');
  if (outcome) stab_[pivot].set_phase_exp(2);
}

std::optional<std::uint8_t> StabilizerTableau::deterministic_outcome(std::size_t wire) const {
  check_wire(wire);
  if (random_pivot(wire)) return std::nullopt;
  // Z_wire is (+/-) the product of the stabilizers whose destabilizer
  // anticommutes with it.
  PauliOperator acc(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (destab_[i].x(wire)) acc *= stab_[i];
  }
  return static_cast<std::uint8_t>(acc.phase_exp() == 2 ? 1 : 0);
}

StabilizerTableau::Measurement StabilizerTableau::measure_z(std::size_t wire,
                                                            std::mt19937_64& rng) {
  check_wire(wire);
  if (const auto pivot = random_pivot(wire)) {
    const auto outcome = static_cast<std::uint8_t>(rng() & 1u);
    collapse(wire, *pivot, outcome);
    return {outcome, 0.5};
  }
  return {*deterministic_outcome(wire), 1.0};
}

double StabilizerTableau::measure_z_forced(std::size_t wire, std::uint8_t outcome) {
  check_wire(wire);
  if (const auto pivot = random_pivot(wire)) {
    collapse(wire, *pivot, outcome ? 1 : 0);
    return 0.5;
  }
  return *deterministic_outcome(wire) == (outcome ? 1 : 0) ? 1.0 : 0.0;
}

int StabilizerTableau::pauli_expectation(const PauliOperator& p) const {
  if (!p.is_hermitian()) throw std::invalid_argument("expectation of a non-Hermitian Pauli");
  if (p.num_qubits() != n_) throw std::invalid_argument("Pauli length does not match tableau");
  for (const PauliOperator& s : stab_) {
    if (!s.commutes_with(p)) return 0;
  }
  PauliOperator acc(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!destab_[i].commutes_with(p)) acc *= stab_[i];
  }
  const int rel = (static_cast<int>(p.phase_exp()) - acc.phase_exp() + 4) % 4;
  return rel == 0 ? 1 : -1;
}

bool StabilizerTableau::is_valid() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!stab_[i].is_hermitian() || !destab_[i].is_hermitian()) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!stab_[i].commutes_with(stab_[j])) return false;
      if (!destab_[i].commutes_with(destab_[j])) return false;
      if (destab_[i].commutes_with(stab_[j]) == (i == j)) return false;
    }
  }
  return true;
}

std::string StabilizerTableau::dump() const {
  std::string out;
  for (const PauliOperator& d : destab_) out += d.to_signed_string() + '\n';
  for (const PauliOperator& s : stab_) out += s.to_signed_string() + '\n';
  return out;
}

}  // namespace extcliff
