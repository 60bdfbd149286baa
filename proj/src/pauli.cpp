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

#include "extcliff/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace extcliff {

namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_wire(const PauliOperator& p, std::size_t q) {
  if (q >= p.num_qubits()) {
    throw std::out_of_range("wire " + std::to_string(q) + " out of range for " +
                            std::to_string(p.num_qubits()) + "-qubit Pauli");
  }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
  if (num_qubits == 0) {
    throw std::invalid_argument("Pauli operator needs at least one qubit");
  }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    phase = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase += 1;
    text.remove_prefix(1);
  }
  PauliOperator p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.set(q, true, false);
        break;
      case 'Y':
        p.set(q, true, true);
        break;
      case 'Z':
        p.set(q, false, true);
        break;
      default:
        throw std::invalid_argument("bad Pauli character '" + std::string(1, text[q]) + "'");
    }
  }
  p.set_phase_exp(phase);
  return p;
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t q, char pauli) {
  PauliOperator p(num_qubits);
  check_wire(p, q);
  switch (pauli) {
    case 'I':
      break;
    case 'X':
      p.set(q, true, false);
      break;
    case 'Y':
      p.set(q, true, true);
      break;
    case 'Z':
      p.set(q, false, true);
      break;
    default:
      throw std::invalid_argument("bad Pauli character");
  }
  return p;
}

void PauliOperator::set(std::size_t q, bool x_bit, bool z_bit) {
  const std::uint64_t mask = std::uint64_t{1} << (q & 63);
  xs_[q >> 6] = x_bit ? (xs_[q >> 6] | mask) : (xs_[q >> 6] & ~mask);
  zs_[q >> 6] = z_bit ? (zs_[q >> 6] | mask) : (zs_[q >> 6] & ~mask);
}

char PauliOperator::pauli_at(std::size_t q) const {
  static constexpr char kNames[4] = {'I', 'Z', 'X', 'Y'};
  return kNames[(x(q) ? 2 : 0) | (z(q) ? 1 : 0)];
}

Complex PauliOperator::phase() const {
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPhases[phase_exp_];
}

bool PauliOperator::is_identity_string() const {
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    if (xs_[w] | zs_[w]) return false;
  }
  return true;
}

void PauliOperator::check_same_size(const PauliOperator& other) const {
  if (num_qubits_ != other.num_qubits_) {
    throw std::invalid_argument("Pauli length mismatch: " + std::to_string(num_qubits_) +
                                " vs " + std::to_string(other.num_qubits_));
  }
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  check_same_size(other);
  unsigned parity = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
  }
  return parity == 0;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
  check_same_size(rhs);
  // Per qubit, XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  int plus = 0;
  int minus = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    const std::uint64_t x1 = xs_[w], z1 = zs_[w], x2 = rhs.xs_[w], z2 = rhs.zs_[w];
    const std::uint64_t px1 = x1 & ~z1, py1 = x1 & z1, pz1 = ~x1 & z1;
    const std::uint64_t px2 = x2 & ~z2, py2 = x2 & z2, pz2 = ~x2 & z2;
    plus += std::popcount((px1 & py2) | (py1 & pz2) | (pz1 & px2));
    minus += std::popcount((py1 & px2) | (pz1 & py2) | (px1 & pz2));
    xs_[w] = x1 ^ x2;
    zs_[w] = z1 ^ z2;
  }
  add_phase_exp(rhs.phase_exp_ + plus - minus);
  return *this;
}

PauliOperator PauliOperator::inverse() const {
  // Each tensor factor squares to I, so only the scalar inverts.
  PauliOperator inv = *this;
  inv.set_phase_exp(-static_cast<int>(phase_exp_));
  return inv;
}

std::string PauliOperator::to_string() const {
  std::string out = "i^" + std::to_string(phase_exp_) + " · ";
  for (std::size_t q = 0; q < num_qubits_; ++q) out += pauli_at(q);
  return out;
}

std::string PauliOperator::to_signed_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_exp_];
  for (std::size_t q = 0; q < num_qubits_; ++q) out += pauli_at(q);
  return out;
}

PauliOperator operator*(PauliOperator lhs, const PauliOperator& rhs) {
  lhs *= rhs;
  return lhs;
}

PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q) { return p * q; }

void conjugate_in_place(PauliOperator& p, const Gate& g) {
  if (g.condition.has_value()) {
    throw std::invalid_argument("cannot conjugate by a classically controlled gate");
  }
  for (std::size_t q : g.qubits()) check_wire(p, q);
  switch (g.kind) {
    case GateKind::H: {
      const std::size_t q = g.wires[0];
      const bool x = p.x(q), z = p.z(q);
      if (x && z) p.add_phase_exp(2);  // HYH = -Y
      p.set(q, z, x);
      break;
    }
    case GateKind::S: {
      const std::size_t q = g.wires[0];
      const bool x = p.x(q), z = p.z(q);
      if (x && z) p.add_phase_exp(2);  // SXS^dag = Y, SYS^dag = -X
      p.set(q, x, z ^ x);
      break;
    }
    case GateKind::X: {
      const std::size_t q = g.wires[0];
      if (p.z(q)) p.add_phase_exp(2);  // XZX = -Z, XYX = -Y
      break;
    }
    case GateKind::CX: {
      const std::size_t a = g.wires[0], b = g.wires[1];
      if (a == b) throw std::invalid_argument("CX control equals target");
      const bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
      if (xa && zb && (xb == za)) p.add_phase_exp(2);
      p.set(a, xa, za ^ zb);
      p.set(b, xb ^ xa, zb);
      break;
    }
    default:
      throw std::invalid_argument(std::string("not a basic Clifford gate: ") + gate_name(g.kind));
  }
}

PauliOperator conjugate_by_gate(const PauliOperator& p, const Gate& g) {
  PauliOperator out = p;
  conjugate_in_place(out, g);
  return out;
}

ConjugationResult conjugate_through_gates(const PauliOperator& p, std::span<const Gate> gates) {
  // C = g_m ... g_1, so C^dag p C = g_1^dag (... (g_m^dag p g_m) ...) g_1.
  // g^dag . g equals g . g^dag for the self-inverse gates; S^dag = S^3.
  for (const Gate& g : gates) {
    if (!g.is_basic_clifford() || g.condition.has_value()) {
      throw std::invalid_argument("conjugation needs a unitary Clifford circuit, found " +
                                  to_string(g));
    }
  }
  PauliOperator out = p;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    const int reps = it->kind == GateKind::S ? 3 : 1;
    for (int r = 0; r < reps; ++r) conjugate_in_place(out, *it);
  }
  ConjugationResult result{out.phase(), out};
  result.pauli.set_phase_exp(0);
  return result;
}

}  // namespace extcliff
