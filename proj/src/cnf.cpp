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

#include "extcliff/cnf.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "extcliff/errors.hpp"

namespace extcliff {

void CnfFormula::validate() const {
  if (num_vars == 0) throw std::invalid_argument("formula needs at least one variable");
  std::vector<bool> seen(num_vars + 1, false);
  for (const auto& clause : clauses) {
    if (clause.empty() || clause.size() > 4) throw std::invalid_argument("clause width must be 1 to 4");
    for (Literal l : clause) {
      const auto v = static_cast<std::size_t>(std::abs(l));
      if (l == 0 || v > num_vars) throw std::invalid_argument("literal out of range");
      seen[v] = true;
    }
  }
  for (std::size_t v = 1; v <= num_vars; ++v) {
    if (!seen[v]) throw std::invalid_argument("variable x" + std::to_string(v) + " appears in no clause");
  }
}

bool CnfFormula::evaluate(std::uint64_t assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (Literal l : clause) {
      const bool bit = (assignment >> (std::abs(l) - 1)) & 1u;
      if (bit == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::string CnfFormula::to_dimacs() const {
  std::string out = "p cnf " + std::to_string(num_vars) + " " + std::to_string(clauses.size()) + "\n";
  for (const auto& clause : clauses) {
    for (Literal l : clause) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

CnfFormula parse_dimacs(std::string_view text, const DimacsOptions& options) {
  CnfFormula f;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> current;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      std::string kind;
      long long vars = -1, count = -1;
      if (header || !(ls >> kind >> vars >> count) || kind != "cnf" || vars <= 0 || count < 0) {
        throw ParseError(line_no, "bad DIMACS header");
      }
      header = true;
      f.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before the 'p cnf' header");
    std::istringstream toks(line);
    for (std::string tok; toks >> tok;) {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad literal '" + tok + "'");
      }
      if (lit == 0) {
        if (current.empty()) throw ParseError(line_no, "empty clause");
        if (current.size() > 3) throw ParseError(line_no, "clause wider than 3 literals");
        while (current.size() < 3) current.push_back(current.back());
        f.clauses.push_back(current);
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > f.num_vars) {
        throw ParseError(line_no, "literal " + tok + " exceeds the declared variable count");
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError(line_no, "last clause is not terminated by 0");
  if (f.clauses.size() != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  std::vector<bool> seen(f.num_vars + 1, false);
  for (const auto& clause : f.clauses)
    for (Literal l : clause) seen[static_cast<std::size_t>(std::abs(l))] = true;
  for (std::size_t v = 1; v <= f.num_vars; ++v) {
    if (seen[v]) continue;
    if (!options.auto_pad) throw ParseError("variable " + std::to_string(v) + " appears in no clause");
    const auto l = static_cast<Literal>(v);
    f.clauses.push_back({l, -l, l});
  }
  return f;
}

std::vector<std::uint64_t> truth_table(const CnfFormula& f) {
  f.validate();
  if (f.num_vars > kMaxBruteForceVars) {
    throw std::invalid_argument("brute force is limited to 24 variables");
  }
  static constexpr std::uint64_t kPattern[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                                0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                                0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  const std::size_t assignments = std::size_t{1} << f.num_vars;
  const std::size_t words = (assignments + 63) / 64;
  const std::uint64_t tail = assignments >= 64 ? ~0ull : ((1ull << assignments) - 1);
  std::vector<std::uint64_t> out(words, ~0ull);
  out.back() &= tail;
  for (std::size_t w = 0; w < words; ++w) {
    for (const auto& clause : f.clauses) {
      std::uint64_t sat = 0;
      for (Literal l : clause) {
        const auto v = static_cast<std::size_t>(std::abs(l) - 1);
        const std::uint64_t bits = v < 6 ? kPattern[v] : (((w >> (v - 6)) & 1u) ? ~0ull : 0ull);
        sat |= l > 0 ? bits : ~bits;
      }
      out[w] &= sat;
    }
  }
  return out;
}

std::uint64_t count_sat(const CnfFormula& f) {
  std::uint64_t total = 0;
  for (std::uint64_t w : truth_table(f)) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::uint64_t abs_sat(const CnfFormula& f) {
  const std::uint64_t ones = count_sat(f);
  const std::uint64_t zeros = (std::uint64_t{1} << f.num_vars) - ones;
  return ones > zeros ? ones - zeros : zeros - ones;
}

CnfFormula reduce_count_to_abssat(const CnfFormula& f) {
  CnfFormula out = f;
  out.num_vars = f.num_vars + 1;
  const auto y = static_cast<Literal>(out.num_vars);
  for (auto& clause : out.clauses) clause.push_back(y);
  return out;
}

nlohmann::json layout_to_json(const ReductionLayout& layout) {
  return {{"num_vars", layout.num_vars},
          {"input_wires", layout.input_wires},
          {"target", layout.target},
          {"ones_wires", layout.ones_wires},
          {"ancilla_wires", layout.ancilla_wires},
          {"magic_wires", layout.magic_wires},
          {"width", layout.width},
          {"s", layout.s()},
          {"K", layout.K()},
          {"toffoli_count", layout.toffoli_count},
          {"t_count", layout.t_count},
          {"measurement_count", layout.measurement_count}};
}

namespace {

/// Builds C_f gate by gate. Ancillas start at 1; o1 and o2 stay at 1 and
/// serve as constant controls for NOT, COPY, CX and SWAP.
class ToffoliBuilder {
 public:
  explicit ToffoliBuilder(std::size_t n) : n_(n), next_(n + 3) {}

  std::size_t target() const { return n_; }
  std::size_t o1() const { return n_ + 1; }
  std::size_t o2() const { return n_ + 2; }
  std::size_t fresh() { return next_++; }
  std::size_t width() const { return next_; }

  void tof(std::size_t a, std::size_t b, std::size_t c) { gates_.push_back(Gate::tof(a, b, c)); }
  void not_gate(std::size_t w) { tof(o1(), o2(), w); }
  void cnot(std::size_t c, std::size_t t) { tof(c, o1(), t); }
  /// c (at 1) becomes a copy of x.
  void copy(std::size_t x, std::size_t c) {
    not_gate(c);
    cnot(x, c);
  }
  void swap(std::size_t u, std::size_t v) {
    cnot(u, v);
    cnot(v, u);
    cnot(u, v);
  }
  /// c (at 1) becomes x OR y; x and y are left negated.
  void or_gate(std::size_t x, std::size_t y, std::size_t c) {
    cnot(c, x);
    cnot(c, y);
    not_gate(c);
    tof(x, y, c);
    not_gate(c);
  }
  /// c (at 1) becomes x AND y.
  void and_gate(std::size_t x, std::size_t y, std::size_t c) {
    not_gate(c);
    tof(x, y, c);
  }

  std::vector<Gate>& gates() { return gates_; }

 private:
  std::size_t n_;
  std::size_t next_;
  std::vector<Gate> gates_;
};

/// B'_f: fan-out, staging, OR and AND stages. Returns the wire holding f(x).
std::size_t emit_formula_body(const CnfFormula& f, ToffoliBuilder& b) {
  const std::size_t n = f.num_vars;
  // Literal occurrences in clause order, and where each one currently lives.
  std::vector<Literal> occurrences;
  for (const auto& clause : f.clauses) occurrences.insert(occurrences.end(), clause.begin(), clause.end());
  std::vector<std::size_t> wire_of(occurrences.size());

  for (std::size_t v = 1; v <= n; ++v) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < occurrences.size(); ++k) {
      if (occurrences[k] == static_cast<Literal>(v)) pos.push_back(k);
      if (occurrences[k] == -static_cast<Literal>(v)) neg.push_back(k);
    }
    const std::size_t x = v - 1;
    if (!pos.empty()) {
      wire_of[pos[0]] = x;
      for (std::size_t i = 1; i < pos.size(); ++i) {
        wire_of[pos[i]] = b.fresh();
        b.copy(x, wire_of[pos[i]]);
      }
      for (std::size_t k : neg) {
        wire_of[k] = b.fresh();
        b.copy(x, wire_of[k]);
        b.not_gate(wire_of[k]);
      }
    } else {
      b.not_gate(x);
      wire_of[neg[0]] = x;
      for (std::size_t i = 1; i < neg.size(); ++i) {
        wire_of[neg[i]] = b.fresh();
        b.copy(x, wire_of[neg[i]]);
      }
    }
  }

  // Stage the literal wires so that occurrence k sits on the k-th smallest one.
  std::vector<std::size_t> slots = wire_of;
  std::sort(slots.begin(), slots.end());
  std::vector<std::size_t> holder(b.width(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < wire_of.size(); ++k) holder[wire_of[k]] = k;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const std::size_t want = slots[k];
    const std::size_t have = wire_of[k];
    if (want == have) continue;
    b.swap(want, have);
    const std::size_t displaced = holder[want];
    wire_of[displaced] = have;
    holder[have] = displaced;
    wire_of[k] = want;
    holder[want] = k;
  }

  std::vector<std::size_t> clause_out;
  std::size_t k = 0;
  for (const auto& clause : f.clauses) {
    std::size_t acc = wire_of[k++];
    for (std::size_t i = 1; i < clause.size(); ++i) {
      const std::size_t c = b.fresh();
      b.or_gate(acc, wire_of[k++], c);
      acc = c;
    }
    clause_out.push_back(acc);
  }
  std::size_t acc = clause_out[0];
  for (std::size_t i = 1; i < clause_out.size(); ++i) {
    const std::size_t c = b.fresh();
    b.and_gate(acc, clause_out[i], c);
    acc = c;
  }
  return acc;
}

ReductionLayout base_layout(const CnfFormula& f, std::size_t width) {
  ReductionLayout layout;
  layout.num_vars = f.num_vars;
  for (std::size_t i = 0; i < f.num_vars; ++i) layout.input_wires.push_back(i);
  layout.target = f.num_vars;
  layout.ones_wires = {f.num_vars + 1, f.num_vars + 2};
  for (std::size_t w = f.num_vars + 1; w < width; ++w) layout.ancilla_wires.push_back(w);
  layout.width = width;
  return layout;
}

void append_x_as_hssh(Circuit& c, std::size_t q) {
  c.append(Gate::h(q));
  c.append(Gate::s(q));
  c.append(Gate::s(q));
  c.append(Gate::h(q));
}

}  // namespace

CompiledFormula compile_to_toffoli(const CnfFormula& f) {
  f.validate();
  ToffoliBuilder b(f.num_vars);
  b.not_gate(b.target());
  const std::size_t body_start = b.gates().size();
  const std::size_t acc = emit_formula_body(f, b);
  const std::vector<Gate> body(b.gates().begin() + static_cast<std::ptrdiff_t>(body_start), b.gates().end());
  b.cnot(acc, b.target());
  for (auto it = body.rbegin(); it != body.rend(); ++it) b.gates().push_back(*it);

  Circuit c(b.width());
  c.append(std::span<const Gate>(b.gates()));
  ReductionLayout layout = base_layout(f, b.width());
  layout.toffoli_count = c.count(GateKind::TOF);
  return {std::move(c), std::move(layout)};
}

CompiledFormula compile_to_clifford_t(const CnfFormula& f) {
  CompiledFormula cf = compile_to_toffoli(f);
  const ReductionLayout& layout = cf.layout;
  Circuit q(layout.width);
  append_x_as_hssh(q, layout.target);
  for (std::size_t a : layout.ancilla_wires) append_x_as_hssh(q, a);
  q.append(expand_toffoli(cf.circuit));
  for (std::size_t a : layout.ancilla_wires) append_x_as_hssh(q, a);
  ReductionLayout out = layout;
  out.t_count = q.count(GateKind::T);
  return {std::move(q), std::move(out)};
}

ReductionTask build_mf_task(const CnfFormula& f) {
  const CompiledFormula qf = compile_to_clifford_t(f);
  const std::size_t n = f.num_vars;
  const std::size_t t = qf.layout.target;
  Circuit c(qf.layout.width);
  for (std::size_t i = 0; i < n; ++i) c.append(Gate::h(i));
  c.append(Gate::x(t));
  c.append(Gate::h(t));
  c.append(qf.circuit);
  for (std::size_t i = 0; i < n; ++i) c.append(Gate::h(i));
  c.append(Gate::h(t));
  c.append(Gate::x(t));
  GadgetizedTask g = gadgetize_t(c, GadgetMode::MagicInput);
  ReductionLayout layout = qf.layout;
  layout.magic_wires = g.ancilla_of_t;
  layout.width = g.task.num_qubits();
  return {std::move(g.task), std::move(layout)};
}

ReductionTask build_gf_task(const CnfFormula& f) {
  const CompiledFormula cf = compile_to_toffoli(f);
  const ReductionLayout& base = cf.layout;
  const std::size_t n = f.num_vars;
  Circuit c(base.width);
  for (std::size_t i = 0; i < n; ++i) {
    c.append(Gate::h(i));
    c.append(Gate::measure(i, i));
  }
  c.append(Gate::x(base.target));
  for (std::size_t a : base.ancilla_wires) c.append(Gate::x(a));
  std::size_t cbit = n;
  for (const Gate& g : cf.circuit.gates()) {
    c.append(Gate::measure(g.wires[0], cbit));
    c.append(Gate::controlled(cbit, Gate::cx(g.wires[1], g.wires[2])));
    ++cbit;
  }
  for (std::size_t a : base.ancilla_wires) c.append(Gate::x(a));
  for (std::size_t i = 0; i < n; ++i) c.append(Gate::controlled(i, Gate::x(i)));
  ReductionLayout layout = base;
  layout.measurement_count = c.count(GateKind::Measure);
  Task task(BasisInput{Bits(base.width, 0)}, std::move(c), BasisOutput{});
  return {std::move(task), std::move(layout)};
}

Bits gf_accepting_outcome(const ReductionLayout& layout) {
  Bits y(layout.width, 0);
  y[layout.target] = 1;
  return y;
}

namespace {

Extraction round_value(double value) {
  Extraction e;
  e.value = value;
  const double r = std::round(value);
  e.rounded = r <= 0 ? 0 : static_cast<std::uint64_t>(r);
  e.flagged = std::abs(r - value) > 1e-4;
  return e;
}

}  // namespace

Extraction extract_abssat_log2(double log2_p_joint, std::size_t n, std::size_t K) {
  if (std::isinf(log2_p_joint) && log2_p_joint < 0) return round_value(0.0);
  const double exponent = static_cast<double>(n) + static_cast<double>(K) / 2.0 + log2_p_joint / 2.0;
  return round_value(std::exp2(exponent));
}

Extraction extract_abssat(double p_joint, std::size_t n, std::size_t K) {
  if (p_joint < 0.0 || p_joint > 1.0 + 1e-9) throw std::invalid_argument("probability out of [0, 1]");
  if (p_joint <= 0.0) return round_value(0.0);
  return extract_abssat_log2(std::log2(p_joint), n, K);
}

Extraction extract_count(double p, std::size_t n) {
  if (p < 0.0 || p > 1.0 + 1e-9) throw std::invalid_argument("probability out of [0, 1]");
  return round_value(std::ldexp(p, static_cast<int>(n)));
}

Bits run_classical(const Circuit& circuit, Bits bits) {
  if (bits.size() != circuit.num_qubits()) throw std::invalid_argument("bit-string length differs from width");
  for (const Gate& g : circuit.gates()) {
    if (g.condition) throw std::invalid_argument("run_classical takes unconditioned gates");
    switch (g.kind) {
      case GateKind::X:
        bits[g.wires[0]] ^= 1;
        break;
      case GateKind::CX:
        bits[g.wires[1]] ^= bits[g.wires[0]];
        break;
      case GateKind::TOF:
        bits[g.wires[2]] ^= bits[g.wires[0]] & bits[g.wires[1]];
        break;
      default:
        throw std::invalid_argument("run_classical takes X, CX and TOF only, got " + to_string(g));
    }
  }
  return bits;
}

}  // namespace extcliff
