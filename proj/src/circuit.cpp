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

#include "extcliff/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "extcliff/errors.hpp"

namespace extcliff {

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
}

void Circuit::append(const Gate& gate) {
  const auto qs = gate.qubits();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] >= num_qubits_) {
      throw std::out_of_range("wire " + std::to_string(qs[i]) + " out of range in " +
                              to_string(gate));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) throw std::invalid_argument("repeated wire in " + to_string(gate));
    }
  }
  if (gate.condition) {
    if (!gate.is_basic_clifford()) {
      throw std::invalid_argument("classical control only wraps H/S/X/CX");
    }
    if (*gate.condition >= written_.size() || !written_[*gate.condition]) {
      throw std::invalid_argument("c" + std::to_string(*gate.condition) +
                                  " is read before any measurement writes it");
    }
  }
  if (gate.kind == GateKind::Measure) {
    if (gate.cbit >= written_.size()) written_.resize(gate.cbit + 1, false);
    written_[gate.cbit] = true;
    num_cbits_ = std::max(num_cbits_, gate.cbit + 1);
  }
  gates_.push_back(gate);
}

void Circuit::append(std::span<const Gate> gates) {
  for (const Gate& g : gates) append(g);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("cannot append circuits of different width");
  }
  append(std::span<const Gate>(other.gates_));
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

bool Circuit::is_adaptive() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.condition.has_value(); });
}

bool Circuit::is_clifford() const { return count(GateKind::T) == 0 && count(GateKind::TOF) == 0; }

Circuit Circuit::widened(std::size_t num_qubits) const {
  if (num_qubits < num_qubits_) throw std::invalid_argument("widened() cannot shrink a circuit");
  Circuit out(num_qubits);
  out.append(std::span<const Gate>(gates_));
  return out;
}

Circuit Circuit::inverse() const {
  Circuit out(num_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    const Gate& g = *it;
    if (g.kind == GateKind::Measure || g.condition) {
      throw std::invalid_argument("inverse() needs a measurement-free circuit");
    }
    switch (g.kind) {
      case GateKind::S:
        for (int r = 0; r < 3; ++r) out.append(g);
        break;
      case GateKind::T:
        out.append(g);
        for (int r = 0; r < 3; ++r) out.append(Gate::s(g.wires[0]));
        break;
      default:
        out.append(g);
    }
  }
  return out;
}

Task::Task(InputSpec input, Circuit circuit, OutputSpec output)
    : input_(std::move(input)), circuit_(std::move(circuit)), output_(std::move(output)) {
  const std::size_t n = circuit_.num_qubits();
  if (const auto* b = std::get_if<BasisInput>(&input_)) {
    if (b->bits.size() != n) throw std::invalid_argument("input bit-string length differs from n");
    for (std::uint8_t v : b->bits) {
      if (v > 1) throw std::invalid_argument("input bits must be 0 or 1");
    }
  } else if (std::get<ProductInput>(input_).states.size() != n) {
    throw std::invalid_argument("input state count differs from n");
  }
  if (const auto* p = std::get_if<ProductOutput>(&output_)) {
    if (p->unitaries.size() != n) throw std::invalid_argument("output unitary count differs from n");
  }
}

SingleQubitUnitary Task::input_unitary(std::size_t wire) const {
  if (wire >= num_qubits()) throw std::out_of_range("input wire out of range");
  if (const auto* b = std::get_if<BasisInput>(&input_)) {
    return b->bits[wire] ? SingleQubitUnitary::pauli_x() : SingleQubitUnitary::identity();
  }
  return std::get<ProductInput>(input_).states[wire];
}

SingleQubitUnitary Task::output_unitary(std::size_t wire) const {
  if (wire >= num_qubits()) throw std::out_of_range("output wire out of range");
  if (const auto* p = std::get_if<ProductOutput>(&output_)) return p->unitaries[wire];
  return SingleQubitUnitary::identity();
}

bool IngredientProfile::is_subset_of(const IngredientProfile& other) const {
  return input <= other.input && adaptivity <= other.adaptivity && output <= other.output;
}

std::string to_string(const IngredientProfile& profile) {
  std::string out = "(IN(";
  out += profile.input == InputKind::Bits ? "BITS" : "PROD";
  out += "), ";
  out += profile.adaptivity == Adaptivity::NonAdapt ? "NONADAPT" : "ADAPT";
  out += ", OUT(";
  out += profile.output == OutputKind::Bits ? "BITS" : "PROD";
  out += "))";
  return out;
}

IngredientProfile parse_profile(std::string_view text) {
  std::string clean;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ',') {
      clean += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  std::vector<std::string> parts;
  std::stringstream ss(clean);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.starts_with("IN")) part.erase(0, 2);
    if (part.starts_with("OUT")) part.erase(0, 3);
    parts.push_back(part);
  }
  if (parts.size() != 3) throw std::invalid_argument("profile needs three comma-separated parts");
  IngredientProfile p;
  auto side = [](const std::string& s) {
    if (s == "BITS") return false;
    if (s == "PROD") return true;
    throw std::invalid_argument("expected BITS or PROD, got '" + s + "'");
  };
  p.input = side(parts[0]) ? InputKind::Prod : InputKind::Bits;
  if (parts[1] == "NONADAPT") {
    p.adaptivity = Adaptivity::NonAdapt;
  } else if (parts[1] == "ADAPT") {
    p.adaptivity = Adaptivity::Adapt;
  } else {
    throw std::invalid_argument("expected NONADAPT or ADAPT, got '" + parts[1] + "'");
  }
  p.output = side(parts[2]) ? OutputKind::Prod : OutputKind::Bits;
  return p;
}

std::vector<IngredientProfile> all_profiles() {
  std::vector<IngredientProfile> out;
  for (auto o : {OutputKind::Bits, OutputKind::Prod})
    for (auto a : {Adaptivity::NonAdapt, Adaptivity::Adapt})
      for (auto i : {InputKind::Bits, InputKind::Prod}) out.push_back({i, a, o});
  return out;
}

IngredientProfile classify_task(const Task& task) {
  if (!task.circuit().is_clifford()) {
    throw std::invalid_argument("classify_task needs a Clifford circuit (no T or TOF)");
  }
  IngredientProfile p;
  if (const auto* in = std::get_if<ProductInput>(&task.input())) {
    const bool bits = std::all_of(in->states.begin(), in->states.end(),
                                  [](const SingleQubitUnitary& v) { return v.is_identity_up_to_phase(); });
    p.input = bits ? InputKind::Bits : InputKind::Prod;
  }
  p.adaptivity = task.circuit().is_adaptive() ? Adaptivity::Adapt : Adaptivity::NonAdapt;
  if (const auto* out = std::get_if<ProductOutput>(&task.output())) {
    const bool bits = std::all_of(out->unitaries.begin(), out->unitaries.end(),
                                  [](const SingleQubitUnitary& u) { return u.is_identity_up_to_phase(); });
    p.output = bits ? OutputKind::Bits : OutputKind::Prod;
  }
  return p;
}

namespace {

void append_t_dagger(Circuit& c, std::size_t q) {
  c.append(Gate::t(q));
  for (int r = 0; r < 3; ++r) c.append(Gate::s(q));
}

}  // namespace

Circuit expand_toffoli(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::TOF) {
      out.append(g);
      continue;
    }
    const std::size_t c1 = g.wires[0], c2 = g.wires[1], t = g.wires[2];
    out.append(Gate::h(t));
    out.append(Gate::cx(c2, t));
    append_t_dagger(out, t);
    out.append(Gate::cx(c1, t));
    out.append(Gate::t(t));
    out.append(Gate::cx(c2, t));
    append_t_dagger(out, t);
    out.append(Gate::cx(c1, t));
    append_t_dagger(out, c2);
    out.append(Gate::t(t));
    out.append(Gate::cx(c1, c2));
    out.append(Gate::h(t));
    append_t_dagger(out, c2);
    out.append(Gate::cx(c1, c2));
    out.append(Gate::t(c1));
    out.append(Gate::s(c2));
  }
  return out;
}

GadgetizedTask gadgetize_t(const Circuit& circuit, GadgetMode mode) {
  const std::size_t n = circuit.num_qubits();
  std::vector<std::size_t> ancillas;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::TOF) throw std::invalid_argument("expand Toffoli gates before gadgetizing");
    if (g.kind == GateKind::Measure || g.condition) {
      throw std::invalid_argument("gadgetize_t needs a measurement-free circuit");
    }
    if (g.kind == GateKind::T) ancillas.push_back(n + ancillas.size());
  }
  const std::size_t width = n + ancillas.size();
  Circuit out(width);
  std::size_t next = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::T) {
      out.append(Gate::cx(g.wires[0], ancillas[next++]));
    } else {
      out.append(g);
    }
  }
  const SingleQubitUnitary t = SingleQubitUnitary::t_gate();
  const SingleQubitUnitary h = SingleQubitUnitary::hadamard();
  InputSpec input;
  OutputSpec output;
  if (mode == GadgetMode::MagicInput) {
    std::vector<SingleQubitUnitary> states(width, SingleQubitUnitary::identity());
    for (std::size_t a : ancillas) states[a] = t * h;
    input = ProductInput{std::move(states)};
    output = BasisOutput{};
  } else {
    input = BasisInput{Bits(width, 0)};
    std::vector<SingleQubitUnitary> us(width, SingleQubitUnitary::identity());
    for (std::size_t a : ancillas) us[a] = (h * t).adjoint();
    output = ProductOutput{std::move(us)};
  }
  return {Task(std::move(input), std::move(out), std::move(output)), ancillas,
          Bits(ancillas.size(), 0), ancillas};
}

std::pair<Task, Bits> task_transpose(const Task& task, std::span<const std::uint8_t> outcome) {
  const std::size_t n = task.num_qubits();
  if (outcome.size() != n) throw std::invalid_argument("outcome length differs from n");
  if (task.circuit().has_measurements() || task.circuit().is_adaptive()) {
    throw std::invalid_argument("task_transpose needs a measurement-free circuit");
  }
  const bool prod_in = task.has_product_input();
  const bool prod_out = task.has_product_output();
  if (prod_in == prod_out) {
    throw std::invalid_argument("task_transpose needs exactly one product side");
  }
  Circuit inv = task.circuit().inverse();
  if (prod_out) {
    const auto& x = std::get<BasisInput>(task.input()).bits;
    std::vector<SingleQubitUnitary> states;
    states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      SingleQubitUnitary v = task.output_unitary(i);
      if (outcome[i]) v = v * SingleQubitUnitary::pauli_x();
      states.push_back(v);
    }
    return {Task(ProductInput{std::move(states)}, std::move(inv), BasisOutput{}), x};
  }
  const auto& vs = std::get<ProductInput>(task.input()).states;
  return {Task(BasisInput{Bits(outcome.begin(), outcome.end())}, std::move(inv), ProductOutput{vs}),
          Bits(n, 0)};
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line, bool cbit) {
  if (cbit) {
    if (tok.empty() || tok.front() != 'c') throw ParseError(line, "expected cbit like c0, got '" + std::string(tok) + "'");
    tok.remove_prefix(1);
  }
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "bad index '" + std::string(tok) + "'");
  }
  return value;
}

struct ParsedLine {
  std::size_t line;
  Gate gate;
};

Gate parse_gate(std::span<const std::string_view> toks, std::size_t line) {
  const std::string_view op = toks[0];
  auto need = [&](std::size_t k) {
    if (toks.size() != k + 1) {
      throw ParseError(line, std::string(op) + " takes " + std::to_string(k) + " operand(s)");
    }
  };
  if (op == "H" || op == "S" || op == "X" || op == "T") {
    need(1);
    const std::size_t q = parse_index(toks[1], line, false);
    if (op == "H") return Gate::h(q);
    if (op == "S") return Gate::s(q);
    if (op == "X") return Gate::x(q);
    return Gate::t(q);
  }
  if (op == "CX") {
    need(2);
    return Gate::cx(parse_index(toks[1], line, false), parse_index(toks[2], line, false));
  }
  if (op == "TOF") {
    need(3);
    return Gate::tof(parse_index(toks[1], line, false), parse_index(toks[2], line, false),
                     parse_index(toks[3], line, false));
  }
  if (op == "M") {
    need(2);
    return Gate::measure(parse_index(toks[1], line, false), parse_index(toks[2], line, true));
  }
  if (op == "C") {
    if (toks.size() < 3) throw ParseError(line, "C takes a cbit and a gate");
    const std::size_t cbit = parse_index(toks[1], line, true);
    const Gate inner = parse_gate(toks.subspan(2), line);
    try {
      return Gate::controlled(cbit, inner);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }
  throw ParseError(line, "unknown gate '" + std::string(op) + "'");
}

}  // namespace

Circuit parse_circuit(std::string_view text, std::optional<std::size_t> num_qubits) {
  std::vector<ParsedLine> parsed;
  std::optional<std::size_t> declared;
  std::size_t max_wire = 0;
  bool any_wire = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      const auto comment = split_ws(line.substr(hash + 1));
      if (comment.size() == 2 && comment[0] == "qubits") {
        declared = parse_index(comment[1], line_no, false);
      }
      line = line.substr(0, hash);
    }
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    const Gate g = parse_gate(toks, line_no);
    for (std::size_t q : g.qubits()) {
      max_wire = std::max(max_wire, q);
      any_wire = true;
    }
    parsed.push_back({line_no, g});
  }
  const std::size_t width = num_qubits ? *num_qubits : declared ? *declared : (any_wire ? max_wire + 1 : 1);
  if (width == 0) throw ParseError("circuit width must be positive");
  Circuit c(width);
  for (const ParsedLine& p : parsed) {
    try {
      c.append(p.gate);
    } catch (const std::exception& e) {
      throw ParseError(p.line, e.what());
    }
  }
  return c;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::string out = "# qubits " + std::to_string(circuit.num_qubits()) + "\n";
  for (const Gate& g : circuit.gates()) {
    out += to_string(g);
    out += '\n';
  }
  return out;
}

}  // namespace extcliff
