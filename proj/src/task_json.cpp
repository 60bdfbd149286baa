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

#include "extcliff/task_json.hpp"

#include "extcliff/errors.hpp"

namespace extcliff {

using nlohmann::json;

Bits parse_bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("bit-string may only contain 0 and 1");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (std::uint8_t b : bits) out += b ? '1' : '0';
  return out;
}

json unitary_to_json(const SingleQubitUnitary& u) {
  json rows = json::array();
  for (std::size_t r = 0; r < 2; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 2; ++c) row.push_back({u(r, c).real(), u(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

SingleQubitUnitary unitary_from_json(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "I") return SingleQubitUnitary::identity();
    if (name == "H") return SingleQubitUnitary::hadamard();
    if (name == "S") return SingleQubitUnitary::phase_s();
    if (name == "T") return SingleQubitUnitary::t_gate();
    if (name == "X") return SingleQubitUnitary::pauli_x();
    if (name == "Y") return SingleQubitUnitary::pauli_y();
    if (name == "Z") return SingleQubitUnitary::pauli_z();
    throw ParseError("unknown unitary name '" + name + "'");
  }
  if (!j.is_array() || j.size() != 2) throw ParseError("unitary must be a 2x2 array");
  Matrix2 m{};
  for (std::size_t r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2) throw ParseError("unitary row must have 2 entries");
    for (std::size_t c = 0; c < 2; ++c) {
      const json& e = j[r][c];
      if (e.is_number()) {
        m[r][c] = {e.get<double>(), 0.0};
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m[r][c] = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw ParseError("matrix entry must be [re, im]");
      }
    }
  }
  try {
    return SingleQubitUnitary(m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

namespace {

std::vector<SingleQubitUnitary> unitary_list(const json& j, const char* key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("product spec needs a '") + key + "' array");
  }
  if (j[key].size() != n) throw ParseError(std::string("'") + key + "' must have n entries");
  std::vector<SingleQubitUnitary> out;
  for (const json& e : j[key]) out.push_back(unitary_from_json(e));
  return out;
}

}  // namespace

Task task_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("task must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("task needs a positive 'n'");
  const auto n = j["n"].get<std::size_t>();
  if (n == 0) throw ParseError("task needs a positive 'n'");
  if (!j.contains("circuit") || !j["circuit"].is_string()) {
    throw ParseError("task needs a 'circuit' string");
  }
  Circuit circuit = parse_circuit(j["circuit"].get<std::string>(), n);

  InputSpec input = BasisInput{Bits(n, 0)};
  if (j.contains("input")) {
    const json& in = j["input"];
    const std::string kind = in.value("kind", "bits");
    if (kind == "bits") {
      if (in.contains("bits")) {
        Bits bits = parse_bits(in["bits"].get<std::string>());
        if (bits.size() != n) throw ParseError("input bits must have length n");
        input = BasisInput{std::move(bits)};
      }
    } else if (kind == "product") {
      input = ProductInput{unitary_list(in, "states", n)};
    } else {
      throw ParseError("input kind must be 'bits' or 'product'");
    }
  }
  OutputSpec output = BasisOutput{};
  if (j.contains("output")) {
    const json& out = j["output"];
    const std::string kind = out.value("kind", "bits");
    if (kind == "product") {
      output = ProductOutput{unitary_list(out, "unitaries", n)};
    } else if (kind != "bits") {
      throw ParseError("output kind must be 'bits' or 'product'");
    }
  }
  return Task(std::move(input), std::move(circuit), std::move(output));
}

Task parse_task(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    return task_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json task_to_json(const Task& task) {
  json j;
  j["n"] = task.num_qubits();
  if (const auto* b = std::get_if<BasisInput>(&task.input())) {
    j["input"] = {{"kind", "bits"}, {"bits", bits_to_string(b->bits)}};
  } else {
    json states = json::array();
    for (const auto& v : std::get<ProductInput>(task.input()).states) states.push_back(unitary_to_json(v));
    j["input"] = {{"kind", "product"}, {"states", states}};
  }
  j["circuit"] = serialize_circuit(task.circuit());
  if (const auto* p = std::get_if<ProductOutput>(&task.output())) {
    json us = json::array();
    for (const auto& u : p->unitaries) us.push_back(unitary_to_json(u));
    j["output"] = {{"kind", "product"}, {"unitaries", us}};
  } else {
    j["output"] = {{"kind", "bits"}};
  }
  return j;
}

}  // namespace extcliff
