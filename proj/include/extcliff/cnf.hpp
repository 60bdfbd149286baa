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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "extcliff/circuit.hpp"

namespace extcliff {

/// Signed 1-based variable index: +3 is x3, -3 is NOT x3.
using Literal = int;

/// Conjunction of clauses over x1..xn. Clauses have 1 to 4 literals; the
/// DIMACS reader pads short clauses to 3 by repeating the last literal.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  /// Throws std::invalid_argument on a zero or out-of-range literal, an
  /// empty or over-wide clause, or a variable that appears in no clause.
  void validate() const;
  bool evaluate(std::uint64_t assignment) const;  // bit i-1 holds x_i
  std::string to_dimacs() const;
};

struct DimacsOptions {
  /// Adds (x v -x v x) for every variable missing from all clauses.
  bool auto_pad = false;
};

/// Throws ParseError on malformed input, clauses wider than 3, and variables
/// that appear in no clause (unless auto_pad is set).
CnfFormula parse_dimacs(std::string_view text, const DimacsOptions& options = {});

inline constexpr std::size_t kMaxBruteForceVars = 24;

/// Bitmask of satisfying assignments, bit a of word a / 64 for assignment a.
std::vector<std::uint64_t> truth_table(const CnfFormula& f);
/// #1(f); throws std::invalid_argument for more than 24 variables.
std::uint64_t count_sat(const CnfFormula& f);
/// |#0(f) - #1(f)|.
std::uint64_t abs_sat(const CnfFormula& f);

/// Each clause gains the literal y = x_{n+1}, so that S(result) = 2 #1(f).
/// The result has clause width up to 4.
CnfFormula reduce_count_to_abssat(const CnfFormula& f);

/// Wire roles of a compiled formula circuit.
struct ReductionLayout {
  std::size_t num_vars = 0;
  std::vector<std::size_t> input_wires;
  std::size_t target = 0;
  /// Constant lines held at 1 (0 after X framing) used as Toffoli controls.
  std::vector<std::size_t> ones_wires;
  /// Every ancilla, the ones lines included; the block A.
  std::vector<std::size_t> ancilla_wires;
  /// Magic-state wires, in T order (M_f only).
  std::vector<std::size_t> magic_wires;
  std::size_t width = 0;
  std::size_t toffoli_count = 0;
  std::size_t t_count = 0;
  std::size_t measurement_count = 0;

  std::size_t s() const { return ancilla_wires.size(); }
  std::size_t K() const { return magic_wires.size(); }
};

nlohmann::json layout_to_json(const ReductionLayout& layout);

struct CompiledFormula {
  Circuit circuit;
  ReductionLayout layout;
};

/// C_f: Toffoli gates only, with C_f|x, 1, 1^s> = |x, f(x), 1^s>.
CompiledFormula compile_to_toffoli(const CnfFormula& f);

/// Q_f over {H, S, CX, T}: Q_f|x, y, 0_A> = |x, y xor f(x), 0_A>.
CompiledFormula compile_to_clifford_t(const CnfFormula& f);

struct ReductionTask {
  Task task;
  ReductionLayout layout;
};

/// M_f in (PROD, NONADAPT, BITS). Pr(all wires read 0) = S(f)^2 / 2^{2n+K}.
ReductionTask build_mf_task(const CnfFormula& f);

/// G_f in (BITS, ADAPT, BITS). Pr(x = 0...0, target = 1, A = 0) = #1(f) / 2^n.
ReductionTask build_gf_task(const CnfFormula& f);

/// Outcome the G_f extraction reads: all zeros except the target.
Bits gf_accepting_outcome(const ReductionLayout& layout);

struct Extraction {
  double value = 0.0;
  std::uint64_t rounded = 0;
  /// |rounded - value| > 1e-4.
  bool flagged = false;
};

/// S(f) = 2^{n + K/2} sqrt(p_joint), given log2 p_joint.
Extraction extract_abssat_log2(double log2_p_joint, std::size_t n, std::size_t K);
Extraction extract_abssat(double p_joint, std::size_t n, std::size_t K);

/// #f = 2^n p.
Extraction extract_count(double p, std::size_t n);

/// Runs a circuit of X, CX and TOF gates on a classical bit-string.
Bits run_classical(const Circuit& circuit, Bits bits);

}  // namespace extcliff
