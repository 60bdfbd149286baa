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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "extcliff/circuit.hpp"
#include "extcliff/classify.hpp"
#include "extcliff/cnf.hpp"
#include "extcliff/errors.hpp"
#include "extcliff/simulators.hpp"
#include "extcliff/statevec.hpp"
#include "extcliff/task_json.hpp"

namespace {

using nlohmann::json;
using namespace extcliff;

enum ExitCode : int {
  kOk = 0,
  kParse = 1,
  kProfile = 2,
  kWidth = 3,
  kRefusal = 4,
  kMismatch = 5,
};

struct CliConfig {
  std::uint64_t seed = 0;
  std::size_t width_limit = OracleLimits{}.width_limit;
  std::size_t branch_limit = OracleLimits{}.branch_limit;
  std::size_t b_max = kDefaultBMax;
  std::string format = "json";

  OracleLimits limits() const { return {width_limit, branch_limit}; }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed of sample i, independent of how many samples are drawn.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) { return splitmix64(splitmix64(seed) ^ i); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::size_t> parse_wires(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad wire list '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

json wires_json(std::span<const std::size_t> wires) { return json(std::vector<std::size_t>(wires.begin(), wires.end())); }

void emit(const CliConfig& cfg, json j, const std::string& text) {
  if (cfg.format == "json") {
    j["seed"] = cfg.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void add_common(CLI::App* sub, CliConfig& cfg, const std::string& default_format) {
  cfg.format = default_format;
  sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  sub->add_option("--width-limit", cfg.width_limit, "Dense oracle live-width limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--branch-limit", cfg.branch_limit, "log2 of the oracle branch budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--b-max", cfg.b_max, "Largest wire set for STR(b) on product tasks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

/// "(xiii)" stays as is, "Thm 6" becomes "(Thm 6)".
std::string cite(const std::string& provenance) {
  return !provenance.empty() && provenance.front() == '(' ? provenance : "(" + provenance + ")";
}

json refusal_json(const HardnessRefusal& r) {
  return {{"profile", to_string(r.profile)},
          {"notion", to_string(r.notion)},
          {"label", to_string(r.label)},
          {"provenance", r.provenance}};
}

IngredientProfile profile_of(const Task& task) {
  try {
    return classify_task(task);
  } catch (const std::invalid_argument& e) {
    throw ProfileError(e.what());
  }
}

// simulate / sample

struct SimulateArgs {
  std::string task_file;
  std::string notion = "STR";
  std::string wires;
  std::string values;
  bool force_oracle = false;
  std::size_t shots = 1;
};

int cmd_simulate(const CliConfig& cfg, const SimulateArgs& args) {
  const Task task = parse_task(read_file(args.task_file));
  SimQuery q;
  q.notion = parse_notion(args.notion);
  q.wires = parse_wires(args.wires);
  if (!args.values.empty()) q.values = parse_bits(args.values);
  q.seed = cfg.seed;
  DispatchOptions opts;
  opts.force_oracle = args.force_oracle;
  opts.limits = cfg.limits();
  opts.b_max = cfg.b_max;
  const SimResult r = dispatch(task, q, opts);
  json j{{"profile", to_string(profile_of(task))}, {"notion", to_string(q.notion)}};
  std::ostringstream text;
  int code = kOk;
  if (const auto* p = std::get_if<ProbabilityResult>(&r)) {
    j["result"] = {{"probability", p->probability}, {"algorithm", p->algorithm}};
    text.precision(17);
    text << p->probability << "\n";
  } else if (const auto* s = std::get_if<SampleResult>(&r)) {
    j["result"] = {{"wires", wires_json(s->wires)}, {"values", bits_to_string(s->values)}, {"algorithm", s->algorithm}};
    text << bits_to_string(s->values) << "\n";
  } else {
    const auto& h = std::get<HardnessRefusal>(r);
    j["refusal"] = refusal_json(h);
    text << "refused: " << to_string(h.label) << " " << cite(h.provenance) << "\n";
    code = kRefusal;
  }
  emit(cfg, j, text.str());
  return code;
}

int cmd_sample(const CliConfig& cfg, const SimulateArgs& args) {
  const Task task = parse_task(read_file(args.task_file));
  SimQuery q;
  q.notion = parse_notion(args.notion);
  if (is_strong(q.notion)) throw std::invalid_argument("sample needs a weak notion");
  q.wires = parse_wires(args.wires);
  DispatchOptions opts;
  opts.force_oracle = args.force_oracle;
  opts.limits = cfg.limits();
  opts.b_max = cfg.b_max;
  json samples = json::array();
  std::map<std::string, std::size_t> counts;
  std::string algorithm;
  std::vector<std::size_t> wires;
  for (std::size_t i = 0; i < args.shots; ++i) {
    q.seed = sample_seed(cfg.seed, i);
    const SimResult r = dispatch(task, q, opts);
    if (const auto* h = std::get_if<HardnessRefusal>(&r)) {
      emit(cfg, {{"refusal", refusal_json(*h)}},
           std::string("refused: ") + to_string(h->label) + " " + cite(h->provenance) + "\n");
      return kRefusal;
    }
    const auto& s = std::get<SampleResult>(r);
    const std::string y = bits_to_string(s.values);
    samples.push_back(y);
    ++counts[y];
    algorithm = s.algorithm;
    wires = s.wires;
  }
  std::ostringstream text;
  for (const auto& [y, c] : counts) text << y << " " << c << "\n";
  emit(cfg,
       {{"notion", to_string(q.notion)},
        {"wires", wires_json(wires)},
        {"algorithm", algorithm},
        {"shots", args.shots},
        {"counts", counts},
        {"samples", samples}},
       text.str());
  return kOk;
}

// oracle

struct OracleArgs {
  std::string task_file;
  std::string query = "joint";
  std::string wires;
  std::string values;
  std::string cond_wires;
  std::string cond_values;
  std::size_t shots = 1;
};

int cmd_oracle(const CliConfig& cfg, const OracleArgs& args) {
  const Task task = parse_task(read_file(args.task_file));
  const OracleLimits limits = cfg.limits();
  std::vector<std::size_t> wires = parse_wires(args.wires);
  if (wires.empty()) {
    wires.resize(task.num_qubits());
    std::iota(wires.begin(), wires.end(), std::size_t{0});
  }
  json j{{"query", args.query}, {"wires", wires_json(wires)}};
  std::ostringstream text;
  text.precision(17);
  if (args.query == "joint" || args.query == "marginal") {
    const Bits values = parse_bits(args.values);
    if (values.size() != wires.size()) throw std::invalid_argument("values must match wires");
    const double lp = log2_marginal_probability(task, wires, values, limits);
    j["probability"] = std::exp2(lp);
    j["log2_probability"] = std::isfinite(lp) ? json(lp) : json(nullptr);
    text << std::exp2(lp) << "\n";
  } else if (args.query == "postselect") {
    const Bits values = parse_bits(args.values);
    const auto cw = parse_wires(args.cond_wires);
    const Bits cv = parse_bits(args.cond_values);
    if (values.size() != wires.size() || cv.size() != cw.size()) {
      throw std::invalid_argument("values must match wires");
    }
    const double p = postselect_probability(task, cw, cv, wires, values, limits);
    j["probability"] = p;
    text << p << "\n";
  } else if (args.query == "distribution") {
    const auto dist = output_distribution(task, limits);
    json d = json::object();
    for (std::size_t y = 0; y < dist.size(); ++y) {
      if (dist[y] < kBranchPruneThreshold) continue;
      Bits bits(task.num_qubits());
      for (std::size_t q = 0; q < bits.size(); ++q) bits[q] = (y >> q) & 1u;
      d[bits_to_string(bits)] = dist[y];
      text << bits_to_string(bits) << " " << dist[y] << "\n";
    }
    j["distribution"] = d;
  } else if (args.query == "sample") {
    json samples = json::array();
    for (std::size_t i = 0; i < args.shots; ++i) {
      std::mt19937_64 rng(sample_seed(cfg.seed, i));
      const std::string y = bits_to_string(oracle_sample(task, wires, rng, limits));
      samples.push_back(y);
      text << y << "\n";
    }
    j["samples"] = samples;
  } else {
    throw std::invalid_argument("unknown oracle query '" + args.query + "'");
  }
  emit(cfg, j, text.str());
  return kOk;
}

// compile

struct CompileArgs {
  std::string dimacs_file;
  std::string target = "toffoli";
  std::string out;
  bool verify = false;
  bool auto_pad = false;
};

CnfFormula load_formula(const std::string& path, bool auto_pad) {
  DimacsOptions opts;
  opts.auto_pad = auto_pad;
  return parse_dimacs(read_file(path), opts);
}

/// Exhaustive truth-table and ancilla check of C_f.
bool verify_toffoli(const CnfFormula& f, const CompiledFormula& cf) {
  if (f.num_vars > kMaxBruteForceVars) throw std::invalid_argument("too many variables to verify");
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.num_vars); ++x) {
    Bits in(cf.layout.width, 1);
    for (std::size_t i = 0; i < f.num_vars; ++i) in[i] = (x >> i) & 1u;
    Bits want = in;
    want[cf.layout.target] = f.evaluate(x) ? 1 : 0;
    if (run_classical(cf.circuit, in) != want) return false;
  }
  return true;
}

/// Q_f on every basis input |x, 0, 0_A>, via the dense oracle.
bool verify_clifford_t(const CnfFormula& f, const CompiledFormula& cf, const OracleLimits& limits) {
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.num_vars); ++x) {
    Bits in(cf.layout.width, 0);
    for (std::size_t i = 0; i < f.num_vars; ++i) in[i] = (x >> i) & 1u;
    Bits want = in;
    want[cf.layout.target] = f.evaluate(x) ? 1 : 0;
    const Task t(BasisInput{in}, cf.circuit, BasisOutput{});
    if (std::abs(joint_probability(t, want, limits) - 1.0) > 1e-9) return false;
  }
  return true;
}

int cmd_compile(const CliConfig& cfg, const CompileArgs& args) {
  const CnfFormula f = load_formula(args.dimacs_file, args.auto_pad);
  json j{{"target", args.target}, {"num_vars", f.num_vars}, {"num_clauses", f.clauses.size()}};
  std::string artifact;
  std::string extension;
  ReductionLayout layout;
  std::optional<bool> verified;
  if (args.target == "toffoli" || args.target == "cliffordt") {
    const CompiledFormula cf = args.target == "toffoli" ? compile_to_toffoli(f) : compile_to_clifford_t(f);
    layout = cf.layout;
    artifact = serialize_circuit(cf.circuit);
    extension = ".circ";
    if (args.verify) {
      verified = args.target == "toffoli" ? verify_toffoli(f, cf) : verify_clifford_t(f, cf, cfg.limits());
    }
  } else if (args.target == "mf" || args.target == "gf") {
    const ReductionTask rt = args.target == "mf" ? build_mf_task(f) : build_gf_task(f);
    layout = rt.layout;
    artifact = task_to_json(rt.task).dump(2) + "\n";
    extension = ".task.json";
    j["profile"] = to_string(classify_task(rt.task));
    if (args.target == "mf") {
      j["K"] = layout.K();
      j["postselect"] = {{"wires", wires_json(layout.magic_wires)}, {"values", std::string(layout.K(), '0')}};
    } else {
      j["accepting_outcome"] = bits_to_string(gf_accepting_outcome(layout));
    }
    if (args.verify) {
      const std::uint64_t want = args.target == "mf" ? abs_sat(f) : count_sat(f);
      std::uint64_t got = 0;
      if (args.target == "mf") {
        std::vector<std::size_t> all(layout.width);
        std::iota(all.begin(), all.end(), std::size_t{0});
        const double lp = log2_marginal_probability(rt.task, all, Bits(layout.width, 0), cfg.limits());
        got = extract_abssat_log2(lp, f.num_vars, layout.K()).rounded;
      } else {
        got = extract_count(joint_probability(rt.task, gf_accepting_outcome(layout), cfg.limits()), f.num_vars).rounded;
      }
      verified = got == want;
    }
  } else {
    throw std::invalid_argument("unknown target '" + args.target + "'");
  }
  j["layout"] = layout_to_json(layout);
  if (verified) j["verified"] = *verified;
  std::ostringstream text;
  if (!args.out.empty()) {
    write_file(args.out + extension, artifact);
    write_file(args.out + ".layout.json", layout_to_json(layout).dump(2) + "\n");
    j["files"] = {args.out + extension, args.out + ".layout.json"};
    text << "wrote " << args.out << extension << " and " << args.out << ".layout.json\n";
  } else {
    j["artifact"] = artifact;
    text << artifact;
  }
  if (verified) text << "verify: " << (*verified ? "ok" : "FAILED") << "\n";
  emit(cfg, j, text.str());
  return verified && !*verified ? kMismatch : kOk;
}

// count

struct CountArgs {
  std::string dimacs_file;
  std::string via = "brute";
  bool auto_pad = false;
};

json count_route(const std::string& via, const CnfFormula& f, const OracleLimits& limits) {
  if (via == "brute") return {{"count", count_sat(f)}};
  if (via == "abssat") {
    const std::uint64_t s = abs_sat(reduce_count_to_abssat(f));
    return {{"count", s / 2}, {"abssat", s}};
  }
  if (via == "gf") {
    const ReductionTask g = build_gf_task(f);
    const double p = joint_probability(g.task, gf_accepting_outcome(g.layout), limits);
    const Extraction e = extract_count(p, f.num_vars);
    return {{"count", e.rounded}, {"probability", p}, {"value", e.value}, {"flagged", e.flagged}};
  }
  if (via == "mf") {
    const CnfFormula tilde = reduce_count_to_abssat(f);
    const ReductionTask m = build_mf_task(tilde);
    std::vector<std::size_t> all(m.layout.width);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const double lp = log2_marginal_probability(m.task, all, Bits(m.layout.width, 0), limits);
    const Extraction e = extract_abssat_log2(lp, tilde.num_vars, m.layout.K());
    return {{"count", e.rounded / 2}, {"abssat", e.rounded}, {"value", e.value}, {"flagged", e.flagged}};
  }
  throw std::invalid_argument("unknown route '" + via + "'");
}

int cmd_count(const CliConfig& cfg, const CountArgs& args) {
  const CnfFormula f = load_formula(args.dimacs_file, args.auto_pad);
  const std::vector<std::string> routes =
      args.via == "all" ? std::vector<std::string>{"brute", "abssat", "gf"} : std::vector<std::string>{args.via};
  json j{{"routes", json::object()}};
  std::ostringstream text;
  std::optional<std::uint64_t> first;
  bool agree = true;
  for (const auto& r : routes) {
    const json res = count_route(r, f, cfg.limits());
    j["routes"][r] = res;
    const auto c = res["count"].get<std::uint64_t>();
    if (first && *first != c) agree = false;
    if (!first) first = c;
    text << (routes.size() > 1 ? r + " " : "") << c << "\n";
  }
  j["count"] = *first;
  j["agree"] = agree;
  emit(cfg, j, text.str());
  return agree ? kOk : kMismatch;
}

// table / classify

struct TableArgs {
  bool derive = false;
  bool minimality = false;
  std::string profile;
  std::string notion;
};

json entry_json(const TableEntry& e) {
  return {{"profile", to_string(e.profile)},
          {"notion", to_string(e.notion)},
          {"label", to_string(e.label)},
          {"provenance", e.provenance},
          {"boxed", e.boxed}};
}

std::string render_table(const std::vector<TableEntry>& entries) {
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  out << pad("", 34);
  for (SimNotion n : all_notions()) out << pad(to_string(n), 16);
  out << "\n";
  for (const auto& p : all_profiles()) {
    out << pad(to_string(p), 34);
    for (SimNotion n : all_notions()) {
      const auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const TableEntry& e) { return e.profile == p && e.notion == n; });
      std::string cell = "?";
      if (it != entries.end()) {
        cell = std::string(it->boxed ? "[" : "") + to_string(it->label) + (it->boxed ? "]" : "") + " " + it->provenance;
      }
      out << pad(cell, 16);
    }
    out << "\n";
  }
  return out.str();
}

int cmd_table(const CliConfig& cfg, const TableArgs& args) {
  std::ostringstream text;
  json j;
  int code = kOk;
  if (!args.profile.empty() || !args.notion.empty()) {
    if (args.profile.empty() || args.notion.empty()) throw std::invalid_argument("--profile and --notion go together");
    const auto p = parse_profile(args.profile);
    const auto n = parse_notion(args.notion);
    const TableEntry e = lookup(p, n);
    j = entry_json(e);
    json chain = json::array();
    text << to_string(p) << " x " << to_string(n) << ": " << to_string(e.label) << " " << cite(e.provenance)
         << (e.boxed ? " boxed" : "") << "\n";
    for (const auto& step : explain(p, n)) {
      chain.push_back({{"profile", to_string(step.profile)},
                       {"notion", to_string(step.notion)},
                       {"label", to_string(step.label)},
                       {"rule", step.rule}});
      text << "  " << step.rule << ": " << to_string(step.profile) << " x " << to_string(step.notion) << " = "
           << to_string(step.label) << "\n";
    }
    j["derivation"] = chain;
  } else if (args.derive) {
    const DeductionResult d = deduce_full_table(boxed_entries());
    const auto diff = diff_against_table(d);
    json cells = json::array();
    for (const auto& e : d.entries) cells.push_back(entry_json(e));
    j = {{"cells", cells}, {"conflicts", d.conflicts}, {"gaps", d.gaps}, {"diff", diff}, {"identical", diff.empty()}};
    text << render_table(d.entries);
    for (const auto& c : d.conflicts) text << "conflict: " << c << "\n";
    for (const auto& g : d.gaps) text << "gap: " << g << "\n";
    for (const auto& line : diff) text << "diff: " << line << "\n";
    text << (diff.empty() && d.complete() ? "derived table matches all 40 cells\n" : "derived table differs\n");
    if (!diff.empty() || !d.complete()) code = kMismatch;
  } else {
    json cells = json::array();
    for (const auto& e : classification_table()) cells.push_back(entry_json(e));
    j = {{"cells", cells}};
    text << render_table(classification_table());
  }
  if (args.minimality) {
    json probe = json::array();
    for (const auto& f : minimality_probe()) {
      probe.push_back({{"removed", f.removed}, {"gaps", f.gaps}, {"changed", f.changed}});
      text << "without " << f.removed << ": " << f.gaps << " gaps, " << f.changed << " changed\n";
    }
    j["minimality"] = probe;
  }
  emit(cfg, j, text.str());
  return code;
}

int cmd_classify(const CliConfig& cfg, const std::string& task_file) {
  const Task task = parse_task(read_file(task_file));
  const IngredientProfile p = profile_of(task);
  json cells = json::array();
  std::ostringstream text;
  text << to_string(p) << "\n";
  for (SimNotion n : all_notions()) {
    const TableEntry e = lookup(p, n);
    cells.push_back(entry_json(e));
    text << "  " << to_string(n) << ": " << to_string(e.label) << " " << cite(e.provenance) << "\n";
  }
  emit(cfg, {{"profile", to_string(p)}, {"n", task.num_qubits()}, {"cells", cells}}, text.str());
  return kOk;
}

int report(int code, const std::string& kind, const std::string& message) {
  json j{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Clifford circuit simulation and reductions"};
  app.require_subcommand(1);

  SimulateArgs sim;
  SimulateArgs smp;
  smp.notion = "WEAK";
  OracleArgs orc;
  CompileArgs cmp;
  CountArgs cnt;
  TableArgs tab;
  std::string classify_file;

  auto* simulate = app.add_subcommand("simulate", "Answer a simulation query or refuse with the cell's label");
  simulate->add_option("task", sim.task_file, "Task JSON file")->required();
  simulate->add_option("--notion", sim.notion, "STR, STR(n), STR(1), WEAK(n) or WEAK(1)")->capture_default_str();
  simulate->add_option("--wires", sim.wires, "Comma-separated wires (default all)");
  simulate->add_option("--values", sim.values, "Bit string for strong notions");
  simulate->add_flag("--force-oracle", sim.force_oracle, "Answer hard cells with the dense oracle");

  auto* sample = app.add_subcommand("sample", "Draw repeated weak samples");
  sample->add_option("task", smp.task_file, "Task JSON file")->required();
  sample->add_option("--notion", smp.notion, "WEAK(n) or WEAK(1)")->capture_default_str();
  sample->add_option("--wires", smp.wires, "Comma-separated wires (default all)");
  sample->add_option("--shots", smp.shots, "Number of samples")->check(CLI::PositiveNumber)->capture_default_str();
  sample->add_flag("--force-oracle", smp.force_oracle, "Sample hard cells with the dense oracle");

  auto* oracle = app.add_subcommand("oracle", "Query the dense state-vector oracle");
  oracle->add_option("task", orc.task_file, "Task JSON file")->required();
  oracle->add_option("--query", orc.query, "joint, marginal, postselect, distribution or sample")
      ->check(CLI::IsMember({"joint", "marginal", "postselect", "distribution", "sample"}))
      ->capture_default_str();
  oracle->add_option("--wires", orc.wires, "Comma-separated wires (default all)");
  oracle->add_option("--values", orc.values, "Bit string");
  oracle->add_option("--cond-wires", orc.cond_wires, "Conditioning wires for postselect");
  oracle->add_option("--cond-values", orc.cond_values, "Conditioning values for postselect");
  oracle->add_option("--shots", orc.shots, "Samples for --query sample")->check(CLI::PositiveNumber);

  auto* compile = app.add_subcommand("compile", "Compile a DIMACS formula to a circuit or task");
  compile->add_option("dimacs", cmp.dimacs_file, "DIMACS CNF file")->required();
  compile->add_option("--target", cmp.target, "toffoli, cliffordt, mf or gf")
      ->check(CLI::IsMember({"toffoli", "cliffordt", "mf", "gf"}))
      ->capture_default_str();
  compile->add_option("--out", cmp.out, "Write PREFIX.circ or PREFIX.task.json plus PREFIX.layout.json");
  compile->add_flag("--verify", cmp.verify, "Check the artifact against brute force");
  compile->add_flag("--auto-pad", cmp.auto_pad, "Add a tautological clause for unused variables");

  auto* count = app.add_subcommand("count", "Count satisfying assignments");
  count->add_option("dimacs", cnt.dimacs_file, "DIMACS CNF file")->required();
  count->add_option("--via", cnt.via, "brute, abssat, gf, mf or all")
      ->check(CLI::IsMember({"brute", "abssat", "gf", "mf", "all"}))
      ->capture_default_str();
  count->add_flag("--auto-pad", cnt.auto_pad, "Add a tautological clause for unused variables");

  auto* table = app.add_subcommand("table", "Print or re-derive the classification table");
  table->add_flag("--derive", tab.derive, "Re-derive from the boxed cells; exit 0 iff identical");
  table->add_flag("--minimality", tab.minimality, "Drop each boxed cell in turn and report the effect");
  table->add_option("--profile", tab.profile, "Single cell: profile such as BITS,ADAPT,PROD");
  table->add_option("--notion", tab.notion, "Single cell: notion");

  auto* classify = app.add_subcommand("classify", "Report the ingredient profile of a task");
  classify->add_option("task", classify_file, "Task JSON file")->required();

  CliConfig sim_cfg, smp_cfg, orc_cfg, cmp_cfg, cnt_cfg, tab_cfg, cls_cfg;
  add_common(simulate, sim_cfg, "json");
  add_common(sample, smp_cfg, "json");
  add_common(oracle, orc_cfg, "json");
  add_common(compile, cmp_cfg, "json");
  add_common(count, cnt_cfg, "json");
  add_common(table, tab_cfg, "text");
  add_common(classify, cls_cfg, "json");
  table->add_flag_callback("--json", [&] { tab_cfg.format = "json"; }, "Same as --format json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*simulate) return cmd_simulate(sim_cfg, sim);
    if (*sample) return cmd_sample(smp_cfg, smp);
    if (*oracle) return cmd_oracle(orc_cfg, orc);
    if (*compile) return cmd_compile(cmp_cfg, cmp);
    if (*count) return cmd_count(cnt_cfg, cnt);
    if (*table) return cmd_table(tab_cfg, tab);
    if (*classify) return cmd_classify(cls_cfg, classify_file);
  } catch (const ParseError& e) {
    return report(kParse, "parse", e.what());
  } catch (const ProfileError& e) {
    return report(kProfile, "profile", e.what());
  } catch (const WidthLimitExceeded& e) {
    return report(kWidth, "width", e.what());
  } catch (const BranchLimitExceeded& e) {
    return report(kWidth, "branch", e.what());
  } catch (const std::exception& e) {
    return report(kParse, "usage", e.what());
  }
  return kOk;
}
