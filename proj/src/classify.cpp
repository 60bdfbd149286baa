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

#include "extcliff/classify.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

namespace extcliff {

const char* to_string(SimNotion notion) {
  switch (notion) {
    case SimNotion::Weak1:
      return "WEAK(1)";
    case SimNotion::WeakN:
      return "WEAK(n)";
    case SimNotion::Str1:
      return "STR(1)";
    case SimNotion::StrN:
      return "STR(n)";
    case SimNotion::Str:
      return "STR";
  }
  return "?";
}

const char* to_string(ComplexityLabel label) {
  switch (label) {
    case ComplexityLabel::P:
      return "P";
    case ComplexityLabel::SharpP:
      return "#P";
    case ComplexityLabel::QC:
      return "QC";
    case ComplexityLabel::PH:
      return "PH";
  }
  return "?";
}

SimNotion parse_notion(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  if (s == "STR") return SimNotion::Str;
  if (s == "STRN") return SimNotion::StrN;
  if (s == "STR1") return SimNotion::Str1;
  if (s == "WEAK" || s == "WEAKN") return SimNotion::WeakN;
  if (s == "WEAK1") return SimNotion::Weak1;
  throw std::invalid_argument("unknown simulation notion '" + std::string(text) + "'");
}

std::vector<SimNotion> all_notions() {
  return {SimNotion::Weak1, SimNotion::WeakN, SimNotion::Str1, SimNotion::StrN, SimNotion::Str};
}

bool is_strong(SimNotion notion) {
  return notion == SimNotion::Str1 || notion == SimNotion::StrN || notion == SimNotion::Str;
}

namespace {

using L = ComplexityLabel;
constexpr auto kBits = InputKind::Bits;
constexpr auto kProd = InputKind::Prod;
constexpr auto kNon = Adaptivity::NonAdapt;
constexpr auto kAdapt = Adaptivity::Adapt;

struct Cell {
  L label;
  const char* provenance;
  bool boxed;
};

struct Row {
  IngredientProfile profile;
  std::array<Cell, 5> cells;  // WEAK(1), WEAK(n), STR(1), STR(n), STR
};

const Row kRows[8] = {
    {{kBits, kNon, OutputKind::Bits},
     {{{L::P, "(i)", false}, {L::P, "(ii)", false}, {L::P, "(iii)", false}, {L::P, "(iv)", false},
       {L::P, "JV4", true}}}},
    {{kProd, kNon, OutputKind::Bits},
     {{{L::P, "(v)", false}, {L::PH, "JV7", true}, {L::P, "JV1", false}, {L::SharpP, "Thm 1", true},
       {L::SharpP, "JV6", false}}}},
    {{kBits, kAdapt, OutputKind::Bits},
     {{{L::P, "(vi)", false}, {L::P, "JV5", true}, {L::SharpP, "JV2", true},
       {L::SharpP, "Thm 2", true}, {L::SharpP, "(vii)", false}}}},
    {{kProd, kAdapt, OutputKind::Bits},
     {{{L::QC, "JV3", true}, {L::QC, "(viii)", false}, {L::SharpP, "(ix)", false},
       {L::SharpP, "(x)", false}, {L::SharpP, "(xi)", false}}}},
    {{kBits, kNon, OutputKind::Prod},
     {{{L::P, "(xii)", false}, {L::PH, "Thm 3", true}, {L::P, "(xiii)", false},
       {L::SharpP, "Thm 4", true}, {L::SharpP, "(xiv)", false}}}},
    {{kProd, kNon, OutputKind::Prod},
     {{{L::P, "(xv)", false}, {L::PH, "(xvi)", false}, {L::P, "Thm 5", true},
       {L::SharpP, "(xvii)", false}, {L::SharpP, "(xviii)", false}}}},
    {{kBits, kAdapt, OutputKind::Prod},
     {{{L::P, "Thm 6", true}, {L::PH, "(xix)", false}, {L::SharpP, "(xx)", false},
       {L::SharpP, "(xxi)", false}, {L::SharpP, "(xxii)", false}}}},
    {{kProd, kAdapt, OutputKind::Prod},
     {{{L::QC, "(xxiii)", false}, {L::QC, "(xxiv)", false}, {L::SharpP, "(xxv)", false},
       {L::SharpP, "(xxvi)", false}, {L::SharpP, "(xxvii)", false}}}},
};

std::vector<TableEntry> build_table() {
  std::vector<TableEntry> out;
  for (const Row& row : kRows) {
    for (std::size_t c = 0; c < 5; ++c) {
      out.push_back({row.profile, all_notions()[c], row.cells[c].label, row.cells[c].provenance,
                     row.cells[c].boxed});
    }
  }
  return out;
}

std::size_t profile_index(const IngredientProfile& p) {
  for (std::size_t r = 0; r < 8; ++r) {
    if (kRows[r].profile == p) return r;
  }
  throw std::logic_error("unknown profile");
}

std::size_t cell_index(const IngredientProfile& p, SimNotion n) {
  return profile_index(p) * 5 + static_cast<std::size_t>(n);
}

std::string cell_name(const IngredientProfile& p, SimNotion n) {
  return to_string(p) + " x " + to_string(n);
}

/// One derived fact (cell, label) with the fact it came from.
struct Fact {
  std::size_t cell;
  L label;
  std::optional<std::size_t> parent;  // index into the fact list
  std::string rule;
};

/// Immediate consequences of (profile, notion, label).
std::vector<std::pair<std::size_t, std::string>> consequences(std::size_t cell, L label) {
  const IngredientProfile p = kRows[cell / 5].profile;
  const auto notion = static_cast<SimNotion>(cell % 5);
  std::vector<std::pair<std::size_t, std::string>> out;
  // Ingredient inclusion: flip one component.
  std::vector<IngredientProfile> neighbours;
  for (int k = 0; k < 3; ++k) {
    IngredientProfile q = p;
    if (k == 0) q.input = p.input == kBits ? kProd : kBits;
    if (k == 1) q.adaptivity = p.adaptivity == kNon ? kAdapt : kNon;
    if (k == 2) q.output = p.output == OutputKind::Bits ? OutputKind::Prod : OutputKind::Bits;
    neighbours.push_back(q);
  }
  for (const IngredientProfile& q : neighbours) {
    if (label == L::P && q.is_subset_of(p)) out.emplace_back(cell_index(q, notion), "P holds on a subset");
    if (label != L::P && p.is_subset_of(q)) {
      out.emplace_back(cell_index(q, notion), "hardness holds on a superset");
    }
  }
  if (label == L::P) {
    if (notion == SimNotion::Str) {
      for (SimNotion m : {SimNotion::Str1, SimNotion::StrN, SimNotion::WeakN}) {
        out.emplace_back(cell_index(p, m), "STR efficient implies " + std::string(to_string(m)));
      }
    } else if (notion != SimNotion::Weak1) {
      out.emplace_back(cell_index(p, SimNotion::Weak1),
                       std::string(to_string(notion)) + " efficient implies WEAK(1)");
    }
  } else if (label == L::SharpP) {
    if (notion == SimNotion::Str1 || notion == SimNotion::StrN) {
      out.emplace_back(cell_index(p, SimNotion::Str),
                       std::string(to_string(notion)) + " #P-hard implies STR #P-hard");
    }
  } else if (label == L::QC) {
    if (notion == SimNotion::Weak1) {
      out.emplace_back(cell_index(p, SimNotion::WeakN), "WEAK(1) QC-hard implies WEAK(n) QC-hard");
    }
  }
  return out;
}

struct Closure {
  std::vector<Fact> facts;
  // first fact index per (cell, label)
  std::map<std::pair<std::size_t, int>, std::size_t> first;
};

Closure close(std::span<const TableEntry> core) {
  Closure c;
  std::deque<std::size_t> queue;
  auto add = [&](std::size_t cell, L label, std::optional<std::size_t> parent, std::string rule) {
    const auto key = std::make_pair(cell, static_cast<int>(label));
    if (c.first.count(key)) return;
    c.first[key] = c.facts.size();
    queue.push_back(c.facts.size());
    c.facts.push_back({cell, label, parent, std::move(rule)});
  };
  for (const TableEntry& e : core) add(cell_index(e.profile, e.notion), e.label, std::nullopt, "boxed");
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const Fact f = c.facts[i];
    for (auto& [cell, rule] : consequences(f.cell, f.label)) add(cell, f.label, i, rule);
  }
  return c;
}

/// Final label of a cell from the set of labels reaching it.
std::optional<L> resolve(const Closure& c, std::size_t cell, std::string* conflict) {
  bool has[4] = {};
  for (int l = 0; l < 4; ++l) has[l] = c.first.count({cell, l}) > 0;
  const bool p = has[static_cast<int>(L::P)];
  const bool sharp = has[static_cast<int>(L::SharpP)];
  const bool qc = has[static_cast<int>(L::QC)];
  const bool ph = has[static_cast<int>(L::PH)];
  if (p && (sharp || qc || ph)) {
    if (conflict) *conflict = "P vs hardness";
    return std::nullopt;
  }
  if (sharp && (qc || ph)) {
    if (conflict) *conflict = "#P vs weak hardness";
    return std::nullopt;
  }
  if (p) return L::P;
  if (sharp) return L::SharpP;
  if (qc) return L::QC;
  if (ph) return L::PH;
  return std::nullopt;
}

}  // namespace

const std::vector<TableEntry>& classification_table() {
  static const std::vector<TableEntry> table = build_table();
  return table;
}

TableEntry lookup(const IngredientProfile& profile, SimNotion notion) {
  return classification_table()[cell_index(profile, notion)];
}

std::vector<TableEntry> boxed_entries() {
  std::vector<TableEntry> out;
  for (const TableEntry& e : classification_table()) {
    if (e.boxed) out.push_back(e);
  }
  return out;
}

DeductionResult deduce_full_table(std::span<const TableEntry> core) {
  const Closure c = close(core);
  DeductionResult result;
  const auto& table = classification_table();
  for (std::size_t cell = 0; cell < table.size(); ++cell) {
    std::string conflict;
    const auto label = resolve(c, cell, &conflict);
    const std::string name = cell_name(table[cell].profile, table[cell].notion);
    if (!label) {
      if (conflict.empty()) {
        result.gaps.push_back(name);
      } else {
        result.conflicts.push_back(name + ": " + conflict);
      }
      continue;
    }
    TableEntry e = table[cell];
    e.label = *label;
    e.boxed = std::any_of(core.begin(), core.end(), [&](const TableEntry& k) {
      return k.profile == e.profile && k.notion == e.notion;
    });
    result.entries.push_back(e);
  }
  return result;
}

std::vector<std::string> diff_against_table(const DeductionResult& derived) {
  std::vector<std::string> out;
  for (const TableEntry& want : classification_table()) {
    const auto it = std::find_if(derived.entries.begin(), derived.entries.end(), [&](const TableEntry& e) {
      return e.profile == want.profile && e.notion == want.notion;
    });
    const std::string name = cell_name(want.profile, want.notion);
    if (it == derived.entries.end()) {
      out.push_back(name + ": not derived");
    } else if (it->label != want.label) {
      out.push_back(name + ": derived " + to_string(it->label) + ", table " + to_string(want.label));
    }
  }
  return out;
}

std::vector<DerivationStep> explain(const IngredientProfile& profile, SimNotion notion) {
  const auto core = boxed_entries();
  const Closure c = close(core);
  const std::size_t cell = cell_index(profile, notion);
  const auto label = resolve(c, cell, nullptr);
  if (!label) return {};
  std::vector<DerivationStep> chain;
  std::optional<std::size_t> at = c.first.at({cell, static_cast<int>(*label)});
  while (at) {
    const Fact& f = c.facts[*at];
    chain.push_back({kRows[f.cell / 5].profile, static_cast<SimNotion>(f.cell % 5), f.label, f.rule});
    at = f.parent;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<MinimalityFinding> minimality_probe() {
  const auto core = boxed_entries();
  std::vector<MinimalityFinding> out;
  for (std::size_t skip = 0; skip < core.size(); ++skip) {
    std::vector<TableEntry> reduced;
    for (std::size_t i = 0; i < core.size(); ++i) {
      if (i != skip) reduced.push_back(core[i]);
    }
    const DeductionResult r = deduce_full_table(reduced);
    MinimalityFinding f;
    f.removed = core[skip].provenance;
    f.gaps = r.gaps.size() + r.conflicts.size();
    f.changed = diff_against_table(r).size() - f.gaps;
    out.push_back(f);
  }
  return out;
}

}  // namespace extcliff
