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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extcliff/circuit.hpp"

namespace extcliff {

/// WEAK and WEAK(n) share one column.
enum class SimNotion : std::uint8_t { Weak1, WeakN, Str1, StrN, Str };

enum class ComplexityLabel : std::uint8_t { P, SharpP, QC, PH };

/// "WEAK(1)", "WEAK(n)", "STR(1)", "STR(n)", "STR".
const char* to_string(SimNotion notion);
/// "P", "#P", "QC", "PH".
const char* to_string(ComplexityLabel label);

/// Accepts STR, STR_N, STR(n), STR_1, STR(1), WEAK, WEAK_N, WEAK(n),
/// WEAK_1, WEAK(1), case-insensitive.
SimNotion parse_notion(std::string_view text);

/// Column order of the table.
std::vector<SimNotion> all_notions();

bool is_strong(SimNotion notion);

struct TableEntry {
  IngredientProfile profile;
  SimNotion notion = SimNotion::Str;
  ComplexityLabel label = ComplexityLabel::P;
  std::string provenance;
  bool boxed = false;
};

/// The 40 hard-coded cells, profiles in row order, notions in column order.
const std::vector<TableEntry>& classification_table();

TableEntry lookup(const IngredientProfile& profile, SimNotion notion);

/// The 11 boxed cells.
std::vector<TableEntry> boxed_entries();

struct DeductionResult {
  /// One entry per cell that received a label, in table order.
  std::vector<TableEntry> entries;
  /// "(profile) x NOTION: P vs #P" style descriptions.
  std::vector<std::string> conflicts;
  /// Cells that received no label.
  std::vector<std::string> gaps;

  bool complete() const { return conflicts.empty() && gaps.empty() && entries.size() == 40; }
};

/// Closes `core` under the ingredient-inclusion and notion rules.
///
/// P moves to ingredient subsets and from STR to STR(1), STR(n), WEAK(n),
/// and from those three to WEAK(1). Hardness moves to ingredient supersets;
/// #P at STR(1) or STR(n) moves to STR; QC at WEAK(1) moves to WEAK(n). PH
/// moves only by inclusion. Where QC and PH both reach a cell the cell is
/// labelled QC.
DeductionResult deduce_full_table(std::span<const TableEntry> core);

/// Cells whose deduced label differs from the hard-coded table, or that are
/// missing from `derived`.
std::vector<std::string> diff_against_table(const DeductionResult& derived);

struct DerivationStep {
  IngredientProfile profile;
  SimNotion notion = SimNotion::Str;
  ComplexityLabel label = ComplexityLabel::P;
  /// Rule that produced this step; "boxed" for the starting entry.
  std::string rule;
};

/// Shortest rule chain from a boxed entry to the label of the given cell,
/// starting at the boxed entry. Empty when the cell cannot be derived.
std::vector<DerivationStep> explain(const IngredientProfile& profile, SimNotion notion);

struct MinimalityFinding {
  std::string removed;
  std::size_t gaps = 0;
  std::size_t changed = 0;
};

/// For each boxed entry, re-derives the table without it.
std::vector<MinimalityFinding> minimality_probe();

}  // namespace extcliff
