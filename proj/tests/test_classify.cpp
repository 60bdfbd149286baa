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

#include <doctest.h>

#include <array>
#include <string>

#include "extcliff/classify.hpp"

using namespace extcliff;

namespace {

// Rows in all_profiles() order, columns WEAK(1) WEAK(n) STR(1) STR(n) STR.
// An asterisk marks a boxed cell.
constexpr std::array<std::array<const char*, 5>, 8> kExpected{{
    {"P", "P", "P", "P", "P*"},        // BITS NONADAPT BITS
    {"P", "PH*", "P", "#P*", "#P"},    // PROD NONADAPT BITS
    {"P", "P*", "#P*", "#P*", "#P"},   // BITS ADAPT BITS
    {"QC*", "QC", "#P", "#P", "#P"},   // PROD ADAPT BITS
    {"P", "PH*", "P", "#P*", "#P"},    // BITS NONADAPT PROD
    {"P", "PH", "P*", "#P", "#P"},     // PROD NONADAPT PROD
    {"P*", "PH", "#P", "#P", "#P"},    // BITS ADAPT PROD
    {"QC", "QC", "#P", "#P", "#P"},    // PROD ADAPT PROD
}};

std::string cell_text(const TableEntry& e) { return std::string(to_string(e.label)) + (e.boxed ? "*" : ""); }

}  // namespace

TEST_CASE("hard-coded table matches the expected grid") {
  const auto profiles = all_profiles();
  const auto notions = all_notions();
  REQUIRE(classification_table().size() == 40);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 5; ++c) {
      const TableEntry e = lookup(profiles[r], notions[c]);
      CHECK(e.profile == profiles[r]);
      CHECK(e.notion == notions[c]);
      CHECK(cell_text(e) == kExpected[r][c]);
      CHECK_FALSE(e.provenance.empty());
    }
  CHECK(boxed_entries().size() == 11);
}

TEST_CASE("provenance strings") {
  CHECK(lookup(parse_profile("bits,nonadapt,bits"), SimNotion::Str).provenance == "JV4");
  CHECK(lookup(parse_profile("prod,nonadapt,bits"), SimNotion::Str1).provenance == "JV1");
  CHECK(lookup(parse_profile("bits,adapt,prod"), SimNotion::Weak1).provenance == "Thm 6");
  CHECK(lookup(parse_profile("bits,nonadapt,prod"), SimNotion::Str1).provenance == "(xiii)");
  CHECK(lookup(parse_profile("prod,adapt,prod"), SimNotion::Str).provenance == "(xxvii)");
}

TEST_CASE("deduction from the boxed entries reproduces the table") {
  const auto core = boxed_entries();
  const DeductionResult d = deduce_full_table(core);
  CHECK(d.conflicts.empty());
  CHECK(d.gaps.empty());
  CHECK(d.complete());
  CHECK(diff_against_table(d).empty());
}

TEST_CASE("deduction reports gaps and conflicts") {
  const DeductionResult empty = deduce_full_table({});
  CHECK(empty.gaps.size() == 40);
  CHECK_FALSE(empty.complete());

  auto core = boxed_entries();
  TableEntry bogus;
  bogus.profile = parse_profile("prod,adapt,prod");
  bogus.notion = SimNotion::Str;
  bogus.label = ComplexityLabel::P;
  core.push_back(bogus);
  const DeductionResult d = deduce_full_table(core);
  CHECK_FALSE(d.conflicts.empty());
  CHECK_FALSE(diff_against_table(d).empty());
}

TEST_CASE("explain walks from a boxed entry") {
  const auto steps = explain(parse_profile("bits,nonadapt,bits"), SimNotion::Weak1);
  REQUIRE(steps.size() >= 2);
  CHECK(steps.front().rule == "boxed");
  CHECK(steps.front().profile == parse_profile("bits,nonadapt,bits"));
  CHECK(steps.front().notion == SimNotion::Str);
  CHECK(steps.back().notion == SimNotion::Weak1);
  CHECK(steps.back().label == ComplexityLabel::P);

  const auto boxed = explain(parse_profile("bits,adapt,prod"), SimNotion::Weak1);
  CHECK(boxed.size() == 1);

  const auto qc = explain(parse_profile("prod,adapt,prod"), SimNotion::WeakN);
  REQUIRE_FALSE(qc.empty());
  CHECK(qc.back().label == ComplexityLabel::QC);
}

TEST_CASE("notion parsing") {
  CHECK(parse_notion("str_1") == SimNotion::Str1);
  CHECK(parse_notion("STR(n)") == SimNotion::StrN);
  CHECK(parse_notion("weak") == SimNotion::WeakN);
  CHECK(parse_notion("WEAK(1)") == SimNotion::Weak1);
  CHECK_THROWS(parse_notion("medium"));
  CHECK(is_strong(SimNotion::Str1));
  CHECK_FALSE(is_strong(SimNotion::WeakN));
}

TEST_CASE("minimality probe covers every boxed entry") {
  const auto findings = minimality_probe();
  CHECK(findings.size() == 11);
  for (const auto& f : findings) CHECK_FALSE(f.removed.empty());
}
