//
// Copyright 2026 The nl2ltl Authors
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
//


#include <doctest.h>

#include "nl2ltl/backtranslate.hpp"
#include "nl2ltl/error.hpp"
#include "nl2ltl/synthesis.hpp"

using namespace nl2ltl;

namespace {

const std::filesystem::path kData = NL2LTL_DATA_DIR;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an nl2ltl::Error");
  return ErrorCode::kInvalidArgument;
}

LtlStructure make(const std::string& id, const std::string& skeleton) {
  return LtlStructure::make(id, parse_prefix(skeleton));
}

}  // namespace

TEST_CASE("structures number their holes") {
  auto s = make("seq", "F & H1 F H2");
  CHECK(s.slot_count == 2);
  CHECK(s.instantiate({"B", "X"}) == parse_prefix("F & B F X"));
  CHECK_FALSE(s.admits({"B", "B"}));
  CHECK(code_of([] { make("gap", "F & H1 F H3"); }) == ErrorCode::kInvalidStructure);
  CHECK(code_of([] { make("", "F H1"); }) == ErrorCode::kInvalidStructure);
  CHECK(code_of([] {
          LtlStructure::make("t", parse_prefix("F H1"), true, {}, std::string("{1} {1}"));
        }) == ErrorCode::kInvalidStructure);
  CHECK(code_of([] {
          LtlStructure::make("t", parse_prefix("F H1"), true, {}, std::string("{2}"));
        }) == ErrorCode::kInvalidStructure);
}

TEST_CASE("matching recovers structure and binding") {
  std::vector<LtlStructure> structures{make("reach", "F H1"), make("seq", "F & H1 F H2"),
                                       make("avoid", "U ! H1 H2")};
  auto m = match_structure(parse_prefix("F & R F X"), structures);
  CHECK(m.structure_id == "seq");
  CHECK(m.binding == std::map<std::size_t, std::string>{{1, "R"}, {2, "X"}});
  CHECK(code_of([&] { match_structure(parse_prefix("G R"), structures); }) ==
        ErrorCode::kNoMatchingStructure);
  // A hole matches an atom only, so "F H1" does not swallow a sequence.
  CHECK(find_matches(parse_prefix("F & R F X"), structures).size() == 1);

  std::vector<LtlStructure> twice{make("a", "F H1"), make("b", "F H1")};
  CHECK(code_of([&] { match_structure(parse_prefix("F R"), twice); }) ==
        ErrorCode::kMultipleMatchingStructures);
}

TEST_CASE("instantiate then match is the identity, exhaustively") {
  const std::vector<std::string> atoms{"a", "b", "c", "d", "e", "f"};
  std::vector<LtlStructure> structures{make("one", "F H1"), make("two", "U ! H1 H2"),
                                       make("three", "F & H1 F & H2 F H3")};
  std::size_t checked = 0, failures = 0;
  for (const auto& s : structures) {
    std::vector<std::size_t> idx(s.slot_count, 0);
    while (true) {
      std::vector<std::string> binding;
      for (auto i : idx) binding.push_back(atoms[i]);
      if (s.admits(binding)) {
        auto m = match_structure(s.instantiate(binding), structures);
        std::map<std::size_t, std::string> expect;
        for (std::size_t k = 0; k < binding.size(); ++k) expect[k + 1] = binding[k];
        if (m.structure_id != s.id || m.binding != expect) ++failures;
        ++checked;
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == atoms.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  CHECK(checked == 6 + 30 + 120);
  CHECK(failures == 0);
}

TEST_CASE("rule rendering") {
  Lexicon lex({}, {{"B", "go to the blue room"}, {"R", "go to the red room"}});
  CHECK(back_translate_rule(parse_prefix("F B"), lex) == "eventually go to the blue room");
  CHECK(back_translate_rule(parse_prefix("G ! B"), lex) == "Never go to the blue room.");
  CHECK(back_translate_rule(parse_prefix("F & B F R"), lex) ==
        "Go to the blue room to finally go to the red room.");
  CHECK(back_translate_rule(parse_prefix("| B R"), lex) ==
        "go to the blue room or go to the red room");
  Lexicon three({}, {{"B", "go to the blue room"}, {"R", "go to the red room"},
                     {"Y", "go to the yellow room"}});
  CHECK(back_translate_rule(parse_prefix("F & | B R F Y"), three) ==
        "Go to the blue room or go to the red room to finally go to the yellow room.");
  Lexicon visit({}, {{"B", "visit the blue room"}});
  CHECK(back_translate_rule(parse_prefix("F B"), visit) == "eventually visit the blue room");
}

TEST_CASE("seed priority: annotation, then template, then rule") {
  ApSet aps(std::vector<AtomicProp>{{"B", "go to the blue room"}, {"R", "go to the red room"}});
  std::vector<LtlStructure> structures{
      LtlStructure::make("seq", parse_prefix("F & H1 F H2"), true, {}, std::string("{1} and then {2}"))};
  FormulaAnnotations ann{{"F & R F B", "red first please"}};
  BackTranslator bt(aps, structures, ann);

  auto a = bt.translate(parse_prefix("F & R F B"));
  CHECK(a.source == SeedSource::kFormulaAnnotation);
  CHECK(a.text == "red first please");

  auto t = bt.translate(parse_prefix("F & B F R"));
  CHECK(t.source == SeedSource::kStructureTemplate);
  CHECK(t.text == "go to the blue room and then go to the red room");

  auto r = bt.translate(parse_prefix("G ! B"));
  CHECK(r.source == SeedSource::kRule);
  CHECK(r.text == "Never go to the blue room.");

  auto budget = bt.budget({parse_prefix("F & R F B"), parse_prefix("F & B F R")});
  CHECK(budget.formula_annotations == 1);
  CHECK(budget.structure_templates == 1);
  CHECK(budget.ap_descriptions == 2);
}

TEST_CASE("annotation budgets of the shipped configurations") {
  auto cleanup_aps = load_ap_set(kData / "cleanup/apset.jsonl");
  auto cleanup_structures = load_structures(kData / "cleanup/structures.jsonl", &cleanup_aps);
  BackTranslator cleanup(cleanup_aps, cleanup_structures);
  auto b = cleanup.budget(enumerate_formulas(cleanup_structures, cleanup_aps));
  CHECK(b.structure_templates == 4);
  CHECK(b.ap_descriptions == 6);
  CHECK(b.total() == 10);

  auto pick_aps = load_ap_set(kData / "pick/apset.jsonl");
  auto pick_structures = load_structures(kData / "pick/structures.jsonl", &pick_aps);
  BackTranslator pick(pick_aps, pick_structures,
                      load_annotations(kData / "pick/annotations.jsonl", &pick_aps));
  auto p = pick.budget(enumerate_formulas(pick_structures, pick_aps));
  CHECK(p.formula_annotations == 5);
  CHECK(p.total() == 5);
}
