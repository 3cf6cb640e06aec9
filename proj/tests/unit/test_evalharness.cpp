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

#include <set>

#include "nl2ltl/dataset.hpp"
#include "nl2ltl/error.hpp"
#include "nl2ltl/eval.hpp"
#include "nl2ltl/paraphrase.hpp"
#include "nl2ltl/synthesis.hpp"
#include "nl2ltl/text.hpp"

using namespace nl2ltl;

namespace {

const std::filesystem::path kData = NL2LTL_DATA_DIR;

EvalInputs inputs_for(const Dataset* d, const Corpus* c = nullptr, const Lexicon* lex = nullptr) {
  EvalInputs in;
  in.dataset = d;
  in.synthetic = c;
  in.lexicon = lex;
  return in;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an nl2ltl::Error");
  return ErrorCode::kInvalidArgument;
}

// Scratch directory holding a tiny parallel-text dataset.
struct Scratch {
  std::filesystem::path dir;
  explicit Scratch(const std::string& name)
      : dir(std::filesystem::temp_directory_path() / ("nl2ltl_test_" + name)) {
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "apset.jsonl",
               "{\"name\": \"a\", \"description\": \"go to a\"}\n"
               "{\"name\": \"b\", \"description\": \"go to b\"}\n");
    write_file(dir / "structures.jsonl", "{\"id\": \"reach\", \"skeleton\": \"F H1\"}\n");
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::filesystem::path adapter(const std::string& declared) const {
    write_file(dir / "adapter.json",
               "{\"name\": \"tiny\", \"format\": \"parallel_text\", \"source_file\": "
               "\"src.txt\", \"target_file\": \"tar.txt\", \"apset\": \"apset.jsonl\", "
               "\"structures\": \"structures.jsonl\", \"declared\": " +
                   declared + "}");
    return dir / "adapter.json";
  }
};

}  // namespace

TEST_CASE("exact match ignores whitespace runs only") {
  CHECK(exact_match("F  & a  F b ", "F & a F b"));
  CHECK_FALSE(exact_match("F & a F b", "F & b F a"));
}

TEST_CASE("k-fold splits partition the data") {
  for (std::size_t n : {5, 17, 40, 101}) {
    auto folds = kfold_split(n, 5, 42);
    REQUIRE(folds.size() == 5);
    std::multiset<std::size_t> tested;
    for (const auto& f : folds) {
      CHECK(std::is_sorted(f.test.begin(), f.test.end()));
      CHECK(std::is_sorted(f.train.begin(), f.train.end()));
      CHECK(f.test.size() + f.train.size() == n);
      CHECK((f.test.size() == n / 5 || f.test.size() == n / 5 + 1));
      std::set<std::size_t> both(f.test.begin(), f.test.end());
      for (auto i : f.train) CHECK(both.count(i) == 0);
      tested.insert(f.test.begin(), f.test.end());
    }
    CHECK(tested.size() == n);
    CHECK(std::set<std::size_t>(tested.begin(), tested.end()).size() == n);
  }
  CHECK(kfold_split(40, 5, 1).front().test == kfold_split(40, 5, 1).front().test);
  CHECK(kfold_split(40, 5, 1).front().test != kfold_split(40, 5, 2).front().test);
  CHECK(code_of([] { kfold_split(3, 5, 0); }) == ErrorCode::kTooFewExamples);
  CHECK(code_of([] { kfold_split(10, 1, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("fixture datasets ingest with their declared statistics") {
  auto cleanup = ingest(kData / "cleanup/fixture.json");
  CHECK(cleanup.stats.n_commands == 40);
  CHECK(cleanup.stats.n_formulas == 28);
  CHECK(cleanup.stats.n_structures == 4);
  CHECK(cleanup.stats.n_aps == 6);
  CHECK(cleanup.examples.front().source_id == "g00001");

  auto pick = ingest(kData / "pick/fixture.json");
  CHECK(pick.stats.n_formulas == 5);
  CHECK(pick.stats.n_aps == 5);

  auto drone = ingest(kData / "drone/fixture.json");
  CHECK(drone.stats.n_commands == 30);
  CHECK(drone.examples.front().target_text ==
        print_formula(drone.examples.front().target, Notation::kPrefix));
}

TEST_CASE("statistics mismatches are reported") {
  DatasetStats s{4, 39, 6, 3382, 0};
  CHECK(stat_mismatches(s, DeclaredStats{4, 39, 6, 3382}).empty());
  CHECK(stat_mismatches(s, DeclaredStats{std::nullopt, 39, std::nullopt, std::nullopt}).empty());
  auto m = stat_mismatches(s, DeclaredStats{4, 40, 6, 3382});
  REQUIRE(m.size() == 1);
  CHECK(m[0] == "n_formulas: declared 40, found 39");

  Scratch tmp("stats");
  write_file(tmp.dir / "src.txt", "go to a\ngo to b\n");
  write_file(tmp.dir / "tar.txt", "F a\nF b\n");
  CHECK(ingest(tmp.adapter("{\"n_formulas\": 2, \"n_aps\": 2}")).stats.n_structures == 1);
  CHECK(code_of([&] { ingest(tmp.adapter("{\"n_formulas\": 3}")); }) == ErrorCode::kStatMismatch);
  CHECK(ingest(tmp.adapter("{\"n_formulas\": 3}"), false).stats.n_formulas == 2);
}

TEST_CASE("malformed dataset files raise ParseFailure with a line") {
  Scratch tmp("parse");
  write_file(tmp.dir / "src.txt", "go to a\ngo to b\n");
  write_file(tmp.dir / "tar.txt", "F a\nF ( b\n");
  try {
    ingest(tmp.adapter("{}"));
    FAIL("expected ParseFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseFailure);
    CHECK(e.position() == 2u);
  }
  write_file(tmp.dir / "tar.txt", "F a\n");
  CHECK(code_of([&] { ingest(tmp.adapter("{}")); }) == ErrorCode::kParseFailure);
  write_file(tmp.dir / "tar.txt", "F a\nF zz\n");
  CHECK(code_of([&] { ingest(tmp.adapter("{}")); }) == ErrorCode::kParseFailure);
  CHECK(code_of([&] { load_adapter(tmp.dir / "missing.json"); }) == ErrorCode::kIoError);
}

TEST_CASE("oracle scorer evaluation reaches 100 percent") {
  auto d = ingest(kData / "cleanup/fixture.json");
  EvalConfig cfg;
  cfg.scorer = "oracle";
  cfg.seed = 3;
  auto report = run_eval(cfg, inputs_for(&d));
  CHECK(report.total == 40);
  CHECK(report.correct == 40);
  CHECK(report.fold_accuracy.size() == 5);
  CHECK(report.valid_set_size >= 39);
  CHECK(report.confusion.empty());
}

TEST_CASE("lexical evaluation is deterministic and thread-count independent") {
  auto d = ingest(kData / "pick/fixture.json");
  auto aps = d.aps;
  auto structures = d.structures;
  auto lex = load_lexicon(kData / "pick/lexicon.json", &aps);
  BackTranslator bt(aps, structures, load_annotations(kData / "pick/annotations.jsonl", &aps));
  FallbackParaphraser fb(11);
  auto corpus = build_corpus(bt, lex, &fb, SynthesisOptions{});

  EvalConfig cfg;
  cfg.scenario = Scenario::kLowResource;
  cfg.seed = 11;
  cfg.threads = 1;
  auto one = run_eval(cfg, inputs_for(&d, &corpus, &lex));
  cfg.threads = 8;
  auto many = run_eval(cfg, inputs_for(&d, &corpus, &lex));
  CHECK(one.to_json().dump() == many.to_json().dump());
  CHECK(one.total == 20);
  CHECK(one.train_examples == corpus.examples.size());
  CHECK(one.to_table().find("accuracy") != std::string::npos);

  EvalConfig bad;
  bad.scorer = "psychic";
  CHECK(code_of([&] { run_eval(bad, inputs_for(&d)); }) == ErrorCode::kConfigError);
  bad = EvalConfig{};
  bad.scenario = Scenario::kLowResource;
  CHECK(code_of([&] { run_eval(bad, inputs_for(&d)); }) == ErrorCode::kConfigError);
  CHECK(parse_scenario("golden-cv") == Scenario::kGoldenCv);
  CHECK(code_of([] { parse_scenario("other"); }) == ErrorCode::kConfigError);
}
