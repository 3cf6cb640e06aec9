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

#include <sstream>

#include <json.hpp>

#include "nl2ltl/backtranslate.hpp"
#include "nl2ltl/cli.hpp"
#include "nl2ltl/dataset.hpp"
#include "nl2ltl/eval.hpp"
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
const std::filesystem::path kGolden = NL2LTL_GOLDEN_DIR;

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string data(const std::string& rel) { return (kData / rel).string(); }

}  // namespace

TEST_CASE("parse and canonicalize match golden output") {
  auto p = cli({"parse", "--prefix", "& F landmark_1 G ! blue_room"});
  CHECK(p.rc == 0);
  CHECK(p.out == read_file(kGolden / "parse_infix.txt"));
  CHECK(p.out == print_formula(parse_prefix("& F landmark_1 G ! blue_room"), Notation::kInfix) + "\n");

  auto c = cli({"canonicalize", "--apset", data("cleanup/apset.jsonl"), "--lexicon",
                data("cleanup/lexicon.json"), "--formula", "F & R F X"});
  CHECK(c.rc == 0);
  CHECK(c.out == read_file(kGolden / "canonicalize_cleanup.txt"));

  auto back = cli({"canonicalize", "--apset", data("cleanup/apset.jsonl"), "--lexicon",
                   data("cleanup/lexicon.json"), "--canonical", trim(c.out)});
  CHECK(back.out == "F & R F X\n");
}

TEST_CASE("backtranslate listings match golden output and the library") {
  for (const char* name : {"cleanup", "pick"}) {
    CAPTURE(name);
    auto r = cli({"backtranslate", "--config", data(std::string(name) + "/run.json"), "--budget"});
    CHECK(r.rc == 0);
    CHECK(r.out == read_file(kGolden / (std::string("backtranslate_") + name + ".txt")));

    auto aps = load_ap_set(kData / name / "apset.jsonl");
    auto structures = load_structures(kData / name / "structures.jsonl", &aps);
    FormulaAnnotations ann;
    if (std::filesystem::exists(kData / name / "annotations.jsonl"))
      ann = load_annotations(kData / name / "annotations.jsonl", &aps);
    BackTranslator bt(aps, structures, ann);
    std::string expect;
    for (const auto& f : enumerate_formulas(structures, aps))
      expect += print_formula(f, Notation::kPrefix) + "\t" + bt.translate(f).text + "\n";
    CHECK(r.out.rfind(expect, 0) == 0);
  }
}

TEST_CASE("check reports satisfaction") {
  CHECK(cli({"check", "--formula", "F & R F X", "--trace", "{} {R} {X}"}).out == "SAT\n");
  CHECK(cli({"check", "--formula", "G ! R", "--trace", "{} {R}"}).out == "UNSAT\n");
}

TEST_CASE("exit codes") {
  auto unknown = cli({"frobnicate"});
  CHECK(unknown.rc == 2);
  CHECK(unknown.err.find("UnknownSubcommand") != std::string::npos);
  CHECK(cli({"parse", "--prefix", "F"}).rc == 1);
  CHECK(cli({"parse", "--bogus-flag", "x"}).rc == 2);

  auto dir = std::filesystem::temp_directory_path() / "nl2ltl_test_cli_exit";
  std::filesystem::create_directories(dir);
  auto adapter = nlohmann::json::parse(read_file(kData / "cleanup/fixture.json"));
  adapter["source_file"] = data("cleanup/fixture/src.txt");
  adapter["target_file"] = data("cleanup/fixture/tar.txt");
  adapter["apset"] = data("cleanup/apset.jsonl");
  adapter["structures"] = data("cleanup/structures.jsonl");
  adapter["declared"]["n_commands"] = 3382;
  write_file(dir / "wrong.json", adapter.dump());
  auto mismatch = cli({"eval", "--dataset", (dir / "wrong.json").string(), "--scorer", "oracle",
                       "--seed", "1"});
  CHECK(mismatch.rc == 3);
  CHECK(mismatch.err.find("n_commands: declared 3382, found 40") != std::string::npos);
  CHECK(cli({"eval", "--dataset", (dir / "wrong.json").string(), "--scorer", "oracle", "--seed",
             "1", "--skip-stat-check"})
            .rc == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("command line overrides the config file and the result is echoed") {
  auto r = cli({"eval", "--config", data("cleanup/run.json"), "--scorer", "oracle", "--seed", "5",
                "--k-folds", "4"});
  CHECK(r.rc == 0);
  auto pos = r.err.find("resolved config: ");
  REQUIRE(pos != std::string::npos);
  auto line = r.err.substr(pos + 17, r.err.find('\n', pos) - pos - 17);
  auto echo = nlohmann::json::parse(line);
  CHECK(echo.at("command") == "eval");
  CHECK(echo.at("config").dump().find("\"k_folds\"") != std::string::npos);
  CHECK(r.out.find("fold 3") != std::string::npos);
  CHECK(r.out.find("fold 4") == std::string::npos);
  CHECK(r.out.find("accuracy        100.00  (40/40)") != std::string::npos);
}

TEST_CASE("synth, train, translate and eval agree with the library") {
  auto dir = std::filesystem::temp_directory_path() / "nl2ltl_test_cli_pipeline";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto corpus = (dir / "corpus.jsonl").string();
  auto model = (dir / "model.json").string();
  auto report = (dir / "report.json").string();
  const auto cfg = data("pick/run.json");

  CHECK(cli({"synth", "--config", cfg, "--seed", "9", "--out", corpus}).rc == 0);
  CHECK(cli({"synth", "--config", cfg, "--out", corpus}).rc != 0);  // seed is required
  CHECK(cli({"train", "--config", cfg, "--corpus", corpus, "--out", model}).rc == 0);
  auto t = cli({"translate", "--config", cfg, "--model", model, "--input",
                "keep scanning until you find any red cubes and pick them up"});
  CHECK(t.rc == 0);
  CHECK(t.out == "G & U S ! R F R\n");

  auto e = cli({"eval", "--config", cfg, "--scenario", "low-resource", "--corpus", corpus,
                "--seed", "9", "--report", report});
  CHECK(e.rc == 0);

  auto aps = load_ap_set(kData / "pick/apset.jsonl");
  auto lex = load_lexicon(kData / "pick/lexicon.json", &aps);
  auto d = ingest(kData / "pick/fixture.json");
  auto loaded = load_corpus(corpus);
  EvalConfig c;
  c.scenario = Scenario::kLowResource;
  c.seed = 9;
  auto expect = run_eval(c, inputs_for(&d, &loaded, &lex));
  CHECK(read_file(report) == expect.to_json().dump(2) + "\n");
  CHECK(e.out == expect.to_table());
  std::filesystem::remove_all(dir);
}
