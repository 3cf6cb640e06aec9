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


// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
//
// Set NL2LTL_DATASETS_DIR to a directory holding cleanup/src.txt,
// cleanup/tar.txt, drone/src.txt, drone/tar.txt and pick/commands.jsonl to
// run the dataset statistics gate against the full corpora.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nl2ltl/backtranslate.hpp"
#include "nl2ltl/cli.hpp"
#include "nl2ltl/dataset.hpp"
#include "nl2ltl/decode.hpp"
#include "nl2ltl/error.hpp"
#include "nl2ltl/lexical_model.hpp"
#include "nl2ltl/synthesis.hpp"
#include "nl2ltl/text.hpp"
#include "nl2ltl/trie.hpp"
#include "support/oracles.hpp"

using namespace nl2ltl;

namespace {

const std::filesystem::path kData = NL2LTL_DATA_DIR;
const std::vector<std::string> kDatasets{"cleanup", "pick", "drone"};

struct Outcome {
  bool pass;
  std::string detail;
};

struct Domain {
  ApSet aps;
  std::vector<LtlStructure> structures;
  Lexicon lex;
  FormulaAnnotations annotations;
};

Domain domain(const std::string& name) {
  auto aps = load_ap_set(kData / name / "apset.jsonl");
  auto structures = load_structures(kData / name / "structures.jsonl", &aps);
  auto lex = load_lexicon(kData / name / "lexicon.json", &aps);
  FormulaAnnotations ann;
  if (std::filesystem::exists(kData / name / "annotations.jsonl"))
    ann = load_annotations(kData / name / "annotations.jsonl", &aps);
  return {aps, structures, lex, ann};
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int rc = run_cli(args, o, e);
  if (out) *out = o.str();
  if (rc != 0) std::cerr << "  nl2ltl " << join(args, " ") << " -> " << rc << ": " << e.str();
  return rc;
}

// Valid output set used by the evaluator: enumerated formulas plus fixture
// targets, in raw prefix.
std::vector<std::string> valid_outputs(const std::string& name) {
  auto d = domain(name);
  std::set<std::string> seen;
  std::vector<std::string> out;
  auto add = [&](const Formula& f) {
    auto t = print_formula(f, Notation::kPrefix);
    if (seen.insert(t).second) out.push_back(t);
  };
  for (const auto& f : enumerate_formulas(d.structures, d.aps)) add(f);
  for (const auto& e : ingest(kData / name / "fixture.json").examples) add(e.target);
  return out;
}

Outcome worked_examples() {
  auto cleanup = domain("cleanup");
  auto pick = domain("pick");
  struct Case {
    std::string got, want;
  };
  std::vector<Case> cases{
      {to_canonical(parse_prefix("F & R F X"), cleanup.lex),
       "finally ( and ( go to the red room , finally ( go to the blue room with chair ) ) )"},
      {to_canonical(parse_prefix("G & U S ! C F C"), pick.lex),
       "globally ( and ( until ( scan , not ( any non green cubes ) ) , finally ( any non "
       "green cubes ) ) )"},
      {to_canonical(Formula::finally(Formula::disjunction(Formula::atom("B"), Formula::atom("R"))),
                    cleanup.lex),
       "finally ( or ( go to the blue room , go to the red room ) )"},
      {print_formula(parse_prefix("F & R F X"), Notation::kInfix), "F ( R & F ( X ) )"},
  };
  std::size_t ok = 0;
  for (const auto& c : cases) {
    if (c.got == c.want) ++ok;
    else std::cerr << "  got  " << c.got << "\n  want " << c.want << "\n";
  }
  return {ok == cases.size(), std::to_string(ok) + "/" + std::to_string(cases.size()) + " exact"};
}

Outcome dataset_statistics() {
  // Inventory side: formulas / structures / propositions from the configs.
  struct Want {
    std::string name;
    std::size_t structures, formulas, aps;
  };
  std::vector<Want> inventories{{"cleanup", 4, 39, 6}, {"pick", 1, 5, 5}, {"drone", 5, 343, 12}};
  std::ostringstream detail;
  bool inventories_ok = true;
  for (const auto& w : inventories) {
    auto d = domain(w.name);
    auto formulas = enumerate_formulas(d.structures, d.aps);
    bool ok = formulas.size() == w.formulas &&
              (w.name == "drone" || (d.structures.size() == w.structures &&
                                     count_bindable_aps(d.structures, d.aps) == w.aps));
    inventories_ok = inventories_ok && ok;
    detail << w.name << " inventory " << formulas.size() << " formulas"
           << (ok ? "" : " (MISMATCH)") << "; ";
  }

  const char* root = std::getenv("NL2LTL_DATASETS_DIR");
  if (root && *root) {
    bool all = true;
    for (const auto& name : kDatasets) {
      try {
        auto d = ingest(load_adapter(kData / name / "full.json", std::filesystem::path(root)));
        detail << name << " " << d.stats.n_commands << " commands ok; ";
      } catch (const Error& e) {
        all = false;
        detail << name << ": " << e.what() << "; ";
      }
    }
    return {inventories_ok && all, detail.str()};
  }

  // Without the corpora, each fixture is measured against the published
  // counts: it either reproduces them or must raise StatMismatch.
  bool gate_ok = true;
  for (const auto& name : kDatasets) {
    auto adapter = load_adapter(kData / name / "fixture.json");
    adapter.declared = load_adapter(kData / name / "full.json").declared;
    try {
      ingest(adapter);
      detail << name << " fixture reproduces the published counts; ";
    } catch (const Error& e) {
      bool mismatch = e.code() == ErrorCode::kStatMismatch;
      gate_ok = gate_ok && mismatch;
      detail << name << " fixture " << (mismatch ? "raises StatMismatch" : e.what()) << "; ";
    }
  }
  detail << "full command counts (cleanup 3382, drone 6185) unverified: "
         << "NL2LTL_DATASETS_DIR not set";
  if (!gate_ok || !inventories_ok) detail << " (gate or inventory check also failed)";
  return {false, detail.str()};
}

// Deterministic pseudo-random scores with occasional garbage.
class FuzzScorer : public Scorer {
 public:
  explicit FuzzScorer(std::uint64_t seed) : seed_(seed) {}
  std::vector<double> score_next(const std::vector<std::string>&,
                                 const std::vector<std::string>& prefix,
                                 const std::vector<std::string>& candidates) const override {
    std::mt19937_64 rng(seed_ ^ fnv1a64(join(prefix, " ")));
    if (rng() % 50 == 0) return {};
    std::vector<double> out;
    std::normal_distribution<double> n(0, 10);
    for (std::size_t i = 0; i < candidates.size(); ++i)
      out.push_back(rng() % 30 == 0 ? std::nan("") : n(rng));
    return out;
  }

 private:
  std::uint64_t seed_;
};

Outcome decoding_soundness() {
  std::size_t runs = 0, outside = 0, targets = 0, recovered = 0;
  for (const auto& name : kDatasets) {
    auto valid = valid_outputs(name);
    auto trie = build_trie(valid);
    for (std::uint64_t seed = 1; seed <= 1000; ++seed, ++runs) {
      FuzzScorer s(seed * 0x9e3779b97f4a7c15ULL);
      if (!trie.contains(constrained_decode("fuzz", s, trie, 1 + seed % 4).text)) ++outside;
    }
    for (const auto& t : valid) {
      OracleScorer oracle(t);
      ++targets;
      if (constrained_decode("oracle", oracle, trie).text == t) ++recovered;
    }
  }
  std::ostringstream d;
  d << outside << "/" << runs << " fuzzed outputs outside the valid set; oracle recovered "
    << recovered << "/" << targets << " targets (exhaustive)";
  return {outside == 0 && recovered == targets, d.str()};
}

Outcome trace_oracle() {
  const std::vector<std::string> atoms{"a", "b"};
  auto formulas = nl2ltl::testing::all_formulas(atoms, 3);
  auto traces = nl2ltl::testing::all_traces(atoms, 4);
  std::size_t mismatches = 0;
  for (const auto& steps : traces) {
    Trace t(steps);
    for (const auto& f : formulas)
      if (evaluate_trace(f, t) != nl2ltl::testing::naive_holds(f, steps, 0)) ++mismatches;
  }
  std::ostringstream d;
  d << mismatches << " mismatches over " << formulas.size() << " formulas x " << traces.size()
    << " traces";
  return {mismatches == 0, d.str()};
}

Outcome round_trips() {
  std::size_t failures = 0, total = 0;
  for (const auto& name : kDatasets) {
    auto d = domain(name);
    auto atoms = d.aps.names();
    std::mt19937_64 rng(fnv1a64(name));
    for (int i = 0; i < 4000; ++i, ++total) {
      auto f = nl2ltl::testing::random_formula(rng, atoms, 1 + i % 6);
      for (auto n : {Notation::kPrefix, Notation::kInfix})
        if (parse_formula(print_formula(f, n), n) != f) ++failures;
      if (from_canonical(to_canonical(f, d.lex), d.lex) != f) ++failures;
    }
  }
  std::ostringstream d;
  d << failures << " failures over " << total << " random formulas x 3 identities";
  return {failures == 0 && total >= 10000, d.str()};
}

double accuracy_of(const std::filesystem::path& report) {
  return nlohmann::json::parse(read_file(report)).at("accuracy").get<double>();
}

Outcome ablation_directions(const std::filesystem::path& work) {
  const std::string seed = "7";
  bool ok = true;
  std::ostringstream d;
  for (const std::string name : {"cleanup", "pick"}) {
    auto cfg = (kData / name / "run.json").string();
    auto corpus = (work / (name + ".jsonl")).string();
    if (cli({"synth", "--config", cfg, "--seed", seed, "--out", corpus}) != 0)
      return {false, "synth failed for " + name};
    std::map<std::string, double> acc;
    for (const auto& [label, flag] : std::vector<std::pair<std::string, std::string>>{
             {"full", ""}, {"unconstrained", "--no-constrained-decoding"},
             {"no-aug", "--no-augmentation"}}) {
      auto report = (work / (name + "-" + label + ".json")).string();
      std::vector<std::string> args{"eval",   "--config", cfg,    "--scenario", "low-resource",
                                    "--corpus", corpus,   "--seed", seed,        "--report",
                                    report};
      if (!flag.empty()) args.push_back(flag);
      if (cli(args) != 0) return {false, "eval failed for " + name + " " + label};
      acc[label] = accuracy_of(report);
    }

    // Self-consistency: each unparaphrased seed sentence decodes to its own
    // formula under the model trained on the synthetic corpus.
    auto dom = domain(name);
    auto loaded = load_corpus(corpus);
    auto model = train_lexical(loaded, TargetRepr::kRawPrefix);
    LexicalScorer scorer(model);
    auto trie = build_trie(valid_outputs(name));
    std::size_t seeds = 0, own = 0;
    for (const auto& e : without_paraphrases(loaded).examples) {
      ++seeds;
      if (constrained_decode(e.text, scorer, trie).text == e.target_text) ++own;
      else std::cerr << "  " << name << ": '" << e.text << "' -> "
                     << constrained_decode(e.text, scorer, trie).text << " (want "
                     << e.target_text << ")\n";
    }

    bool here = acc["full"] >= acc["unconstrained"] && acc["full"] >= acc["no-aug"] &&
                own == seeds;
    ok = ok && here;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << name << ": constrained " << 100 * acc["full"] << " vs unconstrained "
      << 100 * acc["unconstrained"] << ", augmented " << 100 * acc["full"]
      << " vs no-augmentation " << 100 * acc["no-aug"] << ", self-consistency " << own << "/"
      << seeds << "; ";
  }
  return {ok, d.str()};
}

Outcome annotation_economy() {
  auto budget = [](const std::string& name) {
    auto d = domain(name);
    BackTranslator bt(d.aps, d.structures, d.annotations);
    return bt.budget(enumerate_formulas(d.structures, d.aps));
  };
  auto c = budget("cleanup");
  auto p = budget("pick");
  std::ostringstream d;
  d << "cleanup " << c.total() << " (" << c.ap_descriptions << " descriptions + "
    << c.structure_templates << " templates + " << c.formula_annotations
    << " formula sentences), pick " << p.total() << " (" << p.formula_annotations
    << " formula sentences)";
  bool ok = c.total() == 10 && c.ap_descriptions == 6 && c.structure_templates == 4 &&
            p.total() == 5;
  return {ok, d.str()};
}

Outcome determinism(const std::filesystem::path& work) {
  std::vector<std::string> produced;
  bool ok = true;
  for (const std::string name : {"cleanup", "pick"}) {
    auto cfg = (kData / name / "run.json").string();
    std::vector<std::filesystem::path> runs{work / ("det-a-" + name), work / ("det-b-" + name)};
    for (const auto& dir : runs) {
      std::filesystem::create_directories(dir);
      ok = ok && cli({"synth", "--config", cfg, "--seed", "2024", "--out",
                      (dir / "corpus.jsonl").string()}) == 0;
      ok = ok && cli({"train", "--config", cfg, "--corpus", (dir / "corpus.jsonl").string(),
                      "--out", (dir / "model.json").string()}) == 0;
      ok = ok && cli({"eval", "--config", cfg, "--scenario", "low-resource", "--corpus",
                      (dir / "corpus.jsonl").string(), "--seed", "2024", "--report",
                      (dir / "report.json").string()}) == 0;
    }
    for (const char* file : {"corpus.jsonl", "corpus.jsonl.meta.json", "model.json", "report.json"}) {
      if (!ok) break;
      bool same = read_file(runs[0] / file) == read_file(runs[1] / file);
      ok = ok && same;
      produced.push_back(name + "/" + file + (same ? "" : " DIFFERS"));
    }
  }
  return {ok, (ok ? "byte-identical: " : "") + join(produced, ", ")};
}

}  // namespace

int main() {
  auto work = std::filesystem::temp_directory_path() /
              ("nl2ltl-acceptance-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(work);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked-example fidelity", worked_examples},
      {"dataset statistics gate", dataset_statistics},
      {"constrained-decoding soundness and completeness", decoding_soundness},
      {"trace-semantics oracle equivalence", trace_oracle},
      {"round-trip suites", round_trips},
      {"ablation directions and self-consistency", [&] { return ablation_directions(work); }},
      {"annotation economy", annotation_economy},
      {"determinism", [&] { return determinism(work); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << o.detail << " [" << t.str() << " s]"
              << std::endl;
  }
  std::filesystem::remove_all(work);
  return failures == 0 ? 0 : 1;
}
