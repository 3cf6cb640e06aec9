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

#include "nl2ltl/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nl2ltl/backtranslate.hpp"
#include "nl2ltl/decode.hpp"
#include "nl2ltl/error.hpp"
#include "nl2ltl/eval.hpp"
#include "nl2ltl/lexical_model.hpp"
#include "nl2ltl/synthesis.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kSubcommands = {
    "parse", "canonicalize", "backtranslate", "synth", "train", "translate", "check", "eval"};

// Values for one subcommand, resolved as command line > config file > default.
class Settings {
 public:
  void add(CLI::App* app, const std::string& flag, const std::string& help) {
    auto key = key_of(flag);
    opts_[key] = app->add_option(flag, cli_[key], help);
  }
  void add_flag(CLI::App* app, const std::string& flag, const std::string& help) {
    auto key = key_of(flag);
    opts_[key] = app->add_flag(flag, help);
  }

  void load_config(const std::string& path) {
    if (path.empty()) return;
    try {
      file_ = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kConfigError, path + ": " + e.what());
    }
    if (!file_.is_object())
      throw Error(ErrorCode::kConfigError, path + ": config must be a JSON object");
    dir_ = fs::path(path).parent_path();
  }

  bool given(const std::string& key) const {
    auto it = opts_.find(key);
    return (it != opts_.end() && it->second->count() > 0) || file_.contains(key);
  }

  std::string str(const std::string& key, const std::string& def = "") {
    std::string v = def;
    if (cli_given(key)) {
      v = cli_.at(key);
    } else if (file_.contains(key)) {
      const auto& j = file_.at(key);
      v = j.is_string() ? j.get<std::string>() : j.dump();
    }
    resolved_[key] = v;
    return v;
  }

  std::string path(const std::string& key) {
    std::string v;
    if (cli_given(key)) {
      v = cli_.at(key);
    } else if (file_.contains(key)) {
      fs::path p(file_.at(key).get<std::string>());
      v = (p.is_absolute() || dir_.empty() ? p : dir_ / p).string();
    }
    resolved_[key] = v;
    return v;
  }

  std::string required_path(const std::string& key) {
    auto v = path(key);
    if (v.empty()) throw Error(ErrorCode::kConfigError, "--" + flag_of(key) + " is required");
    return v;
  }

  std::uint64_t u64(const std::string& key, std::uint64_t def) {
    std::uint64_t v = def;
    if (cli_given(key)) {
      v = parse_u64(key, cli_.at(key));
    } else if (file_.contains(key)) {
      const auto& j = file_.at(key);
      v = j.is_string() ? parse_u64(key, j.get<std::string>()) : j.get<std::uint64_t>();
    }
    resolved_[key] = v;
    return v;
  }

  double real(const std::string& key, double def) {
    double v = def;
    if (cli_given(key)) {
      try {
        v = std::stod(cli_.at(key));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kConfigError, "--" + flag_of(key) + " expects a number");
      }
    } else if (file_.contains(key)) {
      v = file_.at(key).get<double>();
    }
    resolved_[key] = v;
    return v;
  }

  bool flag(const std::string& key) {
    bool v = false;
    if (cli_given(key))
      v = true;
    else if (file_.contains(key))
      v = file_.at(key).get<bool>();
    resolved_[key] = v;
    return v;
  }

  const nlohmann::ordered_json& resolved() const { return resolved_; }

 private:
  static std::string key_of(const std::string& flag) {
    auto k = flag.substr(flag.find_first_not_of('-'));
    std::replace(k.begin(), k.end(), '-', '_');
    return k;
  }
  static std::string flag_of(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
  }
  std::uint64_t parse_u64(const std::string& key, const std::string& s) const {
    try {
      std::size_t used = 0;
      auto v = std::stoull(s, &used);
      if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kConfigError,
                  "--" + flag_of(key) + " expects a non-negative integer, got '" + s + "'");
    }
  }
  bool cli_given(const std::string& key) const {
    auto it = opts_.find(key);
    return it != opts_.end() && it->second->count() > 0;
  }

  std::map<std::string, std::string> cli_;
  std::map<std::string, CLI::Option*> opts_;
  nlohmann::json file_ = nlohmann::json::object();
  fs::path dir_;
  nlohmann::ordered_json resolved_;
};

Notation parse_notation(const std::string& name) {
  if (name == "prefix") return Notation::kPrefix;
  if (name == "infix") return Notation::kInfix;
  throw Error(ErrorCode::kConfigError, "unknown notation '" + name + "'");
}

std::optional<ApSet> optional_aps(Settings& s) {
  auto p = s.path("apset");
  if (p.empty()) return std::nullopt;
  return load_ap_set(p);
}

Lexicon lexicon_for(Settings& s, const ApSet& aps) {
  auto p = s.path("lexicon");
  return p.empty() ? Lexicon::from_ap_set(aps) : load_lexicon(p, &aps);
}

std::vector<LtlStructure> structures_for(Settings& s, const ApSet& aps) {
  auto p = s.path("structures");
  return p.empty() ? std::vector<LtlStructure>{} : load_structures(p, &aps);
}

std::uint64_t required_seed(Settings& s) {
  if (!s.given("seed"))
    throw Error(ErrorCode::kConfigError, "--seed is required for reproducible runs");
  return s.u64("seed", 0);
}

std::unique_ptr<ParaphraseService> paraphraser_for(Settings& s, std::uint64_t seed) {
  auto backend = s.str("paraphrase_backend", "fallback");
  if (backend == "service")
    return std::make_unique<HttpParaphraseService>(HttpParaphraseService::from_env());
  if (backend != "fallback")
    throw Error(ErrorCode::kConfigError, "unknown paraphrase backend '" + backend + "'");
  auto table = s.path("paraphrase_table");
  if (!table.empty())
    return std::make_unique<FallbackParaphraser>(FallbackParaphraser::from_file(seed, table));
  return std::make_unique<FallbackParaphraser>(seed);
}

LexicalOptions lexical_options(Settings& s) {
  LexicalOptions o;
  o.alpha = s.real("alpha", o.alpha);
  o.cooc_weight = s.real("cooc_weight", o.cooc_weight);
  return o;
}

struct Command {
  CLI::App* app;
  Settings settings;
  std::function<int(Settings&, std::ostream&, std::ostream&)> run;
};

void add_common(Command& c, std::initializer_list<const char*> flags) {
  static const std::map<std::string, std::string> help = {
      {"--apset", "propositions (JSON Lines)"},
      {"--structures", "structures (JSON Lines)"},
      {"--annotations", "per-formula annotations (JSON Lines)"},
      {"--lexicon", "lexicon document (JSON)"},
      {"--representation", "raw-prefix | raw-infix | canonical"},
      {"--corpus", "corpus file (JSON Lines)"},
      {"--model", "lexical model file (JSON)"},
      {"--dataset", "dataset adapter (JSON)"},
      {"--seed", "random seed"},
      {"--beam", "beam width"},
      {"--notation", "prefix | infix"},
      {"--out", "output file"},
      {"--alpha", "lexical smoothing constant"},
      {"--cooc-weight", "lexical mixture weight of the co-occurrence term"},
      {"--n-paraphrases", "paraphrases requested per seed sentence"},
      {"--paraphrase-backend", "service | fallback"},
      {"--paraphrase-table", "synonym table for the fallback paraphraser"},
      {"--max-in-flight", "concurrent paraphrase requests"},
      {"--threads", "worker threads"},
  };
  for (const char* f : flags) c.settings.add(c.app, f, help.at(f));
}

int cmd_parse(Settings& s, std::ostream& out, std::ostream&) {
  auto aps = optional_aps(s);
  auto prefix = s.str("prefix"), infix = s.str("infix");
  if (prefix.empty() == infix.empty())
    throw Error(ErrorCode::kConfigError, "give exactly one of --prefix and --infix");
  auto f = prefix.empty() ? parse_infix(infix, aps ? &*aps : nullptr)
                          : parse_prefix(prefix, aps ? &*aps : nullptr);
  auto to = s.str("to", prefix.empty() ? "prefix" : "infix");
  out << print_formula(f, parse_notation(to)) << "\n";
  return 0;
}

int cmd_canonicalize(Settings& s, std::ostream& out, std::ostream&) {
  auto aps = load_ap_set(s.required_path("apset"));
  auto lex = lexicon_for(s, aps);
  auto canonical = s.str("canonical");
  if (!canonical.empty()) {
    auto f = from_canonical(canonical, lex);
    out << print_formula(f, parse_notation(s.str("notation", "prefix"))) << "\n";
    return 0;
  }
  auto formula = s.str("formula");
  if (formula.empty())
    throw Error(ErrorCode::kConfigError, "give --formula or --canonical");
  auto f = parse_formula(formula, parse_notation(s.str("notation", "prefix")), &aps);
  out << to_canonical(f, lex) << "\n";
  return 0;
}

int cmd_backtranslate(Settings& s, std::ostream& out, std::ostream&) {
  auto aps = load_ap_set(s.required_path("apset"));
  auto structures = structures_for(s, aps);
  auto ann_path = s.path("annotations");
  FormulaAnnotations ann = ann_path.empty() ? FormulaAnnotations{} : load_annotations(ann_path, &aps);
  BackTranslator bt(aps, structures, ann);
  auto formula = s.str("formula");
  if (!formula.empty()) {
    auto f = parse_formula(formula, parse_notation(s.str("notation", "prefix")), &aps);
    out << bt.translate(f).text << "\n";
    return 0;
  }
  if (structures.empty())
    throw Error(ErrorCode::kConfigError, "give --formula, or --structures to list all");
  auto formulas = enumerate_formulas(structures, aps);
  for (const auto& f : formulas)
    out << print_formula(f, Notation::kPrefix) << "\t" << bt.translate(f).text << "\n";
  if (s.flag("budget")) {
    auto b = bt.budget(formulas);
    out << "annotations: " << b.total() << " (formula sentences " << b.formula_annotations
        << ", structure templates " << b.structure_templates << ", descriptions "
        << b.ap_descriptions << ")\n";
  }
  return 0;
}

int cmd_synth(Settings& s, std::ostream& out, std::ostream& err) {
  auto seed = required_seed(s);
  auto aps = load_ap_set(s.required_path("apset"));
  auto structures = load_structures(s.required_path("structures"), &aps);
  auto ann_path = s.path("annotations");
  FormulaAnnotations ann = ann_path.empty() ? FormulaAnnotations{} : load_annotations(ann_path, &aps);
  auto lex = lexicon_for(s, aps);
  SynthesisOptions o;
  o.n_paraphrases = s.u64("n_paraphrases", 10);
  if (s.flag("no_augmentation")) o.n_paraphrases = 0;
  o.repr = parse_repr(s.str("representation", "raw-prefix"));
  o.max_in_flight = s.u64("max_in_flight", 4);
  auto dest = s.required_path("out");
  auto svc = paraphraser_for(s, seed);
  BackTranslator bt(aps, structures, ann);
  auto corpus = build_corpus(bt, lex, svc.get(), o, &err);
  corpus.fingerprint["seed"] = std::to_string(seed);
  save_corpus(corpus, dest);
  out << "wrote " << corpus.examples.size() << " examples for "
      << corpus.fingerprint.at("n_formulas") << " formulas to " << dest << "\n";
  return 0;
}

int cmd_train(Settings& s, std::ostream& out, std::ostream&) {
  auto corpus = load_corpus(s.required_path("corpus"));
  auto repr = parse_repr(s.str("representation", "raw-prefix"));
  std::optional<Lexicon> lex;
  if (repr == TargetRepr::kCanonical) {
    auto aps = load_ap_set(s.required_path("apset"));
    lex = lexicon_for(s, aps);
  }
  auto model = train_lexical(corpus, repr, lex ? &*lex : nullptr, lexical_options(s));
  auto dest = s.required_path("out");
  save_model(model, dest);
  out << "trained on " << model.examples() << " examples; wrote " << dest << "\n";
  return 0;
}

int cmd_translate(Settings& s, std::ostream& out, std::ostream&) {
  auto model = load_model(s.required_path("model"));
  auto aps = load_ap_set(s.required_path("apset"));
  auto repr = parse_repr(s.str("representation", "raw-prefix"));
  auto lex = lexicon_for(s, aps);
  const Lexicon* lexp = repr == TargetRepr::kCanonical ? &lex : nullptr;
  auto input = s.str("input");
  if (input.empty()) throw Error(ErrorCode::kConfigError, "--input is required");
  auto beam = s.u64("beam", 1);

  std::vector<std::string> valid;
  std::set<std::string> seen;
  auto add = [&](const Formula& f) {
    auto t = render_target(f, repr, lexp);
    if (seen.insert(t).second) valid.push_back(std::move(t));
  };
  for (const auto& f : enumerate_formulas(structures_for(s, aps), aps)) add(f);
  auto dataset = s.path("dataset");
  if (!dataset.empty())
    for (const auto& e : ingest(dataset, false).examples) add(e.target);
  LexicalScorer scorer(model);
  bool constrained = !s.flag("no_constrained_decoding");
  if (constrained && valid.empty())
    throw Error(ErrorCode::kEmptyOutputSet,
                "constrained decoding needs --structures or --dataset");
  DecodeResult r;
  if (constrained) {
    r = constrained_decode(input, scorer, build_trie(valid), beam);
  } else {
    auto vocab = model.output_vocabulary();
    r = unconstrained_decode(input, scorer, {vocab.begin(), vocab.end()},
                             model.max_output_length() + 4, beam);
  }
  out << r.text << "\n";
  return 0;
}

int cmd_check(Settings& s, std::ostream& out, std::ostream&) {
  auto aps = optional_aps(s);
  auto formula = s.str("formula");
  auto trace = s.str("trace");
  if (formula.empty() || trace.empty())
    throw Error(ErrorCode::kConfigError, "--formula and --trace are required");
  auto f = parse_formula(formula, parse_notation(s.str("notation", "prefix")),
                         aps ? &*aps : nullptr);
  out << (evaluate_trace(f, parse_trace(trace, aps)) ? "SAT" : "UNSAT") << "\n";
  return 0;
}

int cmd_eval(Settings& s, std::ostream& out, std::ostream&) {
  EvalConfig c;
  c.seed = required_seed(s);
  c.scenario = parse_scenario(s.str("scenario", "golden-cv"));
  c.repr = parse_repr(s.str("representation", "raw-prefix"));
  c.constrained = !s.flag("no_constrained_decoding");
  c.augmented = !s.flag("no_augmentation");
  c.k_folds = s.u64("k_folds", 5);
  c.beam = s.u64("beam", 1);
  c.scorer = s.str("scorer", "lexical");
  c.threads = std::max<std::uint64_t>(1, s.u64("threads", 4));
  c.lexical = lexical_options(s);

  auto adapter = load_adapter(s.required_path("dataset"));
  auto data = ingest(adapter, !s.flag("skip_stat_check"));
  auto lex = lexicon_for(s, data.aps);
  std::optional<Corpus> corpus;
  if (c.scenario == Scenario::kLowResource) corpus = load_corpus(s.required_path("corpus"));

  EvalInputs in;
  in.dataset = &data;
  in.synthetic = corpus ? &*corpus : nullptr;
  in.lexicon = &lex;
  auto report = run_eval(c, in);
  auto dest = s.path("report");
  if (!dest.empty()) write_file(dest, report.to_json().dump(2) + "\n");
  out << report.to_table();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Natural language to LTL: parsing, synthesis, decoding, evaluation", "nl2ltl");
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with default option values");

  std::map<std::string, Command> cmds;
  auto sub = [&](const std::string& name, const std::string& desc,
                 std::function<int(Settings&, std::ostream&, std::ostream&)> fn) -> Command& {
    auto& c = cmds[name];
    c.app = app.add_subcommand(name, desc);
    c.app->add_option("--config", config_path, "JSON file with default option values");
    c.run = std::move(fn);
    return c;
  };

  {
    auto& c = sub("parse", "parse a formula and print it in the other notation", cmd_parse);
    c.settings.add(c.app, "--prefix", "formula in prefix notation");
    c.settings.add(c.app, "--infix", "formula in infix notation");
    c.settings.add(c.app, "--to", "output notation (prefix | infix)");
    add_common(c, {"--apset"});
  }
  {
    auto& c = sub("canonicalize", "convert between a formula and its canonical form",
                  cmd_canonicalize);
    c.settings.add(c.app, "--formula", "formula to canonicalize");
    c.settings.add(c.app, "--canonical", "canonical form to parse back");
    add_common(c, {"--apset", "--lexicon", "--notation"});
  }
  {
    auto& c = sub("backtranslate", "render formulas as English", cmd_backtranslate);
    c.settings.add(c.app, "--formula", "single formula (otherwise every structure instance)");
    c.settings.add_flag(c.app, "--budget", "also report the annotation budget");
    add_common(c, {"--apset", "--structures", "--annotations", "--notation"});
  }
  {
    auto& c = sub("synth", "build a synthetic corpus", cmd_synth);
    c.settings.add_flag(c.app, "--no-augmentation", "skip paraphrasing");
    add_common(c, {"--apset", "--structures", "--annotations", "--lexicon", "--representation",
                   "--n-paraphrases", "--paraphrase-backend", "--paraphrase-table",
                   "--max-in-flight", "--seed", "--out"});
  }
  {
    auto& c = sub("train", "train the lexical scorer on a corpus", cmd_train);
    add_common(c, {"--corpus", "--representation", "--apset", "--lexicon", "--alpha",
                   "--cooc-weight", "--out"});
  }
  {
    auto& c = sub("translate", "translate one command", cmd_translate);
    c.settings.add(c.app, "--input", "natural-language command");
    c.settings.add_flag(c.app, "--no-constrained-decoding", "decode over the full vocabulary");
    add_common(c, {"--model", "--apset", "--structures", "--lexicon", "--dataset",
                   "--representation", "--beam"});
  }
  {
    auto& c = sub("check", "evaluate a formula on a finite trace", cmd_check);
    c.settings.add(c.app, "--formula", "formula");
    c.settings.add(c.app, "--trace", "trace such as \"{} {B} {A,B}\"");
    add_common(c, {"--apset", "--notation"});
  }
  {
    auto& c = sub("eval", "run an evaluation", cmd_eval);
    c.settings.add(c.app, "--scenario", "golden-cv | low-resource");
    c.settings.add(c.app, "--scorer", "lexical | oracle");
    c.settings.add(c.app, "--k-folds", "cross-validation folds");
    c.settings.add(c.app, "--report", "write the JSON report here");
    c.settings.add_flag(c.app, "--no-constrained-decoding", "decode over the full vocabulary");
    c.settings.add_flag(c.app, "--no-augmentation", "train without paraphrases");
    c.settings.add_flag(c.app, "--skip-stat-check", "do not compare declared statistics");
    add_common(c, {"--dataset", "--corpus", "--lexicon", "--representation", "--seed",
                   "--beam", "--alpha", "--cooc-weight", "--threads"});
  }

  if (!args.empty() && args.front().rfind("-", 0) != 0 &&
      std::find(kSubcommands.begin(), kSubcommands.end(), args.front()) == kSubcommands.end()) {
    err << "nl2ltl: " << error_code_name(ErrorCode::kUnknownSubcommand) << ": '"
        << args.front() << "'\n";
    return 2;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "nl2ltl: " << error_code_name(ErrorCode::kConfigError) << ": " << msg << "\n";
    return 2;
  }

  for (auto& [name, c] : cmds) {
    if (!c.app->parsed()) continue;
    try {
      c.settings.load_config(config_path);
      std::ostringstream buffered;
      int rc = c.run(c.settings, buffered, err);
      nlohmann::ordered_json echo;
      echo["command"] = name;
      echo["config"] = c.settings.resolved();
      err << "resolved config: " << echo.dump() << "\n";
      out << buffered.str();
      return rc;
    } catch (const Error& e) {
      std::string msg = e.what();
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      err << "nl2ltl: " << msg << "\n";
      return e.code() == ErrorCode::kStatMismatch ? 3 : 1;
    } catch (const std::exception& e) {
      err << "nl2ltl: internal error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}

}  // namespace nl2ltl
