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

#include "nl2ltl/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "nl2ltl/decode.hpp"
#include "nl2ltl/error.hpp"
#include "nl2ltl/synthesis.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers; rethrows the first
// failure.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * v);
  return buf;
}

}  // namespace

bool exact_match(std::string_view predicted, std::string_view gold) {
  return normalize_whitespace(predicted) == normalize_whitespace(gold);
}

std::vector<Fold> kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  if (n < k)
    throw Error(ErrorCode::kTooFewExamples, std::to_string(n) +
                                                " examples cannot fill " +
                                                std::to_string(k) + " folds");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng() % i)]);

  std::vector<Fold> folds(k);
  std::size_t at = 0;
  for (std::size_t f = 0; f < k; ++f) {
    std::size_t size = n / k + (f < n % k ? 1 : 0);
    folds[f].test.assign(order.begin() + at, order.begin() + at + size);
    at += size;
    std::sort(folds[f].test.begin(), folds[f].test.end());
  }
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<bool> in_test(n, false);
    for (auto i : folds[f].test) in_test[i] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_test[i]) folds[f].train.push_back(i);
  }
  return folds;
}

std::string_view scenario_name(Scenario s) {
  return s == Scenario::kGoldenCv ? "golden-cv" : "low-resource";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "golden-cv") return Scenario::kGoldenCv;
  if (name == "low-resource") return Scenario::kLowResource;
  throw Error(ErrorCode::kConfigError, "unknown scenario '" + std::string(name) + "'");
}

EvalReport run_eval(const EvalConfig& config, const EvalInputs& inputs) {
  if (!inputs.dataset) throw Error(ErrorCode::kConfigError, "evaluation needs a dataset");
  if (config.scorer != "lexical" && config.scorer != "oracle")
    throw Error(ErrorCode::kConfigError, "unknown scorer '" + config.scorer + "'");
  if (config.beam == 0) throw Error(ErrorCode::kConfigError, "beam must be >= 1");
  const auto& data = *inputs.dataset;
  if (data.examples.empty())
    throw Error(ErrorCode::kEmptyCorpus, data.name + " has no examples");
  const Lexicon* lex = inputs.lexicon;
  if (config.repr == TargetRepr::kCanonical && !lex)
    throw Error(ErrorCode::kConfigError, "canonical representation needs a lexicon");

  // Valid output set.
  std::vector<Formula> valid = inputs.valid_formulas;
  if (valid.empty() && !data.structures.empty())
    valid = enumerate_formulas(data.structures, data.aps);
  for (const auto& e : data.examples) valid.push_back(e.target);
  std::vector<std::string> valid_text;
  std::set<std::string> seen;
  std::size_t max_len = 0;
  for (const auto& f : valid) {
    auto text = render_target(f, config.repr, lex);
    if (seen.insert(text).second) {
      max_len = std::max(max_len, split_whitespace(text).size());
      valid_text.push_back(std::move(text));
    }
  }
  const auto trie = build_trie(valid_text);

  // Fold plan.
  std::vector<Fold> folds;
  Corpus synthetic;
  if (config.scenario == Scenario::kGoldenCv) {
    folds = kfold_split(data.examples.size(), config.k_folds, config.seed);
  } else {
    if (!inputs.synthetic)
      throw Error(ErrorCode::kConfigError, "low-resource evaluation needs a corpus");
    synthetic = config.augmented ? *inputs.synthetic : without_paraphrases(*inputs.synthetic);
    Fold only;
    only.test.resize(data.examples.size());
    std::iota(only.test.begin(), only.test.end(), 0);
    folds.push_back(std::move(only));
  }

  EvalReport report;
  report.dataset = data.name;
  report.config = config;
  report.valid_set_size = trie.accepted_count();

  for (std::size_t f = 0; f < folds.size(); ++f) {
    const auto& fold = folds[f];
    Corpus train;
    if (config.scenario == Scenario::kGoldenCv) {
      for (auto i : fold.train) train.examples.push_back(data.examples[i]);
    } else {
      train = synthetic;
    }
    report.train_examples += train.examples.size();

    std::optional<LexicalModel> model;
    std::vector<std::string> vocab = trie.vocabulary();
    if (config.scorer == "lexical") {
      model = train_lexical(train, config.repr, lex, config.lexical);
      for (const auto& t : model->output_vocabulary()) vocab.push_back(t);
    }

    std::vector<Prediction> preds(fold.test.size());
    parallel_for(fold.test.size(), config.threads, [&](std::size_t j) {
      const auto& ex = data.examples[fold.test[j]];
      auto gold = render_target(ex.target, config.repr, lex);
      std::unique_ptr<Scorer> scorer;
      if (model)
        scorer = std::make_unique<LexicalScorer>(*model);
      else
        scorer = std::make_unique<OracleScorer>(gold);
      auto out = config.constrained
                     ? constrained_decode(ex.text, *scorer, trie, config.beam)
                     : unconstrained_decode(ex.text, *scorer, vocab, max_len + 4,
                                            config.beam);
      preds[j] = {f, ex.source_id, ex.text, gold, out.text, exact_match(out.text, gold)};
    });

    std::size_t hits = 0;
    for (auto& p : preds) {
      hits += p.correct ? 1 : 0;
      if (!p.correct) ++report.confusion[p.gold][p.predicted];
      report.predictions.push_back(std::move(p));
    }
    report.fold_accuracy.push_back(static_cast<double>(hits) /
                                   static_cast<double>(fold.test.size()));
    report.correct += hits;
    report.total += fold.test.size();
  }
  report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.total);
  return report;
}

nlohmann::ordered_json EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["dataset"] = dataset;
  j["config"] = {
      {"scenario", scenario_name(config.scenario)},
      {"representation", repr_name(config.repr)},
      {"constrained", config.constrained},
      {"augmented", config.augmented},
      {"k_folds", config.scenario == Scenario::kGoldenCv ? config.k_folds : 1},
      {"seed", config.seed},
      {"beam", config.beam},
      {"scorer", config.scorer},
      {"lexical",
       {{"alpha", config.lexical.alpha},
        {"cooc_weight", config.lexical.cooc_weight},
        {"position_buckets", config.lexical.position_buckets},
        {"skip_window", config.lexical.skip_window}}},
  };
  j["accuracy"] = accuracy;
  j["correct"] = correct;
  j["total"] = total;
  j["fold_accuracy"] = fold_accuracy;
  j["valid_set_size"] = valid_set_size;
  j["train_examples"] = train_examples;
  j["confusion"] = confusion;
  auto& preds = j["predictions"] = nlohmann::ordered_json::array();
  for (const auto& p : predictions)
    preds.push_back({{"fold", p.fold},
                     {"source_id", p.source_id},
                     {"input", p.input},
                     {"gold", p.gold},
                     {"predicted", p.predicted},
                     {"correct", p.correct}});
  return j;
}

std::string EvalReport::to_table() const {
  std::ostringstream out;
  out << "dataset         " << dataset << "\n"
      << "scenario        " << scenario_name(config.scenario) << "\n"
      << "representation  " << repr_name(config.repr) << "\n"
      << "constrained     " << (config.constrained ? "yes" : "no") << "\n"
      << "augmented       " << (config.augmented ? "yes" : "no") << "\n"
      << "scorer          " << config.scorer << "\n"
      << "seed            " << config.seed << "\n"
      << "valid outputs   " << valid_set_size << "\n";
  for (std::size_t f = 0; f < fold_accuracy.size(); ++f)
    out << "fold " << f << "          " << percent(fold_accuracy[f]) << "\n";
  out << "accuracy        " << percent(accuracy) << "  (" << correct << "/" << total
      << ")\n";
  return out.str();
}

}  // namespace nl2ltl
