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

// Count-based next-token model, a small stand-in for a fine-tuned sequence
// model.
//
// Input side: word features. Besides the words themselves there are coarse
// position features ("blue@0" = "blue" in the first third of the sentence)
// and ordered skip pairs ("blue>yellow" = "blue" before "yellow" within a
// short window), so that sentences that differ only in order score apart.
//
// Output side: events "token#k/s", where k is the number of structural tokens
// (operators, parentheses, commas) emitted before the token and s is the last
// of them ("^" at the start); the same proposition in different slots is a
// different event. "X" right after "F" and "X" right after "!" differ even at
// the same k.
//
//   score(c) = log softmax_c( w * log P_cooc(x | c) + (1 - w) * log P_bigram(c) )
//
// P_cooc is a Bernoulli naive-Bayes likelihood of the input's feature set:
// each training feature f is present with probability
// (count(f, c) + alpha) / (count(c) + 2 alpha), where count(c) is the number
// of examples whose output contains event c. Absent features count too, so
// "go to the blue room" is evidence against a sequencing event because it
// lacks "then". Features never seen in training are ignored. P_bigram is the
// smoothed conditional on the previous event. Neither term depends on which
// other candidates are presented, so restricting the candidate set never
// reorders the remaining ones.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "nl2ltl/corpus.hpp"
#include "nl2ltl/scorer.hpp"

namespace nl2ltl {

struct LexicalOptions {
  double alpha = 0.1;
  double cooc_weight = 0.5;
  std::size_t position_buckets = 3;
  std::size_t skip_window = 3;
  friend bool operator==(const LexicalOptions&, const LexicalOptions&) = default;
};

class LexicalModel {
 public:
  using Counts = std::map<std::string, std::map<std::string, std::uint64_t>>;

  LexicalModel() = default;
  LexicalModel(LexicalOptions options, std::set<std::string> structural);

  /// Adds one (input, target tokens) pair. Call finalize() before scoring.
  void observe(const std::vector<std::string>& input_tokens,
               const std::vector<std::string>& output_tokens);

  /// Precomputes the per-event absent-feature mass.
  void finalize();

  /// Throws InvalidArgument unless finalized.
  std::vector<double> score_next(const std::vector<std::string>& input_tokens,
                                 const std::vector<std::string>& output_prefix,
                                 const std::vector<std::string>& candidates) const;

  /// Distinct input features of a tokenized sentence, sorted.
  std::vector<std::string> features(const std::vector<std::string>& input_tokens) const;
  /// Event key of `token` after `prefix`.
  std::string event(const std::vector<std::string>& prefix, const std::string& token) const;

  std::uint64_t cooccurrence(const std::string& feature, const std::string& event) const;
  std::uint64_t bigram(const std::string& previous, const std::string& event) const;
  /// Number of training examples whose output contains `event`.
  std::uint64_t event_examples(const std::string& event) const;
  std::size_t examples() const noexcept { return examples_; }
  const LexicalOptions& options() const noexcept { return options_; }
  /// Output tokens seen in training, kEndToken excluded.
  std::set<std::string> output_vocabulary() const;
  std::size_t max_output_length() const noexcept { return max_output_length_; }

  nlohmann::ordered_json to_json() const;
  static LexicalModel from_json(const nlohmann::json& j);

  friend bool operator==(const LexicalModel&, const LexicalModel&) = default;

 private:
  // "k/s" context of the next token after `prefix`.
  std::string slot(const std::vector<std::string>& prefix) const;
  std::string previous_event(const std::vector<std::string>& prefix) const;

  LexicalOptions options_;
  std::set<std::string> structural_;
  Counts cooc_;
  Counts bigram_;
  std::map<std::string, std::uint64_t> event_examples_;
  std::map<std::string, double> absent_mass_;  // derived by finalize()
  bool finalized_ = false;
  std::size_t examples_ = 0;
  std::size_t max_output_length_ = 0;
};

/// Tokens that advance the slot counter for a representation: operator
/// symbols or lexicon operator words, parentheses and commas.
std::set<std::string> structural_tokens(TargetRepr repr, const Lexicon* lex);

/// Trains on every example, with targets rendered in `repr`. Throws
/// EmptyCorpus.
LexicalModel train_lexical(const Corpus& corpus, TargetRepr repr,
                           const Lexicon* lex = nullptr, LexicalOptions options = {});

void save_model(const LexicalModel& model, const std::filesystem::path& path);
LexicalModel load_model(const std::filesystem::path& path);

class LexicalScorer : public Scorer {
 public:
  explicit LexicalScorer(const LexicalModel& model) : model_(model) {}
  std::vector<double> score_next(const std::vector<std::string>& input_tokens,
                                 const std::vector<std::string>& output_prefix,
                                 const std::vector<std::string>& candidates) const override {
    return model_.score_next(input_tokens, output_prefix, candidates);
  }

 private:
  const LexicalModel& model_;
};

}  // namespace nl2ltl
