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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nl2ltl/dataset.hpp"
#include "nl2ltl/lexical_model.hpp"

namespace nl2ltl {

/// Equality after collapsing whitespace runs; no other normalization.
bool exact_match(std::string_view predicted, std::string_view gold);

struct Fold {
  std::vector<std::size_t> train;  // sorted indices
  std::vector<std::size_t> test;   // sorted indices
};

/// Seeded shuffle, then k contiguous test blocks whose sizes differ by at
/// most one. Throws InvalidArgument for k < 2 and TooFewExamples for n < k.
std::vector<Fold> kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

enum class Scenario { kGoldenCv, kLowResource };
std::string_view scenario_name(Scenario s);
Scenario parse_scenario(std::string_view name);

struct EvalConfig {
  Scenario scenario = Scenario::kGoldenCv;
  TargetRepr repr = TargetRepr::kRawPrefix;
  bool constrained = true;
  /// Low-resource only: train on paraphrases as well as seed sentences.
  bool augmented = true;
  std::size_t k_folds = 5;
  std::uint64_t seed = 0;
  std::size_t beam = 1;
  std::string scorer = "lexical";  // lexical | oracle
  LexicalOptions lexical;
  std::size_t threads = 4;
};

struct EvalInputs {
  const Dataset* dataset = nullptr;  // golden test data (and training data for CV)
  const Corpus* synthetic = nullptr;  // low-resource training data
  const Lexicon* lexicon = nullptr;   // required for the canonical representation
  /// Valid target formulas for constrained decoding; empty means "the
  /// dataset's structures enumerated over its propositions, plus every
  /// golden target".
  std::vector<Formula> valid_formulas;
};

struct Prediction {
  std::size_t fold = 0;
  std::string source_id;
  std::string input;
  std::string gold;
  std::string predicted;
  bool correct = false;
};

struct EvalReport {
  std::string dataset;
  EvalConfig config;
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  std::vector<double> fold_accuracy;
  std::size_t valid_set_size = 0;
  std::size_t train_examples = 0;  // summed over folds
  std::vector<Prediction> predictions;
  /// gold -> predicted -> count, misses only.
  std::map<std::string, std::map<std::string, std::size_t>> confusion;

  nlohmann::ordered_json to_json() const;
  std::string to_table() const;
};

EvalReport run_eval(const EvalConfig& config, const EvalInputs& inputs);

}  // namespace nl2ltl
