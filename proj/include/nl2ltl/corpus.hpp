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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "nl2ltl/canonical.hpp"
#include "nl2ltl/formula.hpp"

namespace nl2ltl {

/// Label space a model is trained and evaluated in.
enum class TargetRepr { kRawPrefix, kRawInfix, kCanonical };

std::string_view repr_name(TargetRepr repr);
/// Accepts raw-prefix, raw-infix, canonical. Throws ConfigError.
TargetRepr parse_repr(std::string_view name);

/// `lex` is required for the canonical representation.
std::string render_target(const Formula& f, TargetRepr repr,
                          const Lexicon* lex = nullptr);
Formula parse_target(std::string_view text, TargetRepr repr,
                     const Lexicon* lex = nullptr);

enum class Provenance { kGolden, kBacktranslated, kParaphrased };

std::string_view provenance_name(Provenance p);
Provenance parse_provenance(std::string_view name);

struct Example {
  std::string text;
  Formula target;
  TargetRepr repr = TargetRepr::kRawPrefix;
  /// `target` rendered in `repr`.
  std::string target_text;
  Provenance provenance = Provenance::kGolden;
  std::string source_id;
};

Example make_example(std::string text, Formula target, TargetRepr repr,
                     const Lexicon* lex, Provenance provenance,
                     std::string source_id);

struct Corpus {
  std::vector<Example> examples;
  /// Hashes of the inputs the corpus was built from, plus paraphrase settings.
  std::map<std::string, std::string> fingerprint;
};

/// Sorts by (source_id, provenance), keeping generation order within ties,
/// then drops repeated (normalized text, target_text) pairs.
void canonicalize_corpus(Corpus& corpus);

/// Examples whose provenance is not paraphrased.
Corpus without_paraphrases(const Corpus& corpus);

/// JSON Lines, one Example per line; the fingerprint goes to
/// "<path>.meta.json".
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& path);

}  // namespace nl2ltl
