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

#include <iosfwd>
#include <string>
#include <vector>

#include "nl2ltl/backtranslate.hpp"
#include "nl2ltl/corpus.hpp"
#include "nl2ltl/paraphrase.hpp"

namespace nl2ltl {

/// Every instantiation of every structure, in structure order and then in
/// lexicographic order of the binding (positions taken from `aps`). Throws
/// InsufficientAps when a structure admits no binding and InvalidStructure
/// when two structures produce the same formula.
std::vector<Formula> enumerate_formulas(const std::vector<LtlStructure>& structures,
                                        const ApSet& aps);

/// Number of distinct propositions that some hole can be bound to.
std::size_t count_bindable_aps(const std::vector<LtlStructure>& structures,
                               const ApSet& aps);

/// "f00001", "f00002", ... for the i-th (0-based) enumerated formula.
std::string formula_id(std::size_t index);

struct SynthesisOptions {
  std::size_t n_paraphrases = 10;
  TargetRepr repr = TargetRepr::kRawPrefix;
  std::size_t max_in_flight = 4;
};

/// One back-translated example per formula plus up to `n_paraphrases`
/// paraphrased ones. A formula whose paraphrase request fails keeps its
/// back-translated example; the failure is written to `log` when given.
/// `lex` is only consulted for the canonical representation.
Corpus build_corpus(const BackTranslator& translator, const Lexicon& lex,
                    const ParaphraseService* paraphraser,
                    const SynthesisOptions& options, std::ostream* log = nullptr);

/// Order-independent digest of a proposition set / structure list.
std::string fingerprint_aps(const ApSet& aps);
std::string fingerprint_structures(const std::vector<LtlStructure>& structures);

}  // namespace nl2ltl
