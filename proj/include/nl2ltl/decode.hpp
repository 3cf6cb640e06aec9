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

#include <string>
#include <vector>

#include "nl2ltl/scorer.hpp"
#include "nl2ltl/trie.hpp"

namespace nl2ltl {

/// Lowercases, splits punctuation off words and drops it.
std::vector<std::string> tokenize_input(std::string_view text);

struct DecodeResult {
  std::string text;
  /// Sum of the (sanitized) scores of the chosen tokens, end token included.
  double score = 0.0;
};

/// Scorer outputs are clamped to a finite range; NaN and a wrong number of
/// scores count as the lowest score.
std::vector<double> sanitize_scores(std::vector<double> scores, std::size_t expected);

/// Decodes over the trie only, so the result is always an accepted string.
/// At terminal nodes kEndToken competes with the continuations; ties go to
/// the end token, then to the lexicographically smallest token. With
/// beam > 1 the greedy path is also considered, so the returned score is
/// never below the beam = 1 score.
DecodeResult constrained_decode(std::string_view input, const Scorer& scorer,
                                const OutputTrie& trie, std::size_t beam = 1);

/// Same search over `vocab` plus kEndToken, stopping after `max_len` tokens.
/// The result need not be well-formed.
DecodeResult unconstrained_decode(std::string_view input, const Scorer& scorer,
                                  const std::vector<std::string>& vocab,
                                  std::size_t max_len, std::size_t beam = 1);

}  // namespace nl2ltl
