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

// Canonical form: an English-like, one-to-one transcription of a formula.
//
//   F (B | R)  ->  "finally ( or ( go to the blue room , go to the red room ) )"
//
// Operators become single lowercase words; propositions become their lexicon
// phrase; every operator wraps its arguments in "( ... )" separated by " , ".

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "nl2ltl/formula.hpp"

namespace nl2ltl {

class Lexicon {
 public:
  /// `operator_phrases` is keyed by finally/globally/until/and/or/not; missing
  /// keys take the key itself as the phrase.
  Lexicon(std::map<std::string, std::string> operator_phrases,
          std::map<std::string, std::string> ap_phrases,
          std::map<std::string, std::string> structure_templates = {});

  /// Operator phrases default; each proposition's phrase is its description.
  static Lexicon from_ap_set(const ApSet& aps);

  const std::string& operator_phrase(Op op) const;
  /// Throws MissingPhrase.
  const std::string& ap_phrase(const std::string& name) const;
  bool has_ap_phrase(const std::string& name) const {
    return ap_phrases_.count(name) > 0;
  }

  const std::map<std::string, std::string>& operator_phrases() const {
    return operator_phrases_;
  }
  const std::map<std::string, std::string>& ap_phrases() const {
    return ap_phrases_;
  }
  const std::map<std::string, std::string>& structure_templates() const {
    return structure_templates_;
  }

  /// Operator whose phrase is `word`, if any.
  std::optional<Op> operator_for(const std::string& word) const;
  /// All propositions whose phrase is exactly `phrase`.
  std::vector<std::string> aps_for(const std::string& phrase) const;

  /// Throws MissingPhrase if some proposition lacks a phrase.
  void check_covers(const ApSet& aps) const;

 private:
  std::map<std::string, std::string> operator_phrases_;
  std::map<std::string, std::string> ap_phrases_;
  std::map<std::string, std::string> structure_templates_;
  std::map<std::string, Op> op_by_word_;
  std::map<std::string, std::vector<std::string>> aps_by_phrase_;
};

/// Loads the JSON lexicon document. When `aps` is supplied, propositions the
/// file does not mention take their description as phrase.
Lexicon load_lexicon(const std::filesystem::path& path,
                     const ApSet* aps = nullptr);

std::string to_canonical(const Formula& f, const Lexicon& lex);

Formula from_canonical(std::string_view text, const Lexicon& lex);

}  // namespace nl2ltl
