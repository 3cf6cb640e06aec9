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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace nl2ltl {

/// Produces candidate rewordings of one sentence. Implementations must be
/// safe to call from several threads at once.
class ParaphraseService {
 public:
  virtual ~ParaphraseService() = default;
  /// Raw candidates; `paraphrase()` filters them.
  virtual std::vector<std::string> generate(const std::string& sentence,
                                            std::size_t n) const = 0;
  /// Stable description recorded in corpus fingerprints.
  virtual std::string describe() const = 0;
};

/// At most `n` non-empty candidates that differ from `sentence` after case and
/// whitespace normalization, without exact duplicates. Throws InvalidArgument
/// when n == 0.
std::vector<std::string> paraphrase(const std::string& sentence, std::size_t n,
                                    const ParaphraseService& svc);

/// The completion prompt, byte for byte.
std::string build_paraphrase_prompt(const std::string& sentence, std::size_t n);

/// Keeps the bodies of lines numbered "k."; everything else is dropped.
std::vector<std::string> parse_numbered_list(const std::string& completion);

/// Client for an operator-configured text-completion endpoint.
class HttpParaphraseService : public ParaphraseService {
 public:
  struct Options {
    std::string url;  ///< e.g. https://host/v1/completions
    std::string model;
    std::string token;
    int max_attempts = 3;
    std::chrono::milliseconds base_backoff{500};
    std::chrono::seconds timeout{60};
    double temperature = 0.7;
    int max_tokens = 512;
  };

  explicit HttpParaphraseService(Options options);

  /// Reads NL2LTL_PARAPHRASE_URL, NL2LTL_PARAPHRASE_MODEL and
  /// NL2LTL_PARAPHRASE_TOKEN. Throws ConfigError when the URL is unset.
  static HttpParaphraseService from_env();

  std::vector<std::string> generate(const std::string& sentence,
                                    std::size_t n) const override;
  std::string describe() const override;

 private:
  std::vector<std::string> attempt(const std::string& sentence,
                                   std::size_t n) const;
  Options options_;
};

/// Offline paraphraser: phrase-level synonym substitution plus clause
/// reordering around a few connectives. Output depends only on the table,
/// the seed and the sentence.
class FallbackParaphraser : public ParaphraseService {
 public:
  explicit FallbackParaphraser(std::uint64_t seed,
                               nlohmann::json table = default_table());

  static const nlohmann::json& default_table();
  static FallbackParaphraser from_file(std::uint64_t seed,
                                       const std::filesystem::path& path);

  std::vector<std::string> generate(const std::string& sentence,
                                    std::size_t n) const override;
  std::string describe() const override;

  /// Every variant the rules can produce, before seeded selection.
  std::vector<std::string> candidates(const std::string& sentence) const;

 private:
  struct Substitution {
    std::vector<std::string> phrase;
    std::vector<std::vector<std::string>> alternatives;
  };
  struct Reorder {
    std::vector<std::string> connective;
    std::string pattern;  // uses {1} (before connective) and {2} (after)
  };

  std::uint64_t seed_;
  std::uint64_t table_hash_;
  std::vector<Substitution> substitutions_;
  std::vector<Reorder> reorders_;
};

}  // namespace nl2ltl
