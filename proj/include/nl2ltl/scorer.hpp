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

// Next-token scoring contract used by the decoders:
//
//   log p(w_i | input, w_1 .. w_{i-1})   for each candidate w_i
//
// A fine-tuned sequence model plugs in here, either in-process or through
// RemoteScorer.

#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace nl2ltl {

/// End-of-sequence pseudo-token offered at complete outputs.
inline const std::string kEndToken = "</s>";

class Scorer {
 public:
  virtual ~Scorer() = default;
  /// One log-score per candidate, in candidate order. Implementations must be
  /// deterministic and safe for concurrent calls.
  virtual std::vector<double> score_next(
      const std::vector<std::string>& input_tokens,
      const std::vector<std::string>& output_prefix,
      const std::vector<std::string>& candidates) const = 0;
};

/// Puts all mass on one target string: 0 for its next token (or kEndToken
/// once complete), -100 for everything else.
class OracleScorer : public Scorer {
 public:
  explicit OracleScorer(std::string target);
  std::vector<double> score_next(const std::vector<std::string>& input_tokens,
                                 const std::vector<std::string>& output_prefix,
                                 const std::vector<std::string>& candidates) const override;

 private:
  std::vector<std::string> target_;
};

/// Scores every candidate 0.
class UniformScorer : public Scorer {
 public:
  std::vector<double> score_next(const std::vector<std::string>&,
                                 const std::vector<std::string>&,
                                 const std::vector<std::string>& candidates) const override {
    return std::vector<double>(candidates.size(), 0.0);
  }
};

/// Queries an operator-supplied endpoint. Request:
///   {"input_tokens": [...], "output_prefix": [...], "candidates": [...]}
/// Response: {"scores": [...]} with one number per candidate.
class RemoteScorer : public Scorer {
 public:
  RemoteScorer(std::string url, std::string token = {},
               std::chrono::seconds timeout = std::chrono::seconds(30),
               int max_attempts = 3);
  /// Reads NL2LTL_SCORER_URL and NL2LTL_SCORER_TOKEN.
  static RemoteScorer from_env();
  std::vector<double> score_next(const std::vector<std::string>& input_tokens,
                                 const std::vector<std::string>& output_prefix,
                                 const std::vector<std::string>& candidates) const override;

 private:
  std::string url_;
  std::string token_;
  std::chrono::seconds timeout_;
  int max_attempts_;
};

}  // namespace nl2ltl
