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

#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "nl2ltl/error.hpp"
#include "nl2ltl/http.hpp"
#include "nl2ltl/scorer.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

OracleScorer::OracleScorer(std::string target)
    : target_(split_whitespace(target)) {}

std::vector<double> OracleScorer::score_next(
    const std::vector<std::string>&, const std::vector<std::string>& prefix,
    const std::vector<std::string>& candidates) const {
  std::vector<double> out(candidates.size(), -100.0);
  bool on_path = prefix.size() <= target_.size() &&
                 std::equal(prefix.begin(), prefix.end(), target_.begin());
  if (!on_path) return out;
  const auto& want = prefix.size() == target_.size() ? kEndToken : target_[prefix.size()];
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i] == want) out[i] = 0.0;
  return out;
}

RemoteScorer::RemoteScorer(std::string url, std::string token,
                           std::chrono::seconds timeout, int max_attempts)
    : url_(std::move(url)),
      token_(std::move(token)),
      timeout_(timeout),
      max_attempts_(max_attempts) {
  split_url(url_);
  if (max_attempts_ < 1)
    throw Error(ErrorCode::kConfigError, "max_attempts must be >= 1");
}

RemoteScorer RemoteScorer::from_env() {
  const char* url = std::getenv("NL2LTL_SCORER_URL");
  const char* token = std::getenv("NL2LTL_SCORER_TOKEN");
  if (!url || !*url)
    throw Error(ErrorCode::kConfigError, "NL2LTL_SCORER_URL is not set");
  return RemoteScorer(url, token ? token : "");
}

std::vector<double> RemoteScorer::score_next(
    const std::vector<std::string>& input_tokens,
    const std::vector<std::string>& output_prefix,
    const std::vector<std::string>& candidates) const {
  nlohmann::json req{{"input_tokens", input_tokens},
                     {"output_prefix", output_prefix},
                     {"candidates", candidates}};
  const auto body = req.dump();
  auto delay = std::chrono::milliseconds(200);
  for (int attempt = 1;; ++attempt) {
    try {
      auto res = nlohmann::json::parse(post_json(url_, token_, body, timeout_));
      auto scores = res.at("scores").get<std::vector<double>>();
      if (scores.size() != candidates.size())
        throw Error(ErrorCode::kMalformedServiceResponse,
                    "scorer returned " + std::to_string(scores.size()) +
                        " scores for " + std::to_string(candidates.size()) +
                        " candidates");
      return scores;
    } catch (const nlohmann::json::exception& e) {
      if (attempt >= max_attempts_)
        throw Error(ErrorCode::kMalformedServiceResponse,
                    std::string("scorer response: ") + e.what());
    } catch (const Error& e) {
      if (!e.retriable() || attempt >= max_attempts_) throw;
    }
    std::this_thread::sleep_for(delay);
    delay *= 2;
  }
}

}  // namespace nl2ltl
