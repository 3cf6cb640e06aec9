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

#include <httplib.h>
#include <json.hpp>

#include "nl2ltl/error.hpp"
#include "nl2ltl/http.hpp"
#include "nl2ltl/paraphrase.hpp"

namespace nl2ltl {

HttpEndpoint split_url(const std::string& url) {
  auto scheme = url.find("://");
  if (scheme == std::string::npos)
    throw Error(ErrorCode::kConfigError, "endpoint URL needs a scheme: " + url);
  auto path = url.find('/', scheme + 3);
  if (path == std::string::npos) return {url, "/"};
  return {url.substr(0, path), url.substr(path)};
}

std::string post_json(const std::string& url, const std::string& token,
                      const std::string& body, std::chrono::seconds timeout) {
  auto endpoint = split_url(url);
  httplib::Client client(endpoint.origin);
  if (!client.is_valid())
    throw Error(ErrorCode::kConfigError, "unsupported endpoint: " + url);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers;
  if (!token.empty()) headers.emplace("Authorization", "Bearer " + token);
  auto res = client.Post(endpoint.path, headers, body, "application/json");
  if (!res)
    throw Error(ErrorCode::kServiceUnavailable,
                url + ": " + httplib::to_string(res.error()));
  if (res->status >= 500 || res->status == 429)
    throw Error(ErrorCode::kServiceUnavailable,
                url + ": HTTP " + std::to_string(res->status));
  if (res->status != 200)
    throw Error(ErrorCode::kMalformedServiceResponse,
                url + ": HTTP " + std::to_string(res->status));
  return res->body;
}

HttpParaphraseService::HttpParaphraseService(Options options)
    : options_(std::move(options)) {
  if (options_.url.empty())
    throw Error(ErrorCode::kConfigError, "paraphrase endpoint URL is empty");
  if (options_.max_attempts < 1)
    throw Error(ErrorCode::kConfigError, "max_attempts must be >= 1");
  split_url(options_.url);
}

HttpParaphraseService HttpParaphraseService::from_env() {
  auto get = [](const char* name) {
    const char* v = std::getenv(name);
    return std::string(v ? v : "");
  };
  Options o;
  o.url = get("NL2LTL_PARAPHRASE_URL");
  o.model = get("NL2LTL_PARAPHRASE_MODEL");
  o.token = get("NL2LTL_PARAPHRASE_TOKEN");
  if (o.url.empty())
    throw Error(ErrorCode::kConfigError,
                "NL2LTL_PARAPHRASE_URL is not set; use the fallback paraphraser");
  return HttpParaphraseService(std::move(o));
}

std::vector<std::string> HttpParaphraseService::attempt(const std::string& sentence,
                                                        std::size_t n) const {
  nlohmann::json req;
  if (!options_.model.empty()) req["model"] = options_.model;
  req["prompt"] = build_paraphrase_prompt(sentence, n);
  req["temperature"] = options_.temperature;
  req["max_tokens"] = options_.max_tokens;
  auto body = post_json(options_.url, options_.token, req.dump(), options_.timeout);

  std::string text;
  try {
    auto j = nlohmann::json::parse(body);
    const auto& choice = j.at("choices").at(0);
    if (choice.contains("text"))
      text = choice.at("text").get<std::string>();
    else
      text = choice.at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedServiceResponse,
                std::string("paraphrase response: ") + e.what());
  }
  auto lines = parse_numbered_list(text);
  if (lines.empty())
    throw Error(ErrorCode::kMalformedServiceResponse,
                "paraphrase response has no numbered lines");
  return lines;
}

std::vector<std::string> HttpParaphraseService::generate(const std::string& sentence,
                                                         std::size_t n) const {
  auto delay = options_.base_backoff;
  for (int i = 1;; ++i) {
    try {
      return attempt(sentence, n);
    } catch (const Error& e) {
      if (!e.retriable() || i >= options_.max_attempts) throw;
    }
    std::this_thread::sleep_for(delay);
    delay *= 2;
  }
}

std::string HttpParaphraseService::describe() const {
  return "service:" + options_.url + ":" + options_.model;
}

}  // namespace nl2ltl
