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

#include "nl2ltl/paraphrase.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

std::vector<std::string> paraphrase(const std::string& sentence, std::size_t n,
                                    const ParaphraseService& svc) {
  if (n == 0)
    throw Error(ErrorCode::kInvalidArgument, "paraphrase count must be >= 1");
  const auto source = to_lower(normalize_whitespace(sentence));
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto& raw : svc.generate(sentence, n)) {
    auto text = normalize_whitespace(raw);
    if (text.empty() || to_lower(text) == source) continue;
    if (!seen.insert(text).second) continue;
    out.push_back(std::move(text));
    if (out.size() == n) break;
  }
  return out;
}

std::string build_paraphrase_prompt(const std::string& sentence, std::size_t n) {
  return "Rephrase the source sentence in " + std::to_string(n) +
         " different ways. Make the outputs as diverse as possible.\n\n"
         "Source: " +
         sentence + "\n\nOutputs:";
}

std::vector<std::string> parse_numbered_list(const std::string& completion) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= completion.size()) {
    auto end = completion.find('\n', start);
    if (end == std::string::npos) end = completion.size();
    auto line = trim(std::string_view(completion).substr(start, end - start));
    start = end + 1;
    std::size_t digits = 0;
    while (digits < line.size() && line[digits] >= '0' && line[digits] <= '9')
      ++digits;
    if (digits == 0 || digits >= line.size() || line[digits] != '.') continue;
    auto body = trim(std::string_view(line).substr(digits + 1));
    if (!body.empty()) out.push_back(std::move(body));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Offline fallback

namespace {

std::vector<std::string> tokenize_sentence(const std::string& sentence) {
  std::string spaced;
  for (char c : to_lower(sentence)) {
    if (c == ',' || c == '.' || c == ';' || c == '!' || c == '?') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  auto words = split_whitespace(spaced);
  while (!words.empty() && (words.back() == "." || words.back() == "!" ||
                            words.back() == "?"))
    words.pop_back();
  return words;
}

std::vector<std::size_t> occurrences(const std::vector<std::string>& words,
                                     const std::vector<std::string>& phrase) {
  std::vector<std::size_t> out;
  if (phrase.empty() || phrase.size() > words.size()) return out;
  for (std::size_t i = 0; i + phrase.size() <= words.size(); ++i) {
    if (std::equal(phrase.begin(), phrase.end(), words.begin() + i)) {
      out.push_back(i);
      i += phrase.size() - 1;
    }
  }
  return out;
}

std::vector<std::string> splice(const std::vector<std::string>& words,
                                std::size_t at, std::size_t len,
                                const std::vector<std::string>& with) {
  std::vector<std::string> out(words.begin(), words.begin() + at);
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), words.begin() + at + len, words.end());
  return out;
}

constexpr std::size_t kMaxCandidates = 256;

// Default table; a JSON file with the same shape can replace it.
constexpr const char* kDefaultTable = R"json({
  "substitutions": [
    {"phrase": "go to", "alternatives": ["move to", "head to", "walk to", "proceed to", "navigate to", "make your way to", "travel to", "get to", "visit", "enter"]},
    {"phrase": "go through", "alternatives": ["pass through", "travel through", "move through"]},
    {"phrase": "do not go to", "alternatives": ["avoid", "stay away from", "stay out of", "never enter"]},
    {"phrase": "do not", "alternatives": ["don't", "never"]},
    {"phrase": "never go to", "alternatives": ["avoid", "stay away from", "do not ever enter"]},
    {"phrase": "never", "alternatives": ["at no point", "do not ever"]},
    {"phrase": "eventually", "alternatives": ["finally", "at some point", "sooner or later", "in the end"]},
    {"phrase": "finally", "alternatives": ["eventually", "ultimately", "in the end", "then"]},
    {"phrase": "always", "alternatives": ["at all times", "constantly", "continuously"]},
    {"phrase": "until you", "alternatives": ["until you have", "till you", "before you"]},
    {"phrase": "and then", "alternatives": ["then", "and after that", "and afterwards", "and next"]},
    {"phrase": "first", "alternatives": ["initially", "to begin with", "beforehand"]},
    {"phrase": "bring", "alternatives": ["take", "carry", "move"]},
    {"phrase": "with chair", "alternatives": ["with the chair", "carrying the chair"]},
    {"phrase": "chair", "alternatives": ["seat"]},
    {"phrase": "pick up", "alternatives": ["grab", "collect", "take"]},
    {"phrase": "scan", "alternatives": ["search", "look over", "inspect"]},
    {"phrase": "cubes", "alternatives": ["blocks"]},
    {"phrase": "basket", "alternatives": ["bin", "box"]},
    {"phrase": "floor", "alternatives": ["level", "story"]},
    {"phrase": "landmark", "alternatives": ["marker"]},
    {"phrase": "room", "alternatives": ["area"]}
  ],
  "reorders": [
    {"connective": "to finally", "pattern": "{2} , but make sure to {1} first"},
    {"connective": "and then", "pattern": "{2} , but only after you {1}"},
    {"connective": "and never", "pattern": "never {2} , and {1}"},
    {"connective": "until you", "pattern": "wait until you {2} , and {1} until then"}
  ]
})json";

}  // namespace

const nlohmann::json& FallbackParaphraser::default_table() {
  static const nlohmann::json table = nlohmann::json::parse(kDefaultTable);
  return table;
}

FallbackParaphraser::FallbackParaphraser(std::uint64_t seed, nlohmann::json table)
    : seed_(seed), table_hash_(fnv1a64(table.dump())) {
  try {
    for (const auto& s : table.at("substitutions")) {
      Substitution sub;
      sub.phrase = split_whitespace(to_lower(s.at("phrase").get<std::string>()));
      for (const auto& alt : s.at("alternatives"))
        sub.alternatives.push_back(split_whitespace(to_lower(alt.get<std::string>())));
      substitutions_.push_back(std::move(sub));
    }
    if (table.contains("reorders")) {
      for (const auto& r : table.at("reorders"))
        reorders_.push_back(
            {split_whitespace(to_lower(r.at("connective").get<std::string>())),
             r.at("pattern").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError,
                std::string("bad paraphrase table: ") + e.what());
  }
}

FallbackParaphraser FallbackParaphraser::from_file(std::uint64_t seed,
                                                   const std::filesystem::path& path) {
  return FallbackParaphraser(seed, nlohmann::json::parse(read_file(path)));
}

std::vector<std::string> FallbackParaphraser::candidates(
    const std::string& sentence) const {
  const auto base = tokenize_sentence(sentence);
  const auto base_text = join(base, " ");
  std::vector<std::string> out;
  std::set<std::string> seen{base_text};
  auto add = [&](const std::vector<std::string>& words) {
    if (out.size() >= kMaxCandidates) return;
    auto text = join(words, " ");
    if (seen.insert(text).second) out.push_back(std::move(text));
  };

  std::vector<std::vector<std::string>> reordered;
  for (const auto& r : reorders_) {
    auto at = occurrences(base, r.connective);
    if (at.empty()) continue;
    std::vector<std::string> before(base.begin(), base.begin() + at.front());
    std::vector<std::string> after(base.begin() + at.front() + r.connective.size(),
                                   base.end());
    if (before.empty() || after.empty()) continue;
    std::string text = r.pattern;
    for (auto [key, part] : {std::pair{"{1}", &before}, std::pair{"{2}", &after}}) {
      auto pos = text.find(key);
      if (pos != std::string::npos) text.replace(pos, 3, join(*part, " "));
    }
    reordered.push_back(split_whitespace(text));
  }

  auto singles = [&](const std::vector<std::string>& words) {
    std::vector<std::vector<std::string>> variants;
    for (const auto& sub : substitutions_)
      for (auto at : occurrences(words, sub.phrase))
        for (const auto& alt : sub.alternatives)
          variants.push_back(splice(words, at, sub.phrase.size(), alt));
    return variants;
  };

  for (const auto& r : reordered) add(r);
  auto first_order = singles(base);
  for (const auto& v : first_order) add(v);
  for (const auto& r : reordered)
    for (const auto& v : singles(r)) add(v);
  for (const auto& v : first_order)
    for (const auto& w : singles(v)) add(w);
  return out;
}

std::vector<std::string> FallbackParaphraser::generate(const std::string& sentence,
                                                       std::size_t n) const {
  auto pool = candidates(sentence);
  // std::shuffle is implementation-defined; draw directly from the engine.
  std::mt19937_64 rng(seed_ ^ fnv1a64(normalize_whitespace(sentence), table_hash_));
  for (std::size_t i = pool.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(rng() % i);
    std::swap(pool[i - 1], pool[j]);
  }
  if (pool.size() > n) pool.resize(n);
  return pool;
}

std::string FallbackParaphraser::describe() const {
  return "fallback:seed=" + std::to_string(seed_) + ":table=" + hex64(table_hash_);
}

}  // namespace nl2ltl
