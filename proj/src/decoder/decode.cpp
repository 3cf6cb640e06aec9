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

#include "nl2ltl/decode.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

constexpr double kScoreFloor = -1e9;
constexpr double kScoreCeil = 1e9;

struct Hyp {
  std::vector<std::string> tokens;
  std::size_t state = 0;  // trie node, or unused
  double score = 0.0;
  bool done = false;
};

// Candidates at a hypothesis: kEndToken first (when allowed), then tokens in
// lexicographic order. Picking the first maximum implements the tie rule.
struct TrieSpace {
  const OutputTrie& trie;
  std::vector<std::string> candidates(const Hyp& h) const {
    std::vector<std::string> out;
    const auto& node = trie.node(h.state);
    if (node.terminal) out.push_back(kEndToken);
    for (const auto& [tok, child] : node.children) out.push_back(tok);
    return out;
  }
  Hyp advance(const Hyp& h, const std::string& tok, double s) const {
    Hyp next = h;
    next.score += s;
    if (tok == kEndToken) {
      next.done = true;
    } else {
      next.tokens.push_back(tok);
      next.state = *trie.step(h.state, tok);
    }
    return next;
  }
};

struct VocabSpace {
  std::vector<std::string> vocab;
  std::size_t max_len;
  std::vector<std::string> candidates(const Hyp&) const { return vocab; }
  Hyp advance(const Hyp& h, const std::string& tok, double s) const {
    Hyp next = h;
    next.score += s;
    if (tok == kEndToken) {
      next.done = true;
    } else {
      next.tokens.push_back(tok);
      next.done = next.tokens.size() >= max_len;
    }
    return next;
  }
};

// Orders hypotheses by score, then by token sequence with the end token
// sorting first.
bool better(const Hyp& a, const Hyp& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.done != b.done) return a.done;
  return a.tokens < b.tokens;
}

template <typename Space>
Hyp greedy(const std::vector<std::string>& input, const Scorer& scorer,
           const Space& space) {
  Hyp h;
  while (!h.done) {
    auto cands = space.candidates(h);
    auto scores = sanitize_scores(scorer.score_next(input, h.tokens, cands), cands.size());
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
      if (scores[i] > scores[best]) best = i;
    h = space.advance(h, cands[best], scores[best]);
  }
  return h;
}

template <typename Space>
Hyp beam_search(const std::vector<std::string>& input, const Scorer& scorer,
                const Space& space, std::size_t width) {
  std::vector<Hyp> beams{Hyp{}};
  while (std::any_of(beams.begin(), beams.end(), [](const Hyp& h) { return !h.done; })) {
    std::vector<Hyp> next;
    for (const auto& h : beams) {
      if (h.done) {
        next.push_back(h);
        continue;
      }
      auto cands = space.candidates(h);
      auto scores =
          sanitize_scores(scorer.score_next(input, h.tokens, cands), cands.size());
      for (std::size_t i = 0; i < cands.size(); ++i)
        next.push_back(space.advance(h, cands[i], scores[i]));
    }
    std::stable_sort(next.begin(), next.end(), better);
    if (next.size() > width) next.resize(width);
    beams = std::move(next);
  }
  return beams.front();
}

template <typename Space>
DecodeResult search(std::string_view input, const Scorer& scorer, const Space& space,
                    std::size_t beam) {
  if (beam == 0) throw Error(ErrorCode::kInvalidArgument, "beam width must be >= 1");
  auto tokens = tokenize_input(input);
  Hyp best = greedy(tokens, scorer, space);
  if (beam > 1) {
    Hyp wide = beam_search(tokens, scorer, space, beam);
    if (wide.score > best.score) best = std::move(wide);
  }
  return {join(best.tokens, " "), best.score};
}

}  // namespace

std::vector<std::string> tokenize_input(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '_' || c == '\'' || u >= 0x80)
      cleaned += static_cast<char>(std::tolower(u));
    else
      cleaned += ' ';
  }
  return split_whitespace(cleaned);
}

std::vector<double> sanitize_scores(std::vector<double> scores, std::size_t expected) {
  if (scores.size() != expected) return std::vector<double>(expected, kScoreFloor);
  for (auto& s : scores) {
    if (std::isnan(s))
      s = kScoreFloor;
    else
      s = std::clamp(s, kScoreFloor, kScoreCeil);
  }
  return scores;
}

DecodeResult constrained_decode(std::string_view input, const Scorer& scorer,
                                const OutputTrie& trie, std::size_t beam) {
  return search(input, scorer, TrieSpace{trie}, beam);
}

DecodeResult unconstrained_decode(std::string_view input, const Scorer& scorer,
                                  const std::vector<std::string>& vocab,
                                  std::size_t max_len, std::size_t beam) {
  if (max_len == 0) throw Error(ErrorCode::kInvalidArgument, "max_len must be >= 1");
  std::set<std::string> sorted(vocab.begin(), vocab.end());
  sorted.erase(kEndToken);
  VocabSpace space{{kEndToken}, max_len};
  space.vocab.insert(space.vocab.end(), sorted.begin(), sorted.end());
  return search(input, scorer, space, beam);
}

}  // namespace nl2ltl
