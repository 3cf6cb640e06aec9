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

#include "nl2ltl/trie.hpp"

#include <set>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

OutputTrie::OutputTrie() : nodes_(1) {}

std::optional<std::size_t> OutputTrie::step(std::size_t from,
                                            const std::string& token) const {
  const auto& children = nodes_.at(from).children;
  auto it = children.find(token);
  if (it == children.end()) return std::nullopt;
  return it->second;
}

void OutputTrie::insert(std::string_view text) {
  auto tokens = split_whitespace(text);
  if (tokens.empty())
    throw Error(ErrorCode::kInvalidArgument, "valid output must have tokens");
  std::size_t at = kRoot;
  for (auto& tok : tokens) {
    auto it = nodes_[at].children.find(tok);
    if (it != nodes_[at].children.end()) {
      at = it->second;
      continue;
    }
    nodes_.emplace_back();
    nodes_[at].children.emplace(std::move(tok), nodes_.size() - 1);
    at = nodes_.size() - 1;
  }
  nodes_[at].terminal = true;
}

bool OutputTrie::contains(std::string_view text) const {
  std::size_t at = kRoot;
  auto tokens = split_whitespace(text);
  if (tokens.empty()) return false;
  for (const auto& tok : tokens) {
    auto next = step(at, tok);
    if (!next) return false;
    at = *next;
  }
  return nodes_[at].terminal;
}

std::size_t OutputTrie::accepted_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.terminal ? 1 : 0;
  return n;
}

std::vector<std::string> OutputTrie::enumerate() const {
  std::vector<std::string> out;
  std::vector<std::string> path;
  auto walk = [&](auto&& self, std::size_t at) -> void {
    if (nodes_[at].terminal) out.push_back(join(path, " "));
    for (const auto& [tok, child] : nodes_[at].children) {
      path.push_back(tok);
      self(self, child);
      path.pop_back();
    }
  };
  walk(walk, kRoot);
  return out;
}

std::vector<std::string> OutputTrie::vocabulary() const {
  std::set<std::string> vocab;
  for (const auto& node : nodes_)
    for (const auto& [tok, child] : node.children) vocab.insert(tok);
  return {vocab.begin(), vocab.end()};
}

OutputTrie build_trie(const std::vector<std::string>& valid_outputs) {
  if (valid_outputs.empty())
    throw Error(ErrorCode::kEmptyOutputSet, "no valid outputs to build a trie from");
  OutputTrie trie;
  for (const auto& s : valid_outputs) trie.insert(s);
  return trie;
}

}  // namespace nl2ltl
