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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nl2ltl {

/// Token trie over a finite set of valid output strings.
class OutputTrie {
 public:
  struct Node {
    std::map<std::string, std::size_t> children;  // token -> node index
    bool terminal = false;
  };

  static constexpr std::size_t kRoot = 0;

  OutputTrie();

  const Node& node(std::size_t index) const { return nodes_.at(index); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::optional<std::size_t> step(std::size_t from, const std::string& token) const;

  /// Inserts one whitespace-tokenized string. Throws InvalidArgument when it
  /// has no tokens.
  void insert(std::string_view text);

  bool contains(std::string_view text) const;
  /// Number of terminal nodes, i.e. the size of the accepted language.
  std::size_t accepted_count() const;
  /// Accepted strings in lexicographic token order.
  std::vector<std::string> enumerate() const;
  /// Every edge label.
  std::vector<std::string> vocabulary() const;

 private:
  std::vector<Node> nodes_;
};

/// Throws EmptyOutputSet for an empty list.
OutputTrie build_trie(const std::vector<std::string>& valid_outputs);

}  // namespace nl2ltl
