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

// LTL formulas over named atomic propositions:
//
//   phi ::= p | !phi | phi & phi | phi | phi | G phi | F phi | phi U phi
//
// with two whitespace-tokenized transcriptions: fully parenthesized infix
// ("F ( blue_room & F ( yellow_room ) )") and Polish prefix ("F & R F X").

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nl2ltl {

struct AtomicProp {
  std::string name;
  std::string description;
};

/// Ordered set of atomic propositions with unique, whitespace-free names.
class ApSet {
 public:
  ApSet() = default;
  explicit ApSet(std::vector<AtomicProp> props);

  const std::vector<AtomicProp>& props() const noexcept { return props_; }
  std::size_t size() const noexcept { return props_.size(); }
  bool contains(std::string_view name) const;
  /// Throws UnknownAtom.
  const AtomicProp& at(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::vector<AtomicProp> props_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Reads a JSON Lines file of {"name": ..., "description": ...} records.
ApSet load_ap_set(const std::filesystem::path& path);

/// True for tokens reserved by the transcriptions: F G U & | ! ( ).
bool is_reserved_token(std::string_view token);

enum class Op { kAtom, kNot, kAnd, kOr, kGlobally, kFinally, kUntil };

bool is_unary(Op op);
bool is_binary(Op op);

/// Immutable, structurally shared formula tree. Equality is node-for-node;
/// no commutativity or associativity is applied.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula globally(Formula child);
  static Formula finally(Formula child);
  static Formula until(Formula lhs, Formula rhs);
  static Formula unary(Op op, Formula child);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  Op op() const noexcept;
  /// Atom name; empty for operators.
  const std::string& name() const noexcept;
  /// Child of a unary node or left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& child() const { return lhs(); }

  std::size_t depth() const;
  std::size_t size() const;
  /// Atom names in first-occurrence (pre-order) order, without repeats.
  std::vector<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

inline bool structural_equal(const Formula& a, const Formula& b) {
  return a == b;
}

enum class Notation { kInfix, kPrefix };

/// When `aps` is given, every non-operator token must name one of its props.
Formula parse_infix(std::string_view text, const ApSet* aps = nullptr);
Formula parse_prefix(std::string_view text, const ApSet* aps = nullptr);
Formula parse_formula(std::string_view text, Notation notation,
                      const ApSet* aps = nullptr);

std::string print_formula(const Formula& f, Notation notation);

/// Finite sequence of steps; each step is the set of propositions that hold.
class Trace {
 public:
  explicit Trace(std::vector<std::set<std::string>> steps,
                 std::optional<ApSet> aps = std::nullopt);

  std::size_t length() const noexcept { return steps_.size(); }
  const std::set<std::string>& step(std::size_t i) const { return steps_[i]; }
  const std::optional<ApSet>& aps() const noexcept { return aps_; }

 private:
  std::vector<std::set<std::string>> steps_;
  std::optional<ApSet> aps_;
};

/// Parses "{} {B} {A,B}": one brace group per step, comma-separated names.
Trace parse_trace(std::string_view text, std::optional<ApSet> aps = std::nullopt);

/// Finite-trace satisfaction at position 0. Throws UnknownAtom when the trace
/// carries an ApSet that does not contain one of the formula's atoms.
bool evaluate_trace(const Formula& f, const Trace& trace);

}  // namespace nl2ltl
