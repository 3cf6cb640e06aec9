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

#include <algorithm>
#include <set>

#include <json.hpp>

#include "nl2ltl/error.hpp"
#include "nl2ltl/formula.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

struct Formula::Node {
  Op op;
  std::string name;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

// ---------------------------------------------------------------------------
// ApSet

bool is_reserved_token(std::string_view token) {
  static const std::set<std::string_view> kReserved = {"F", "G", "U", "&",
                                                       "|", "!", "(", ")"};
  return kReserved.count(token) > 0;
}

ApSet::ApSet(std::vector<AtomicProp> props) : props_(std::move(props)) {
  for (std::size_t i = 0; i < props_.size(); ++i) {
    const auto& p = props_[i];
    if (p.name.empty() || contains_whitespace(p.name))
      throw Error(ErrorCode::kInvalidApSet,
                  "proposition name must be non-empty without whitespace: '" +
                      p.name + "'");
    if (is_reserved_token(p.name) ||
        p.name.find_first_of("{},") != std::string::npos)
      throw Error(ErrorCode::kInvalidApSet,
                  "proposition name collides with syntax: '" + p.name + "'");
    if (trim(p.description).empty())
      throw Error(ErrorCode::kInvalidApSet,
                  "proposition '" + p.name + "' has an empty description");
    if (!index_.emplace(p.name, i).second)
      throw Error(ErrorCode::kInvalidApSet,
                  "duplicate proposition '" + p.name + "'");
  }
}

bool ApSet::contains(std::string_view name) const {
  return index_.find(name) != index_.end();
}

const AtomicProp& ApSet::at(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw Error(ErrorCode::kUnknownAtom,
                "unknown proposition '" + std::string(name) + "'");
  return props_[it->second];
}

std::vector<std::string> ApSet::names() const {
  std::vector<std::string> out;
  out.reserve(props_.size());
  for (const auto& p : props_) out.push_back(p.name);
  return out;
}

ApSet load_ap_set(const std::filesystem::path& path) {
  std::vector<AtomicProp> props;
  for (const auto& [line_no, line] : read_lines(path)) {
    try {
      auto j = nlohmann::json::parse(line);
      props.push_back({j.at("name").get<std::string>(),
                       j.at("description").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseFailure,
                  path.string() + ": " + e.what(), line_no);
    }
  }
  return ApSet(std::move(props));
}

// ---------------------------------------------------------------------------
// Formula

bool is_unary(Op op) {
  return op == Op::kNot || op == Op::kGlobally || op == Op::kFinally;
}

bool is_binary(Op op) {
  return op == Op::kAnd || op == Op::kOr || op == Op::kUntil;
}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string name) {
  if (name.empty() || contains_whitespace(name) || is_reserved_token(name))
    throw Error(ErrorCode::kInvalidArgument,
                "invalid proposition name '" + name + "'");
  return Formula(std::make_shared<const Node>(
      Node{Op::kAtom, std::move(name), std::nullopt, std::nullopt}));
}

Formula Formula::unary(Op op, Formula child) {
  if (!is_unary(op))
    throw Error(ErrorCode::kInvalidArgument, "operator is not unary");
  return Formula(std::make_shared<const Node>(
      Node{op, {}, std::move(child), std::nullopt}));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  if (!is_binary(op))
    throw Error(ErrorCode::kInvalidArgument, "operator is not binary");
  return Formula(std::make_shared<const Node>(
      Node{op, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::negation(Formula child) {
  return unary(Op::kNot, std::move(child));
}
Formula Formula::globally(Formula child) {
  return unary(Op::kGlobally, std::move(child));
}
Formula Formula::finally(Formula child) {
  return unary(Op::kFinally, std::move(child));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Op::kAnd, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Op::kOr, std::move(lhs), std::move(rhs));
}
Formula Formula::until(Formula lhs, Formula rhs) {
  return binary(Op::kUntil, std::move(lhs), std::move(rhs));
}

Op Formula::op() const noexcept { return node_->op; }

const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::lhs() const {
  if (!node_->lhs)
    throw Error(ErrorCode::kInvalidArgument, "atom has no operands");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs)
    throw Error(ErrorCode::kInvalidArgument, "node has no right operand");
  return *node_->rhs;
}

std::size_t Formula::depth() const {
  if (op() == Op::kAtom) return 1;
  std::size_t d = lhs().depth();
  if (is_binary(op())) d = std::max(d, rhs().depth());
  return d + 1;
}

std::size_t Formula::size() const {
  if (op() == Op::kAtom) return 1;
  std::size_t n = 1 + lhs().size();
  if (is_binary(op())) n += rhs().size();
  return n;
}

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.op() == Op::kAtom) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end())
      out.push_back(f.name());
    return;
  }
  collect_atoms(f.lhs(), out);
  if (is_binary(f.op())) collect_atoms(f.rhs(), out);
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  collect_atoms(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.op() == Op::kAtom) return a.name() == b.name();
  if (a.lhs() != b.lhs()) return false;
  return !is_binary(a.op()) || a.rhs() == b.rhs();
}

}  // namespace nl2ltl
