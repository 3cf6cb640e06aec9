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

#include "nl2ltl/error.hpp"
#include "nl2ltl/formula.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

std::optional<Op> unary_op(std::string_view t) {
  if (t == "!") return Op::kNot;
  if (t == "F") return Op::kFinally;
  if (t == "G") return Op::kGlobally;
  return std::nullopt;
}

std::optional<Op> binary_op(std::string_view t) {
  if (t == "&") return Op::kAnd;
  if (t == "|") return Op::kOr;
  if (t == "U") return Op::kUntil;
  return std::nullopt;
}

std::string_view op_token(Op op) {
  switch (op) {
    case Op::kNot: return "!";
    case Op::kAnd: return "&";
    case Op::kOr: return "|";
    case Op::kGlobally: return "G";
    case Op::kFinally: return "F";
    case Op::kUntil: return "U";
    case Op::kAtom: break;
  }
  return "";
}

// Positions reported to callers are 1-based token indices.
class TokenStream {
 public:
  TokenStream(std::string_view text, const ApSet* aps)
      : tokens_(split_whitespace(text)), aps_(aps) {}

  bool done() const { return pos_ >= tokens_.size(); }
  std::size_t position() const { return pos_ + 1; }
  const std::string& peek() const { return tokens_[pos_]; }
  const std::string& next() { return tokens_[pos_++]; }
  std::size_t size() const { return tokens_.size(); }

  Formula make_atom(const std::string& token) const {
    if (aps_ && !aps_->contains(token))
      throw Error(ErrorCode::kUnknownToken,
                  "'" + token + "' is not an operator or known proposition",
                  pos_);
    return Formula::atom(token);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kMalformedExpression, why, position());
  }

 private:
  std::vector<std::string> tokens_;
  const ApSet* aps_;
  std::size_t pos_ = 0;
};

class InfixParser {
 public:
  InfixParser(std::string_view text, const ApSet* aps) : ts_(text, aps) {}

  Formula parse() {
    if (ts_.done()) ts_.fail("empty expression");
    Formula f = expression();
    if (!ts_.done()) {
      if (binary_op(ts_.peek()))
        ts_.fail("ambiguous chain of binary operators; parenthesize");
      ts_.fail("unexpected '" + ts_.peek() + "'");
    }
    return f;
  }

 private:
  // expression := operand [binop operand]
  Formula expression() {
    Formula lhs = operand();
    if (ts_.done()) return lhs;
    auto op = binary_op(ts_.peek());
    if (!op) return lhs;
    ts_.next();
    Formula rhs = operand();
    if (!ts_.done() && binary_op(ts_.peek()))
      ts_.fail("ambiguous chain of binary operators; parenthesize");
    return Formula::binary(*op, std::move(lhs), std::move(rhs));
  }

  // operand := atom | unop operand | '(' expression ')'
  Formula operand() {
    if (ts_.done()) ts_.fail("missing operand");
    const std::string& t = ts_.peek();
    if (t == "(") {
      ts_.next();
      if (ts_.done()) ts_.fail("missing operand");
      if (ts_.peek() == ")") ts_.fail("empty parentheses");
      Formula inner = expression();
      if (ts_.done()) ts_.fail("missing ')'");
      if (ts_.next() != ")") {
        // next() advanced past the offending token.
        throw Error(ErrorCode::kMalformedExpression, "expected ')'",
                    ts_.position() - 1);
      }
      return inner;
    }
    if (auto op = unary_op(t)) {
      ts_.next();
      return Formula::unary(*op, operand());
    }
    if (t == ")" || binary_op(t)) ts_.fail("missing operand before '" + t + "'");
    ts_.next();
    return ts_.make_atom(t);
  }

  TokenStream ts_;
};

class PrefixParser {
 public:
  PrefixParser(std::string_view text, const ApSet* aps) : ts_(text, aps) {}

  Formula parse() {
    if (ts_.done()) ts_.fail("empty expression");
    Formula f = node();
    if (!ts_.done()) ts_.fail("unconsumed token '" + ts_.peek() + "'");
    return f;
  }

 private:
  Formula node() {
    if (ts_.done()) ts_.fail("missing operand");
    const std::string& t = ts_.peek();
    if (t == "(" || t == ")") ts_.fail("parentheses are not prefix syntax");
    ts_.next();
    if (auto op = unary_op(t)) return Formula::unary(*op, node());
    if (auto op = binary_op(t)) {
      Formula lhs = node();
      Formula rhs = node();
      return Formula::binary(*op, std::move(lhs), std::move(rhs));
    }
    return ts_.make_atom(t);
  }

  TokenStream ts_;
};

void print_prefix(const Formula& f, std::string& out) {
  if (!out.empty()) out += ' ';
  if (f.op() == Op::kAtom) {
    out += f.name();
    return;
  }
  out += op_token(f.op());
  print_prefix(f.lhs(), out);
  if (is_binary(f.op())) print_prefix(f.rhs(), out);
}

std::string print_infix(const Formula& f);

// Atoms and unary forms are self-delimiting; binary operands get parens.
std::string print_operand(const Formula& f) {
  if (is_binary(f.op())) return "( " + print_infix(f) + " )";
  return print_infix(f);
}

std::string print_infix(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom:
      return f.name();
    case Op::kNot:
      return "! " + print_operand(f.child());
    case Op::kFinally:
    case Op::kGlobally:
      return std::string(op_token(f.op())) + " ( " + print_infix(f.child()) +
             " )";
    case Op::kAnd:
    case Op::kOr:
    case Op::kUntil:
      return print_operand(f.lhs()) + " " + std::string(op_token(f.op())) +
             " " + print_operand(f.rhs());
  }
  return {};
}

}  // namespace

Formula parse_infix(std::string_view text, const ApSet* aps) {
  return InfixParser(text, aps).parse();
}

Formula parse_prefix(std::string_view text, const ApSet* aps) {
  return PrefixParser(text, aps).parse();
}

Formula parse_formula(std::string_view text, Notation notation,
                      const ApSet* aps) {
  return notation == Notation::kInfix ? parse_infix(text, aps)
                                      : parse_prefix(text, aps);
}

std::string print_formula(const Formula& f, Notation notation) {
  if (notation == Notation::kInfix) return print_infix(f);
  std::string out;
  print_prefix(f, out);
  return out;
}

}  // namespace nl2ltl
