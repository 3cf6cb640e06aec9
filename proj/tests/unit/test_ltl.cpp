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


#include <doctest.h>

#include <random>

#include "nl2ltl/error.hpp"
#include "nl2ltl/formula.hpp"
#include "support/oracles.hpp"

using namespace nl2ltl;
using nl2ltl::testing::naive_holds;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an nl2ltl::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("prefix and infix parse to the same tree") {
  auto a = parse_prefix("F & R F X");
  auto b = parse_infix("F ( R & F ( X ) )");
  CHECK(a == b);
  CHECK(print_formula(a, Notation::kInfix) == "F ( R & F ( X ) )");
  CHECK(print_formula(b, Notation::kPrefix) == "F & R F X");
}

TEST_CASE("infix printer output for drone-style formulas") {
  CHECK(print_formula(parse_prefix("U ! b l"), Notation::kInfix) == "! b U l");
  CHECK(print_formula(parse_prefix("& F a G ! b"), Notation::kInfix) ==
        "F ( a ) & G ( ! b )");
  CHECK(print_formula(parse_prefix("| a & b c"), Notation::kInfix) == "a | ( b & c )");
  CHECK(parse_infix("( ! blue_room ) U landmark_3") == parse_prefix("U ! blue_room landmark_3"));
}

TEST_CASE("parser errors carry their codes") {
  CHECK(code_of([] { parse_prefix("F"); }) == ErrorCode::kMalformedExpression);
  CHECK(code_of([] { parse_prefix("F a b"); }) == ErrorCode::kMalformedExpression);
  CHECK(code_of([] { parse_infix("( a & b"); }) == ErrorCode::kMalformedExpression);
  ApSet aps(std::vector<AtomicProp>{{"a", "go to a"}});
  CHECK(code_of([&] { parse_prefix("F zz", &aps); }) == ErrorCode::kUnknownToken);
  CHECK(code_of([&] { parse_trace("{zz}", aps); }) == ErrorCode::kUnknownAtom);
}

TEST_CASE("proposition sets reject bad names") {
  CHECK(code_of([] { ApSet(std::vector<AtomicProp>{{"F", "x"}}); }) == ErrorCode::kInvalidApSet);
  CHECK(code_of([] { ApSet({{"a", "x"}, {"a", "y"}}); }) == ErrorCode::kInvalidApSet);
  CHECK(code_of([] { ApSet(std::vector<AtomicProp>{{"a", "  "}}); }) == ErrorCode::kInvalidApSet);
  ApSet ok({{"a", "go to a"}, {"b", "go to b"}});
  CHECK(ok.contains("b"));
  CHECK(code_of([&] { ok.at("c"); }) == ErrorCode::kUnknownAtom);
}

TEST_CASE("structure queries") {
  auto f = parse_prefix("U ! b | a b");
  CHECK(f.depth() == 3);
  CHECK(f.size() == 6);
  CHECK(f.atoms() == std::vector<std::string>{"b", "a"});
}

TEST_CASE("trace evaluation on hand-picked cases") {
  auto f = parse_prefix("F & R F X");
  CHECK(evaluate_trace(f, parse_trace("{} {R} {X}")));
  CHECK_FALSE(evaluate_trace(f, parse_trace("{X} {R}")));
  CHECK(evaluate_trace(parse_prefix("U ! B X"), parse_trace("{} {} {X,B}")));
  CHECK_FALSE(evaluate_trace(parse_prefix("U ! B X"), parse_trace("{} {B} {X}")));
  CHECK_FALSE(evaluate_trace(parse_prefix("U a b"), parse_trace("{a} {a}")));
  CHECK(code_of([] { Trace({}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("trace evaluation matches the naive oracle exhaustively") {
  const std::vector<std::string> atoms{"a", "b"};
  const auto formulas = nl2ltl::testing::all_formulas(atoms, 3);
  const auto traces = nl2ltl::testing::all_traces(atoms, 4);
  CHECK(formulas.size() == 1262);
  CHECK(traces.size() == 340);
  std::size_t mismatches = 0;
  for (const auto& steps : traces) {
    Trace t(steps);
    for (const auto& f : formulas)
      if (evaluate_trace(f, t) != naive_holds(f, steps, 0)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("parse and print round-trip on random formulas") {
  std::mt19937_64 rng(20260101);
  const std::vector<std::string> atoms{"a", "b", "blue_room", "landmark_3", "x1"};
  std::size_t failures = 0;
  for (int i = 0; i < 10000; ++i) {
    auto f = nl2ltl::testing::random_formula(rng, atoms, 1 + i % 6);
    for (auto n : {Notation::kPrefix, Notation::kInfix}) {
      auto text = print_formula(f, n);
      if (parse_formula(text, n) != f || print_formula(parse_formula(text, n), n) != text)
        ++failures;
    }
  }
  CHECK(failures == 0);
}
