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

#include <cctype>

#include "nl2ltl/error.hpp"
#include "nl2ltl/formula.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

Trace::Trace(std::vector<std::set<std::string>> steps, std::optional<ApSet> aps)
    : steps_(std::move(steps)), aps_(std::move(aps)) {
  if (steps_.empty())
    throw Error(ErrorCode::kInvalidArgument, "trace must have at least one step");
  if (aps_) {
    for (const auto& step : steps_)
      for (const auto& name : step) aps_->at(name);
  }
}

Trace parse_trace(std::string_view text, std::optional<ApSet> aps) {
  std::vector<std::set<std::string>> steps;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == text.size()) break;
    if (text[i] != '{')
      throw Error(ErrorCode::kParseFailure,
                  "expected '{' in trace at offset " + std::to_string(i));
    auto close = text.find('}', i);
    if (close == std::string_view::npos)
      throw Error(ErrorCode::kParseFailure, "unterminated '{' in trace");
    std::set<std::string> step;
    std::string body(text.substr(i + 1, close - i - 1));
    for (char& c : body)
      if (c == ',') c = ' ';
    for (auto& name : split_whitespace(body)) step.insert(std::move(name));
    steps.push_back(std::move(step));
    i = close + 1;
  }
  return Trace(std::move(steps), std::move(aps));
}

namespace {

// Satisfaction of f at every position, computed bottom-up over suffixes.
std::vector<bool> satisfaction(const Formula& f, const Trace& t) {
  const std::size_t n = t.length();
  std::vector<bool> out(n, false);
  switch (f.op()) {
    case Op::kAtom:
      for (std::size_t i = 0; i < n; ++i) out[i] = t.step(i).count(f.name()) > 0;
      break;
    case Op::kNot: {
      auto c = satisfaction(f.child(), t);
      for (std::size_t i = 0; i < n; ++i) out[i] = !c[i];
      break;
    }
    case Op::kAnd:
    case Op::kOr: {
      auto a = satisfaction(f.lhs(), t);
      auto b = satisfaction(f.rhs(), t);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = f.op() == Op::kAnd ? (a[i] && b[i]) : (a[i] || b[i]);
      break;
    }
    case Op::kFinally: {
      auto c = satisfaction(f.child(), t);
      bool any = false;
      for (std::size_t i = n; i-- > 0;) out[i] = any = any || c[i];
      break;
    }
    case Op::kGlobally: {
      auto c = satisfaction(f.child(), t);
      bool all = true;
      for (std::size_t i = n; i-- > 0;) out[i] = all = all && c[i];
      break;
    }
    case Op::kUntil: {
      auto a = satisfaction(f.lhs(), t);
      auto b = satisfaction(f.rhs(), t);
      bool holds = false;
      for (std::size_t i = n; i-- > 0;) out[i] = holds = b[i] || (a[i] && holds);
      break;
    }
  }
  return out;
}

}  // namespace

bool evaluate_trace(const Formula& f, const Trace& trace) {
  if (trace.aps()) {
    for (const auto& name : f.atoms())
      if (!trace.aps()->contains(name))
        throw Error(ErrorCode::kUnknownAtom,
                    "formula atom '" + name + "' is not in the trace's APs");
  }
  return satisfaction(f, trace)[0];
}

}  // namespace nl2ltl
