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


// Independent reference implementations and generators shared by the unit
// tests and the acceptance runner. Nothing here calls into the library's own
// evaluator, printers or enumerator.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nl2ltl/formula.hpp"

namespace nl2ltl::testing {

using Steps = std::vector<std::set<std::string>>;

// Textbook LTLf recursion, written directly from the definitions and without
// memoization.
inline bool naive_holds(const Formula& f, const Steps& t, std::size_t i) {
  switch (f.op()) {
    case Op::kAtom:
      return t[i].count(f.name()) > 0;
    case Op::kNot:
      return !naive_holds(f.child(), t, i);
    case Op::kAnd:
      return naive_holds(f.lhs(), t, i) && naive_holds(f.rhs(), t, i);
    case Op::kOr:
      return naive_holds(f.lhs(), t, i) || naive_holds(f.rhs(), t, i);
    case Op::kFinally:
      for (std::size_t k = i; k < t.size(); ++k)
        if (naive_holds(f.child(), t, k)) return true;
      return false;
    case Op::kGlobally:
      for (std::size_t k = i; k < t.size(); ++k)
        if (!naive_holds(f.child(), t, k)) return false;
      return true;
    case Op::kUntil:
      for (std::size_t k = i; k < t.size(); ++k) {
        if (naive_holds(f.rhs(), t, k)) return true;
        if (!naive_holds(f.lhs(), t, k)) return false;
      }
      return false;
  }
  return false;
}

// Every formula over `atoms` with depth <= max_depth (an atom has depth 1).
inline std::vector<Formula> all_formulas(const std::vector<std::string>& atoms,
                                         std::size_t max_depth) {
  std::vector<std::vector<Formula>> by_depth(max_depth + 1);
  for (const auto& a : atoms) by_depth[1].push_back(Formula::atom(a));
  std::vector<Formula> upto;  // depth < d
  for (std::size_t d = 2; d <= max_depth; ++d) {
    upto.insert(upto.end(), by_depth[d - 1].begin(), by_depth[d - 1].end());
    const auto& prev = by_depth[d - 1];
    for (Op op : {Op::kNot, Op::kGlobally, Op::kFinally})
      for (const auto& c : prev) by_depth[d].push_back(Formula::unary(op, c));
    for (Op op : {Op::kAnd, Op::kOr, Op::kUntil})
      for (const auto& l : upto)
        for (const auto& r : upto)
          if (l.depth() == d - 1 || r.depth() == d - 1)
            by_depth[d].push_back(Formula::binary(op, l, r));
  }
  std::vector<Formula> out;
  for (const auto& layer : by_depth) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

// All traces of length 1..max_len over `atoms`.
inline std::vector<Steps> all_traces(const std::vector<std::string>& atoms,
                                     std::size_t max_len) {
  std::vector<std::set<std::string>> letters;
  for (std::size_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    std::set<std::string> s;
    for (std::size_t b = 0; b < atoms.size(); ++b)
      if (mask & (1u << b)) s.insert(atoms[b]);
    letters.push_back(s);
  }
  std::vector<Steps> out;
  std::function<void(Steps&)> grow = [&](Steps& cur) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (const auto& l : letters) {
      cur.push_back(l);
      grow(cur);
      cur.pop_back();
    }
  };
  Steps cur;
  grow(cur);
  return out;
}

inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              std::size_t max_depth) {
  std::uniform_int_distribution<int> pick(0, 6);
  int kind = max_depth <= 1 ? 0 : pick(rng);
  auto sub = [&] { return random_formula(rng, atoms, max_depth - 1); };
  switch (kind) {
    case 0: return Formula::atom(atoms[rng() % atoms.size()]);
    case 1: return Formula::negation(sub());
    case 2: return Formula::globally(sub());
    case 3: return Formula::finally(sub());
    case 4: { auto l = sub(); return Formula::conjunction(l, sub()); }
    case 5: { auto l = sub(); return Formula::disjunction(l, sub()); }
    default: { auto l = sub(); return Formula::until(l, sub()); }
  }
}

}  // namespace nl2ltl::testing
