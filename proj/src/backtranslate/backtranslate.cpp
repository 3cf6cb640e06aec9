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

#include "nl2ltl/backtranslate.hpp"

#include <cctype>
#include <set>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

bool is_sequence(const Formula& f) {
  return f.op() == Op::kAnd && f.rhs().op() == Op::kFinally;
}

std::string render(const Formula& f, const Lexicon& lex) {
  switch (f.op()) {
    case Op::kAtom:
      return lex.ap_phrase(f.name());
    case Op::kNot:
      return "do not " + render(f.child(), lex);
    case Op::kGlobally:
      if (f.child().op() == Op::kNot)
        return "never " + render(f.child().child(), lex);
      return "always " + render(f.child(), lex);
    case Op::kFinally:
      if (is_sequence(f.child())) return render(f.child(), lex);
      return "eventually " + render(f.child(), lex);
    case Op::kAnd:
      if (is_sequence(f))
        return render(f.lhs(), lex) + " to finally " +
               render(f.rhs().child(), lex);
      return render(f.lhs(), lex) + " and " + render(f.rhs(), lex);
    case Op::kOr:
      return render(f.lhs(), lex) + " or " + render(f.rhs(), lex);
    case Op::kUntil:
      return render(f.lhs(), lex) + " until you " + render(f.rhs(), lex);
  }
  return {};
}

}  // namespace

std::string back_translate_rule(const Formula& f, const Lexicon& lex) {
  std::string out = render(f, lex);
  if (f.depth() > 2 && !out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    out += '.';
  }
  return out;
}

std::string fill_template(const std::string& sentence,
                          const std::map<std::size_t, std::string>& binding,
                          const Lexicon& lex) {
  std::string out;
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (sentence[i] == '{') {
      auto close = sentence.find('}', i);
      if (close != std::string::npos) {
        auto k = std::stoul(sentence.substr(i + 1, close - i - 1));
        out += lex.ap_phrase(binding.at(k));
        i = close;
        continue;
      }
    }
    out += sentence[i];
  }
  return normalize_whitespace(out);
}

std::string back_translate_template(const Formula& f,
                                    const std::vector<LtlStructure>& structures,
                                    const std::vector<AnnotationTemplate>& templates,
                                    const Lexicon& lex) {
  auto match = match_structure(f, structures);
  const AnnotationTemplate* tpl = nullptr;
  for (const auto& t : templates) {
    if (t.structure_id != match.structure_id) continue;
    if (tpl)
      throw Error(ErrorCode::kInvalidStructure,
                  "several templates for '" + match.structure_id + "'");
    tpl = &t;
  }
  if (!tpl)
    throw Error(ErrorCode::kMissingPhrase,
                "no template for structure '" + match.structure_id + "'");
  return fill_template(tpl->sentence, match.binding, lex);
}

// ---------------------------------------------------------------------------

BackTranslator::BackTranslator(ApSet aps, std::vector<LtlStructure> structures,
                               FormulaAnnotations annotations)
    : aps_(std::move(aps)),
      descriptions_(Lexicon::from_ap_set(aps_)),
      structures_(std::move(structures)),
      annotations_(std::move(annotations)) {
  for (const auto& s : structures_)
    if (s.sentence_template) templates_.push_back({s.id, *s.sentence_template});
}

SeedSentence BackTranslator::translate(const Formula& f) const {
  auto key = print_formula(f, Notation::kPrefix);
  if (auto it = annotations_.find(key); it != annotations_.end())
    return {it->second, SeedSource::kFormulaAnnotation};
  auto matches = find_matches(f, structures_);
  if (matches.size() == 1) {
    for (const auto& t : templates_)
      if (t.structure_id == matches.front().structure_id)
        return {fill_template(t.sentence, matches.front().binding, descriptions_),
                SeedSource::kStructureTemplate};
  } else if (matches.size() > 1) {
    match_structure(f, structures_);  // throws MultipleMatchingStructures
  }
  return {back_translate_rule(f, descriptions_), SeedSource::kRule};
}

AnnotationBudget BackTranslator::budget(const std::vector<Formula>& formulas) const {
  std::set<std::string> annotations, templates, descriptions;
  for (const auto& f : formulas) {
    auto key = print_formula(f, Notation::kPrefix);
    if (annotations_.count(key)) {
      annotations.insert(key);
      continue;
    }
    auto matches = find_matches(f, structures_);
    bool templated = false;
    if (matches.size() == 1) {
      for (const auto& t : templates_) {
        if (t.structure_id != matches.front().structure_id) continue;
        templates.insert(t.structure_id);
        for (const auto& [k, name] : matches.front().binding)
          descriptions.insert(name);
        templated = true;
      }
    }
    if (!templated)
      for (const auto& name : f.atoms()) descriptions.insert(name);
  }
  return {annotations.size(), templates.size(), descriptions.size()};
}

}  // namespace nl2ltl
