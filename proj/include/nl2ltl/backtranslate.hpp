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

// Formula -> structured English. Three sources, in order of preference:
// a human sentence for the exact formula, a human template for the formula's
// structure, and the rule-based renderer.

#pragma once

#include <string>
#include <vector>

#include "nl2ltl/canonical.hpp"
#include "nl2ltl/structure.hpp"

namespace nl2ltl {

/// Rule-based rendering from the proposition phrases in `lex`:
///   F(B) -> "eventually visit the blue room"
///   F((B | R) & F Y) -> "Go to the blue room or go to the red room to
///                        finally go to the yellow room."
/// Formulas deeper than two levels are capitalized and end with a period.
std::string back_translate_rule(const Formula& f, const Lexicon& lex);

/// Fills the matching structure's template with proposition phrases.
std::string back_translate_template(const Formula& f,
                                    const std::vector<LtlStructure>& structures,
                                    const std::vector<AnnotationTemplate>& templates,
                                    const Lexicon& lex);

std::string fill_template(const std::string& sentence,
                          const std::map<std::size_t, std::string>& binding,
                          const Lexicon& lex);

enum class SeedSource { kFormulaAnnotation, kStructureTemplate, kRule };

struct SeedSentence {
  std::string text;
  SeedSource source;
};

/// Number of human-written strings a back-translation setup consumes.
struct AnnotationBudget {
  std::size_t formula_annotations = 0;
  std::size_t structure_templates = 0;
  std::size_t ap_descriptions = 0;
  std::size_t total() const {
    return formula_annotations + structure_templates + ap_descriptions;
  }
};

class BackTranslator {
 public:
  BackTranslator(ApSet aps, std::vector<LtlStructure> structures,
                 FormulaAnnotations annotations = {});

  SeedSentence translate(const Formula& f) const;

  /// Counts the distinct annotations, templates and descriptions that
  /// back-translating every formula in `formulas` reads.
  AnnotationBudget budget(const std::vector<Formula>& formulas) const;

  const std::vector<LtlStructure>& structures() const { return structures_; }
  const ApSet& aps() const { return aps_; }

 private:
  ApSet aps_;
  Lexicon descriptions_;
  std::vector<LtlStructure> structures_;
  std::vector<AnnotationTemplate> templates_;
  FormulaAnnotations annotations_;
};

}  // namespace nl2ltl
