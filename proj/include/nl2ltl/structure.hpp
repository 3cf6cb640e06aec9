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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nl2ltl/formula.hpp"

namespace nl2ltl {

/// Hole tokens are H1, H2, ...; returns the 1-based index or nullopt.
std::optional<std::size_t> hole_index(std::string_view atom_name);

/// Formula template whose atom positions may be holes H1..Hk. Atoms that are
/// not holes are constants shared by every instantiation.
struct LtlStructure {
  std::string id;
  Formula skeleton;
  std::size_t slot_count = 0;
  bool distinct_slots = true;
  /// Optional per-hole candidate propositions; empty means "any".
  std::vector<std::vector<std::string>> slot_domains;
  /// Optional annotation sentence with placeholders {1}..{slot_count}.
  std::optional<std::string> sentence_template;

  /// Validates hole numbering; computes slot_count.
  static LtlStructure make(std::string id, Formula skeleton,
                           bool distinct_slots = true,
                           std::vector<std::vector<std::string>> slot_domains = {},
                           std::optional<std::string> sentence_template = {});

  /// `binding[k-1]` fills hole k.
  Formula instantiate(const std::vector<std::string>& binding) const;

  /// True when `binding` respects distinctness and slot domains.
  bool admits(const std::vector<std::string>& binding) const;
};

struct AnnotationTemplate {
  std::string structure_id;
  std::string sentence;
};

/// Throws InvalidStructure unless each of {1}..{slot_count} appears once and
/// no other placeholder appears.
void validate_template(const AnnotationTemplate& tpl, std::size_t slot_count);

struct StructureMatch {
  std::string structure_id;
  /// Hole index -> bound proposition.
  std::map<std::size_t, std::string> binding;

  friend bool operator==(const StructureMatch&, const StructureMatch&) = default;
};

/// Unique structure whose skeleton unifies with `f` under a binding the
/// structure admits. Throws NoMatchingStructure / MultipleMatchingStructures.
StructureMatch match_structure(const Formula& f,
                               const std::vector<LtlStructure>& structures);

/// Every matching structure, in input order; never throws.
std::vector<StructureMatch> find_matches(
    const Formula& f, const std::vector<LtlStructure>& structures);

/// JSON Lines: {"id", "skeleton" (prefix, H1..Hk holes), "distinct_slots",
/// optional "template", optional "slot_domains"}.
std::vector<LtlStructure> load_structures(const std::filesystem::path& path,
                                          const ApSet* aps = nullptr);

/// Formula-level annotations: JSON Lines {"formula" (prefix), "sentence"}.
using FormulaAnnotations = std::map<std::string, std::string>;
FormulaAnnotations load_annotations(const std::filesystem::path& path,
                                    const ApSet* aps = nullptr);

}  // namespace nl2ltl
