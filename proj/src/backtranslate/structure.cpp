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

#include "nl2ltl/structure.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

std::optional<std::size_t> hole_index(std::string_view name) {
  if (name.size() < 2 || name[0] != 'H' || name[1] == '0') return std::nullopt;
  std::size_t value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return value;
}

LtlStructure LtlStructure::make(std::string id, Formula skeleton,
                                bool distinct_slots,
                                std::vector<std::vector<std::string>> slot_domains,
                                std::optional<std::string> sentence_template) {
  if (id.empty())
    throw Error(ErrorCode::kInvalidStructure, "structure id must be non-empty");
  std::set<std::size_t> holes;
  for (const auto& a : skeleton.atoms())
    if (auto k = hole_index(a)) holes.insert(*k);
  std::size_t count = holes.empty() ? 0 : *holes.rbegin();
  if (holes.size() != count)
    throw Error(ErrorCode::kInvalidStructure,
                "structure '" + id + "' must number its holes H1..Hk");
  if (!slot_domains.empty() && slot_domains.size() != count)
    throw Error(ErrorCode::kInvalidStructure,
                "structure '" + id + "' needs one domain per hole");
  LtlStructure s{std::move(id),           std::move(skeleton),
                 count,                   distinct_slots,
                 std::move(slot_domains), std::move(sentence_template)};
  if (s.sentence_template)
    validate_template({s.id, *s.sentence_template}, s.slot_count);
  return s;
}

namespace {

Formula substitute(const Formula& f, const std::vector<std::string>& binding) {
  switch (f.op()) {
    case Op::kAtom:
      if (auto k = hole_index(f.name())) return Formula::atom(binding.at(*k - 1));
      return f;
    case Op::kNot:
    case Op::kFinally:
    case Op::kGlobally:
      return Formula::unary(f.op(), substitute(f.child(), binding));
    default:
      return Formula::binary(f.op(), substitute(f.lhs(), binding),
                             substitute(f.rhs(), binding));
  }
}

bool unify(const Formula& skeleton, const Formula& f,
           std::map<std::size_t, std::string>& binding) {
  if (skeleton.op() == Op::kAtom) {
    if (f.op() != Op::kAtom) return false;
    auto k = hole_index(skeleton.name());
    if (!k) return skeleton.name() == f.name();
    auto [it, inserted] = binding.emplace(*k, f.name());
    return inserted || it->second == f.name();
  }
  if (skeleton.op() != f.op()) return false;
  if (!unify(skeleton.lhs(), f.lhs(), binding)) return false;
  return !is_binary(f.op()) || unify(skeleton.rhs(), f.rhs(), binding);
}

}  // namespace

Formula LtlStructure::instantiate(const std::vector<std::string>& binding) const {
  if (binding.size() != slot_count)
    throw Error(ErrorCode::kInvalidArgument,
                "structure '" + id + "' takes " + std::to_string(slot_count) +
                    " propositions");
  return substitute(skeleton, binding);
}

bool LtlStructure::admits(const std::vector<std::string>& binding) const {
  if (binding.size() != slot_count) return false;
  for (std::size_t i = 0; i < binding.size(); ++i) {
    if (hole_index(binding[i])) return false;
    if (!slot_domains.empty()) {
      const auto& dom = slot_domains[i];
      if (std::find(dom.begin(), dom.end(), binding[i]) == dom.end())
        return false;
    }
  }
  if (distinct_slots) {
    std::set<std::string> seen(binding.begin(), binding.end());
    if (seen.size() != binding.size()) return false;
  }
  return true;
}

void validate_template(const AnnotationTemplate& tpl, std::size_t slot_count) {
  std::map<std::size_t, int> seen;
  const auto& s = tpl.sentence;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '{') continue;
    auto close = s.find('}', i);
    if (close == std::string::npos)
      throw Error(ErrorCode::kInvalidStructure,
                  "unterminated placeholder in template for '" +
                      tpl.structure_id + "'");
    std::string body = s.substr(i + 1, close - i - 1);
    if (body.empty() ||
        !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorCode::kInvalidStructure,
                  "bad placeholder {" + body + "} in template for '" +
                      tpl.structure_id + "'");
    ++seen[std::stoul(body)];
    i = close;
  }
  for (std::size_t k = 1; k <= slot_count; ++k)
    if (seen[k] != 1)
      throw Error(ErrorCode::kInvalidStructure,
                  "template for '" + tpl.structure_id + "' must use {" +
                      std::to_string(k) + "} exactly once");
  if (seen.size() != slot_count)
    throw Error(ErrorCode::kInvalidStructure,
                "template for '" + tpl.structure_id +
                    "' has placeholders beyond its slots");
}

std::vector<StructureMatch> find_matches(
    const Formula& f, const std::vector<LtlStructure>& structures) {
  std::vector<StructureMatch> out;
  for (const auto& s : structures) {
    std::map<std::size_t, std::string> binding;
    if (!unify(s.skeleton, f, binding)) continue;
    std::vector<std::string> flat;
    for (const auto& [k, name] : binding) flat.push_back(name);
    if (!s.admits(flat)) continue;
    out.push_back({s.id, std::move(binding)});
  }
  return out;
}

StructureMatch match_structure(const Formula& f,
                               const std::vector<LtlStructure>& structures) {
  auto matches = find_matches(f, structures);
  if (matches.empty())
    throw Error(ErrorCode::kNoMatchingStructure,
                "no structure matches '" + print_formula(f, Notation::kPrefix) +
                    "'");
  if (matches.size() > 1)
    throw Error(ErrorCode::kMultipleMatchingStructures,
                "'" + print_formula(f, Notation::kPrefix) + "' matches both '" +
                    matches[0].structure_id + "' and '" +
                    matches[1].structure_id + "'");
  return std::move(matches.front());
}

std::vector<LtlStructure> load_structures(const std::filesystem::path& path,
                                          const ApSet* aps) {
  std::vector<LtlStructure> out;
  std::set<std::string> ids;
  for (const auto& [line_no, line] : read_lines(path)) {
    try {
      auto j = nlohmann::json::parse(line);
      Formula skeleton = parse_prefix(j.at("skeleton").get<std::string>());
      std::vector<std::vector<std::string>> domains;
      if (j.contains("slot_domains"))
        domains = j.at("slot_domains").get<std::vector<std::vector<std::string>>>();
      std::optional<std::string> tpl;
      if (j.contains("template")) tpl = j.at("template").get<std::string>();
      auto s = LtlStructure::make(j.at("id").get<std::string>(),
                                  std::move(skeleton),
                                  j.value("distinct_slots", true),
                                  std::move(domains), std::move(tpl));
      if (aps) {
        for (const auto& a : s.skeleton.atoms())
          if (!hole_index(a)) aps->at(a);
        for (const auto& dom : s.slot_domains)
          for (const auto& a : dom) aps->at(a);
      }
      if (!ids.insert(s.id).second)
        throw Error(ErrorCode::kInvalidStructure, "duplicate id '" + s.id + "'");
      out.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseFailure, path.string() + ": " + e.what(),
                  line_no);
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + " line " + std::to_string(line_no) +
                                ": " + e.what());
    }
  }
  return out;
}

FormulaAnnotations load_annotations(const std::filesystem::path& path,
                                    const ApSet* aps) {
  FormulaAnnotations out;
  for (const auto& [line_no, line] : read_lines(path)) {
    try {
      auto j = nlohmann::json::parse(line);
      Formula f = parse_prefix(j.at("formula").get<std::string>(), aps);
      auto sentence = normalize_whitespace(j.at("sentence").get<std::string>());
      if (sentence.empty())
        throw Error(ErrorCode::kInvalidArgument, "empty annotation sentence");
      if (!out.emplace(print_formula(f, Notation::kPrefix), sentence).second)
        throw Error(ErrorCode::kInvalidArgument, "formula annotated twice");
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseFailure, path.string() + ": " + e.what(),
                  line_no);
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + " line " + std::to_string(line_no) +
                                ": " + e.what());
    }
  }
  return out;
}

}  // namespace nl2ltl
