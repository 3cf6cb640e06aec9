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

#include "nl2ltl/corpus.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

std::string_view repr_name(TargetRepr repr) {
  switch (repr) {
    case TargetRepr::kRawPrefix: return "raw-prefix";
    case TargetRepr::kRawInfix: return "raw-infix";
    case TargetRepr::kCanonical: return "canonical";
  }
  return "";
}

TargetRepr parse_repr(std::string_view name) {
  if (name == "raw-prefix" || name == "raw") return TargetRepr::kRawPrefix;
  if (name == "raw-infix") return TargetRepr::kRawInfix;
  if (name == "canonical") return TargetRepr::kCanonical;
  throw Error(ErrorCode::kConfigError,
              "unknown representation '" + std::string(name) + "'");
}

std::string render_target(const Formula& f, TargetRepr repr, const Lexicon* lex) {
  switch (repr) {
    case TargetRepr::kRawPrefix: return print_formula(f, Notation::kPrefix);
    case TargetRepr::kRawInfix: return print_formula(f, Notation::kInfix);
    case TargetRepr::kCanonical:
      if (!lex)
        throw Error(ErrorCode::kConfigError,
                    "canonical representation needs a lexicon");
      return to_canonical(f, *lex);
  }
  return {};
}

Formula parse_target(std::string_view text, TargetRepr repr, const Lexicon* lex) {
  switch (repr) {
    case TargetRepr::kRawPrefix: return parse_prefix(text);
    case TargetRepr::kRawInfix: return parse_infix(text);
    case TargetRepr::kCanonical:
      if (!lex)
        throw Error(ErrorCode::kConfigError,
                    "canonical representation needs a lexicon");
      return from_canonical(text, *lex);
  }
  throw Error(ErrorCode::kConfigError, "bad representation");
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kGolden: return "golden";
    case Provenance::kBacktranslated: return "backtranslated";
    case Provenance::kParaphrased: return "paraphrased";
  }
  return "";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "golden") return Provenance::kGolden;
  if (name == "backtranslated") return Provenance::kBacktranslated;
  if (name == "paraphrased") return Provenance::kParaphrased;
  throw Error(ErrorCode::kParseFailure,
              "unknown provenance '" + std::string(name) + "'");
}

Example make_example(std::string text, Formula target, TargetRepr repr,
                     const Lexicon* lex, Provenance provenance,
                     std::string source_id) {
  text = normalize_whitespace(text);
  if (text.empty())
    throw Error(ErrorCode::kInvalidArgument, "example text must be non-empty");
  auto rendered = render_target(target, repr, lex);
  return Example{std::move(text), std::move(target), repr, std::move(rendered),
                 provenance, std::move(source_id)};
}

void canonicalize_corpus(Corpus& corpus) {
  auto& ex = corpus.examples;
  std::stable_sort(ex.begin(), ex.end(), [](const Example& a, const Example& b) {
    if (a.source_id != b.source_id) return a.source_id < b.source_id;
    return a.provenance < b.provenance;
  });
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<Example> kept;
  kept.reserve(ex.size());
  for (auto& e : ex) {
    if (seen.emplace(normalize_whitespace(e.text), e.target_text).second)
      kept.push_back(std::move(e));
  }
  ex = std::move(kept);
}

Corpus without_paraphrases(const Corpus& corpus) {
  Corpus out;
  out.fingerprint = corpus.fingerprint;
  for (const auto& e : corpus.examples)
    if (e.provenance != Provenance::kParaphrased) out.examples.push_back(e);
  return out;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::string body;
  for (const auto& e : corpus.examples) {
    nlohmann::ordered_json j;
    j["text"] = e.text;
    j["target"] = print_formula(e.target, Notation::kPrefix);
    j["target_repr"] = repr_name(e.repr);
    j["target_text"] = e.target_text;
    j["provenance"] = provenance_name(e.provenance);
    j["source_id"] = e.source_id;
    body += j.dump();
    body += '\n';
  }
  write_file(path, body);
  nlohmann::json meta = corpus.fingerprint;
  write_file(path.string() + ".meta.json", meta.dump(2) + "\n");
}

Corpus load_corpus(const std::filesystem::path& path) {
  Corpus corpus;
  for (const auto& [line_no, line] : read_lines(path)) {
    try {
      auto j = nlohmann::json::parse(line);
      Example e{j.at("text").get<std::string>(),
                parse_prefix(j.at("target").get<std::string>()),
                parse_repr(j.at("target_repr").get<std::string>()),
                j.at("target_text").get<std::string>(),
                parse_provenance(j.at("provenance").get<std::string>()),
                j.at("source_id").get<std::string>()};
      if (e.repr != TargetRepr::kCanonical &&
          render_target(e.target, e.repr) != e.target_text)
        throw Error(ErrorCode::kParseFailure,
                    "target_text does not match target");
      corpus.examples.push_back(std::move(e));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseFailure, path.string() + ": " + e.what(),
                  line_no);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseFailure, path.string() + ": " + e.what(),
                  line_no);
    }
  }
  auto meta = std::filesystem::path(path.string() + ".meta.json");
  if (std::filesystem::exists(meta)) {
    auto j = nlohmann::json::parse(read_file(meta));
    corpus.fingerprint = j.get<std::map<std::string, std::string>>();
  }
  return corpus;
}

}  // namespace nl2ltl
