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

#include "nl2ltl/canonical.hpp"

#include <json.hpp>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

constexpr std::pair<const char*, Op> kOperatorKeys[] = {
    {"finally", Op::kFinally}, {"globally", Op::kGlobally},
    {"until", Op::kUntil},     {"and", Op::kAnd},
    {"or", Op::kOr},           {"not", Op::kNot},
};

const char* key_for(Op op) {
  for (const auto& [key, o] : kOperatorKeys)
    if (o == op) return key;
  throw Error(ErrorCode::kInvalidArgument, "atoms have no operator phrase");
}

bool has_structural_char(std::string_view s) {
  return s.find_first_of("(),") != std::string_view::npos;
}

}  // namespace

Lexicon::Lexicon(std::map<std::string, std::string> operator_phrases,
                 std::map<std::string, std::string> ap_phrases,
                 std::map<std::string, std::string> structure_templates)
    : structure_templates_(std::move(structure_templates)) {
  for (const auto& [key, op] : kOperatorKeys) {
    auto it = operator_phrases.find(key);
    std::string phrase = it == operator_phrases.end() ? key : it->second;
    if (phrase.empty() || contains_whitespace(phrase) ||
        has_structural_char(phrase) || to_lower(phrase) != phrase)
      throw Error(ErrorCode::kInvalidLexicon,
                  "operator phrase for '" + std::string(key) +
                      "' must be one lowercase word: '" + phrase + "'");
    if (!op_by_word_.emplace(phrase, op).second)
      throw Error(ErrorCode::kInvalidLexicon,
                  "operator phrase '" + phrase + "' used twice");
    operator_phrases_[key] = phrase;
    operator_phrases.erase(key);
  }
  if (!operator_phrases.empty())
    throw Error(ErrorCode::kInvalidLexicon,
                "unknown operator key '" + operator_phrases.begin()->first + "'");

  for (auto& [name, raw] : ap_phrases) {
    std::string phrase = normalize_whitespace(raw);
    if (phrase.empty() || has_structural_char(phrase))
      throw Error(ErrorCode::kInvalidLexicon,
                  "phrase for '" + name +
                      "' must be non-empty without parentheses or commas");
    aps_by_phrase_[phrase].push_back(name);
    ap_phrases_[name] = std::move(phrase);
  }
}

Lexicon Lexicon::from_ap_set(const ApSet& aps) {
  std::map<std::string, std::string> phrases;
  for (const auto& p : aps.props()) phrases[p.name] = p.description;
  return Lexicon({}, std::move(phrases));
}

const std::string& Lexicon::operator_phrase(Op op) const {
  return operator_phrases_.at(key_for(op));
}

const std::string& Lexicon::ap_phrase(const std::string& name) const {
  auto it = ap_phrases_.find(name);
  if (it == ap_phrases_.end())
    throw Error(ErrorCode::kMissingPhrase, "no phrase for '" + name + "'");
  return it->second;
}

std::optional<Op> Lexicon::operator_for(const std::string& word) const {
  auto it = op_by_word_.find(word);
  if (it == op_by_word_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Lexicon::aps_for(const std::string& phrase) const {
  auto it = aps_by_phrase_.find(phrase);
  if (it == aps_by_phrase_.end()) return {};
  return it->second;
}

void Lexicon::check_covers(const ApSet& aps) const {
  for (const auto& p : aps.props()) ap_phrase(p.name);
}

Lexicon load_lexicon(const std::filesystem::path& path, const ApSet* aps) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidLexicon, path.string() + ": " + e.what());
  }
  auto section = [&](const char* key) {
    std::map<std::string, std::string> out;
    if (doc.contains(key)) out = doc.at(key).get<std::map<std::string, std::string>>();
    return out;
  };
  auto ap_phrases = section("ap_phrases");
  if (aps) {
    for (const auto& p : aps->props())
      ap_phrases.try_emplace(p.name, p.description);
  }
  Lexicon lex(section("operator_phrases"), std::move(ap_phrases),
              section("structure_templates"));
  for (const auto& [name, phrase] : lex.ap_phrases()) {
    if (lex.aps_for(phrase).size() > 1)
      throw Error(ErrorCode::kInvalidLexicon,
                  "phrase '" + phrase + "' is shared by several propositions");
  }
  if (aps) lex.check_covers(*aps);
  return lex;
}

// ---------------------------------------------------------------------------

namespace {

void emit(const Formula& f, const Lexicon& lex, std::string& out) {
  if (!out.empty()) out += ' ';
  if (f.op() == Op::kAtom) {
    out += lex.ap_phrase(f.name());
    return;
  }
  out += lex.operator_phrase(f.op());
  out += " (";
  emit(f.lhs(), lex, out);
  if (is_binary(f.op())) {
    out += " ,";
    emit(f.rhs(), lex, out);
  }
  out += " )";
}

class CanonicalParser {
 public:
  CanonicalParser(std::string_view text, const Lexicon& lex)
      : tokens_(split_whitespace(text)), lex_(lex) {}

  Formula parse() {
    if (tokens_.empty()) fail("empty canonical form");
    Formula f = node();
    if (pos_ != tokens_.size()) fail("unexpected '" + tokens_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kUnparsableCanonical, why, pos_ + 1);
  }

  void expect(const char* token) {
    if (pos_ >= tokens_.size() || tokens_[pos_] != token)
      fail(std::string("expected '") + token + "'");
    ++pos_;
  }

  Formula node() {
    if (pos_ >= tokens_.size()) fail("missing argument");
    if (auto op = lex_.operator_for(tokens_[pos_]);
        op && pos_ + 1 < tokens_.size() && tokens_[pos_ + 1] == "(") {
      pos_ += 2;
      Formula lhs = node();
      if (is_binary(*op)) {
        expect(",");
        Formula rhs = node();
        expect(")");
        return Formula::binary(*op, std::move(lhs), std::move(rhs));
      }
      expect(")");
      return Formula::unary(*op, std::move(lhs));
    }
    return leaf();
  }

  // A leaf runs until the next separator; it must equal one phrase exactly.
  Formula leaf() {
    std::size_t start = pos_;
    std::vector<std::string> words;
    while (pos_ < tokens_.size() && tokens_[pos_] != "," &&
           tokens_[pos_] != ")") {
      if (tokens_[pos_] == "(") fail("'(' without an operator");
      words.push_back(tokens_[pos_++]);
    }
    if (words.empty()) fail("missing argument");
    std::string phrase = join(words, " ");
    auto names = lex_.aps_for(phrase);
    if (names.size() != 1)
      throw Error(ErrorCode::kAmbiguousPhrase,
                  "'" + phrase + "' matches " + std::to_string(names.size()) +
                      " proposition phrases",
                  start + 1);
    return Formula::atom(names.front());
  }

  std::vector<std::string> tokens_;
  const Lexicon& lex_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_canonical(const Formula& f, const Lexicon& lex) {
  std::string out;
  emit(f, lex, out);
  return out;
}

Formula from_canonical(std::string_view text, const Lexicon& lex) {
  return CanonicalParser(text, lex).parse();
}

}  // namespace nl2ltl
