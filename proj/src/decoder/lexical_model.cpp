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

#include "nl2ltl/lexical_model.hpp"

#include <algorithm>
#include <cmath>

#include "nl2ltl/decode.hpp"
#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

constexpr const char* kFormat = "nl2ltl-lexical/2";
constexpr const char* kStart = "<s>";

std::uint64_t lookup(const LexicalModel::Counts& counts, const std::string& a,
                     const std::string& b) {
  auto it = counts.find(a);
  if (it == counts.end()) return 0;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? 0 : jt->second;
}

// Smoothed distribution of `row` restricted to `events`.
std::vector<double> conditional(const std::map<std::string, std::uint64_t>* row,
                                const std::vector<std::string>& events, double alpha) {
  std::vector<double> p(events.size(), alpha);
  if (row) {
    for (std::size_t i = 0; i < events.size(); ++i) {
      auto it = row->find(events[i]);
      if (it != row->end()) p[i] += static_cast<double>(it->second);
    }
  }
  double total = 0;
  for (double v : p) total += v;
  for (auto& v : p) v /= total;
  return p;
}

}  // namespace

LexicalModel::LexicalModel(LexicalOptions options, std::set<std::string> structural)
    : options_(options), structural_(std::move(structural)) {
  if (!(options_.alpha > 0))
    throw Error(ErrorCode::kConfigError, "smoothing alpha must be > 0");
  if (options_.cooc_weight < 0 || options_.cooc_weight > 1)
    throw Error(ErrorCode::kConfigError, "mixture weight must be in [0, 1]");
  if (options_.position_buckets == 0)
    throw Error(ErrorCode::kConfigError, "position_buckets must be >= 1");
}

std::vector<std::string> LexicalModel::features(
    const std::vector<std::string>& tokens) const {
  std::set<std::string> out;
  const auto n = tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(tokens[i]);
    out.insert(tokens[i] + "@" + std::to_string(i * options_.position_buckets / n));
    for (std::size_t j = i + 1; j < n && j <= i + options_.skip_window; ++j)
      out.insert(tokens[i] + ">" + tokens[j]);
  }
  return {out.begin(), out.end()};
}

std::string LexicalModel::slot(const std::vector<std::string>& prefix) const {
  std::size_t k = 0;
  std::string last = "^";
  for (const auto& t : prefix)
    if (structural_.count(t)) {
      ++k;
      last = t;
    }
  return std::to_string(k) + "/" + last;
}

std::string LexicalModel::event(const std::vector<std::string>& prefix,
                                const std::string& token) const {
  return token + "#" + slot(prefix);
}

std::string LexicalModel::previous_event(const std::vector<std::string>& prefix) const {
  if (prefix.empty()) return kStart;
  std::vector<std::string> head(prefix.begin(), prefix.end() - 1);
  return event(head, prefix.back());
}

void LexicalModel::observe(const std::vector<std::string>& input_tokens,
                           const std::vector<std::string>& output_tokens) {
  std::vector<std::string> events;
  std::size_t k = 0;
  std::string last = "^";
  auto key = [&](const std::string& tok) {
    return tok + "#" + std::to_string(k) + "/" + last;
  };
  for (const auto& tok : output_tokens) {
    events.push_back(key(tok));
    if (structural_.count(tok)) {
      ++k;
      last = tok;
    }
  }
  events.push_back(key(kEndToken));

  std::set<std::string> present(events.begin(), events.end());
  for (const auto& e : present) ++event_examples_[e];
  for (const auto& f : features(input_tokens)) {
    auto& row = cooc_[f];
    for (const auto& e : present) ++row[e];
  }
  std::string prev = kStart;
  for (const auto& e : events) {
    ++bigram_[prev][e];
    prev = e;
  }
  ++examples_;
  finalized_ = false;
  max_output_length_ = std::max(max_output_length_, output_tokens.size());
}

void LexicalModel::finalize() {
  const double alpha = options_.alpha;
  const auto n_features = static_cast<double>(cooc_.size());
  absent_mass_.clear();
  for (const auto& [e, n] : event_examples_)
    absent_mass_[e] = n_features * std::log1p(-alpha / (static_cast<double>(n) + 2 * alpha));
  for (const auto& [f, row] : cooc_) {
    for (const auto& [e, c] : row) {
      const double denom = static_cast<double>(event_examples_.at(e)) + 2 * alpha;
      absent_mass_[e] += std::log1p(-(static_cast<double>(c) + alpha) / denom) -
                         std::log1p(-alpha / denom);
    }
  }
  finalized_ = true;
}

std::vector<double> LexicalModel::score_next(
    const std::vector<std::string>& input_tokens,
    const std::vector<std::string>& output_prefix,
    const std::vector<std::string>& candidates) const {
  if (!finalized_)
    throw Error(ErrorCode::kInvalidArgument, "lexical model used before finalize()");
  if (candidates.empty()) return {};
  const double alpha = options_.alpha;
  const auto k = slot(output_prefix);
  std::vector<const std::map<std::string, std::uint64_t>*> rows;
  for (const auto& f : features(input_tokens)) {
    auto it = cooc_.find(f);
    if (it != cooc_.end()) rows.push_back(&it->second);
  }

  std::vector<std::string> events;
  events.reserve(candidates.size());
  for (const auto& c : candidates) events.push_back(c + "#" + k);

  // Naive-Bayes log-likelihood of the input under each candidate.
  std::vector<double> nb(candidates.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    auto n_it = event_examples_.find(events[i]);
    const double n = n_it == event_examples_.end() ? 0.0 : static_cast<double>(n_it->second);
    auto a_it = absent_mass_.find(events[i]);
    double ll = a_it != absent_mass_.end()
                    ? a_it->second
                    : static_cast<double>(cooc_.size()) * std::log(0.5);
    for (const auto* row : rows) {
      auto c_it = row->find(events[i]);
      const double c = c_it == row->end() ? 0.0 : static_cast<double>(c_it->second);
      const double p = (c + alpha) / (n + 2 * alpha);
      ll += std::log(p) - std::log1p(-p);
    }
    nb[i] = ll;
  }

  auto bt = bigram_.find(previous_event(output_prefix));
  auto big = conditional(bt == bigram_.end() ? nullptr : &bt->second, events, alpha);

  const double w = options_.cooc_weight;
  std::vector<double> out(candidates.size());
  double peak = -INFINITY;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = w * nb[i] + (1 - w) * std::log(big[i]);
    peak = std::max(peak, out[i]);
  }
  double z = 0;
  for (double v : out) z += std::exp(v - peak);
  const double log_z = peak + std::log(z);
  for (auto& v : out) v -= log_z;
  return out;
}

std::uint64_t LexicalModel::cooccurrence(const std::string& feature,
                                         const std::string& event) const {
  return lookup(cooc_, feature, event);
}

std::uint64_t LexicalModel::event_examples(const std::string& event) const {
  auto it = event_examples_.find(event);
  return it == event_examples_.end() ? 0 : it->second;
}

std::uint64_t LexicalModel::bigram(const std::string& previous,
                                   const std::string& event) const {
  return lookup(bigram_, previous, event);
}

std::set<std::string> LexicalModel::output_vocabulary() const {
  std::set<std::string> vocab;
  for (const auto& [prev, row] : bigram_)
    for (const auto& [e, n] : row) {
      auto tok = e.substr(0, e.rfind('#'));
      if (tok != kEndToken) vocab.insert(tok);
    }
  return vocab;
}

nlohmann::ordered_json LexicalModel::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kFormat;
  j["options"] = {{"alpha", options_.alpha},
                  {"cooc_weight", options_.cooc_weight},
                  {"position_buckets", options_.position_buckets},
                  {"skip_window", options_.skip_window}};
  j["structural"] = structural_;
  j["examples"] = examples_;
  j["max_output_length"] = max_output_length_;
  j["cooccurrence"] = cooc_;
  j["bigram"] = bigram_;
  j["event_examples"] = event_examples_;
  return j;
}

LexicalModel LexicalModel::from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kFormat)
      throw Error(ErrorCode::kConfigError, "unsupported model format");
    const auto& o = j.at("options");
    LexicalOptions options{o.at("alpha").get<double>(), o.at("cooc_weight").get<double>(),
                           o.at("position_buckets").get<std::size_t>(),
                           o.at("skip_window").get<std::size_t>()};
    LexicalModel m(options, j.at("structural").get<std::set<std::string>>());
    m.examples_ = j.at("examples").get<std::size_t>();
    m.max_output_length_ = j.at("max_output_length").get<std::size_t>();
    m.cooc_ = j.at("cooccurrence").get<Counts>();
    m.bigram_ = j.at("bigram").get<Counts>();
    m.event_examples_ = j.at("event_examples").get<std::map<std::string, std::uint64_t>>();
    for (const auto& [f, row] : m.cooc_)
      for (const auto& [e, c] : row)
        if (c > m.event_examples(e))
          throw Error(ErrorCode::kConfigError, "bad model file: inconsistent counts");
    m.finalize();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, std::string("bad model file: ") + e.what());
  }
}

std::set<std::string> structural_tokens(TargetRepr repr, const Lexicon* lex) {
  if (repr == TargetRepr::kCanonical) {
    std::set<std::string> out{"(", ")", ","};
    if (lex) {
      for (const auto& [key, word] : lex->operator_phrases()) out.insert(word);
    } else {
      for (const char* w : {"finally", "globally", "until", "and", "or", "not"})
        out.insert(w);
    }
    return out;
  }
  return {"F", "G", "U", "&", "|", "!", "(", ")"};
}

LexicalModel train_lexical(const Corpus& corpus, TargetRepr repr, const Lexicon* lex,
                           LexicalOptions options) {
  if (corpus.examples.empty())
    throw Error(ErrorCode::kEmptyCorpus, "cannot train on an empty corpus");
  LexicalModel model(options, structural_tokens(repr, lex));
  for (const auto& e : corpus.examples)
    model.observe(tokenize_input(e.text),
                  split_whitespace(render_target(e.target, repr, lex)));
  model.finalize();
  return model;
}

void save_model(const LexicalModel& model, const std::filesystem::path& path) {
  write_file(path, model.to_json().dump(1) + "\n");
}

LexicalModel load_model(const std::filesystem::path& path) {
  try {
    return LexicalModel::from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, path.string() + ": " + e.what());
  }
}

}  // namespace nl2ltl
