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

#include "nl2ltl/synthesis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

std::vector<std::string> candidates_for(const LtlStructure& s, std::size_t slot,
                                        const ApSet& aps) {
  std::vector<std::string> out;
  for (const auto& p : aps.props()) {
    if (!s.slot_domains.empty()) {
      const auto& dom = s.slot_domains[slot];
      if (std::find(dom.begin(), dom.end(), p.name) == dom.end()) continue;
    }
    out.push_back(p.name);
  }
  return out;
}

void enumerate_bindings(const LtlStructure& s, const ApSet& aps,
                        std::vector<std::string>& binding,
                        std::vector<Formula>& out) {
  if (binding.size() == s.slot_count) {
    if (s.admits(binding)) out.push_back(s.instantiate(binding));
    return;
  }
  for (auto& name : candidates_for(s, binding.size(), aps)) {
    if (s.distinct_slots &&
        std::find(binding.begin(), binding.end(), name) != binding.end())
      continue;
    binding.push_back(std::move(name));
    enumerate_bindings(s, aps, binding, out);
    binding.pop_back();
  }
}

}  // namespace

std::vector<Formula> enumerate_formulas(const std::vector<LtlStructure>& structures,
                                        const ApSet& aps) {
  std::vector<Formula> out;
  std::map<std::string, std::string> owner;
  for (const auto& s : structures) {
    for (const auto& atom : s.skeleton.atoms())
      if (!hole_index(atom)) aps.at(atom);
    if (s.distinct_slots && s.slot_count > aps.size())
      throw Error(ErrorCode::kInsufficientAps,
                  "structure '" + s.id + "' needs " + std::to_string(s.slot_count) +
                      " distinct propositions, have " + std::to_string(aps.size()));
    std::vector<Formula> produced;
    std::vector<std::string> binding;
    enumerate_bindings(s, aps, binding, produced);
    if (produced.empty())
      throw Error(ErrorCode::kInsufficientAps,
                  "structure '" + s.id + "' admits no binding");
    for (auto& f : produced) {
      auto key = print_formula(f, Notation::kPrefix);
      auto [it, fresh] = owner.emplace(key, s.id);
      if (!fresh)
        throw Error(ErrorCode::kInvalidStructure,
                    "'" + key + "' is produced by both '" + it->second +
                        "' and '" + s.id + "'");
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::size_t count_bindable_aps(const std::vector<LtlStructure>& structures,
                               const ApSet& aps) {
  std::set<std::string> names;
  for (const auto& s : structures)
    for (std::size_t k = 0; k < s.slot_count; ++k)
      for (auto& n : candidates_for(s, k, aps)) names.insert(std::move(n));
  return names.size();
}

std::string formula_id(std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "f%05zu", index + 1);
  return buf;
}

std::string fingerprint_aps(const ApSet& aps) {
  std::string blob;
  for (const auto& p : aps.props()) blob += p.name + '\t' + p.description + '\n';
  return hex64(fnv1a64(blob));
}

std::string fingerprint_structures(const std::vector<LtlStructure>& structures) {
  std::string blob;
  for (const auto& s : structures) {
    blob += s.id + '\t' + print_formula(s.skeleton, Notation::kPrefix) + '\t' +
            (s.distinct_slots ? "1" : "0") + '\t' + s.sentence_template.value_or("");
    for (const auto& dom : s.slot_domains) blob += '\t' + join(dom, ",");
    blob += '\n';
  }
  return hex64(fnv1a64(blob));
}

Corpus build_corpus(const BackTranslator& translator, const Lexicon& lex,
                    const ParaphraseService* paraphraser,
                    const SynthesisOptions& options, std::ostream* log) {
  if (options.max_in_flight == 0)
    throw Error(ErrorCode::kConfigError, "max_in_flight must be >= 1");
  const auto formulas = enumerate_formulas(translator.structures(), translator.aps());
  const Lexicon* lexp = options.repr == TargetRepr::kCanonical ? &lex : nullptr;

  std::vector<std::string> seeds;
  seeds.reserve(formulas.size());
  for (const auto& f : formulas) seeds.push_back(translator.translate(f).text);

  std::vector<std::vector<std::string>> variants(formulas.size());
  std::vector<std::optional<std::string>> failures(formulas.size());
  if (paraphraser && options.n_paraphrases > 0) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < formulas.size();) {
        try {
          variants[i] = paraphrase(seeds[i], options.n_paraphrases, *paraphraser);
        } catch (const Error& e) {
          failures[i] = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    auto n_threads = std::min(options.max_in_flight, formulas.size());
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Corpus corpus;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    auto id = formula_id(i);
    corpus.examples.push_back(make_example(seeds[i], formulas[i], options.repr, lexp,
                                           Provenance::kBacktranslated, id));
    if (failures[i]) {
      ++failed;
      if (log) *log << "paraphrase failed for " << id << ": " << *failures[i] << "\n";
      continue;
    }
    for (const auto& v : variants[i])
      corpus.examples.push_back(make_example(v, formulas[i], options.repr, lexp,
                                             Provenance::kParaphrased, id));
  }
  canonicalize_corpus(corpus);

  auto& fp = corpus.fingerprint;
  fp["apset"] = fingerprint_aps(translator.aps());
  fp["structures"] = fingerprint_structures(translator.structures());
  fp["n_formulas"] = std::to_string(formulas.size());
  fp["n_paraphrases"] = std::to_string(options.n_paraphrases);
  fp["paraphraser"] = paraphraser && options.n_paraphrases > 0
                          ? paraphraser->describe()
                          : std::string("none");
  fp["paraphrase_failures"] = std::to_string(failed);
  fp["target_repr"] = std::string(repr_name(options.repr));
  if (lexp) {
    std::string blob;
    for (const auto& [k, v] : lex.operator_phrases()) blob += k + '=' + v + '\n';
    for (const auto& [k, v] : lex.ap_phrases()) blob += k + '=' + v + '\n';
    fp["lexicon"] = hex64(fnv1a64(blob));
  }
  return corpus;
}

}  // namespace nl2ltl
