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

#include "nl2ltl/dataset.hpp"

#include <cstdio>
#include <set>

#include <json.hpp>

#include "nl2ltl/error.hpp"
#include "nl2ltl/text.hpp"

namespace nl2ltl {

namespace {

std::string golden_id(std::size_t line) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "g%05zu", line);
  return buf;
}

Example golden(const std::string& text, const std::string& target, Notation notation,
               const ApSet& aps, std::size_t line, const std::filesystem::path& where) {
  if (trim(text).empty())
    throw Error(ErrorCode::kParseFailure, where.string() + ": empty command", line);
  try {
    auto f = parse_formula(target, notation, &aps);
    return make_example(text, std::move(f), TargetRepr::kRawPrefix, nullptr,
                        Provenance::kGolden, golden_id(line));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseFailure, where.string() + ": " + e.what(), line);
  }
}

// Every line, blank ones included, so that line numbers stay aligned.
std::vector<std::string> all_lines(const std::filesystem::path& path) {
  std::vector<std::string> out;
  std::string text = read_file(path);
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    start = end + 1;
  }
  while (!out.empty() && trim(out.back()).empty()) out.pop_back();
  return out;
}

}  // namespace

DatasetAdapter load_adapter(const std::filesystem::path& path,
                            const std::optional<std::filesystem::path>& data_root) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, path.string() + ": " + e.what());
  }
  const auto config_dir = path.parent_path();
  const auto data_dir = data_root.value_or(config_dir);
  auto resolve = [](const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path q(p);
    return q.is_absolute() ? q : base / q;
  };
  try {
    DatasetAdapter a;
    a.name = j.at("name").get<std::string>();
    a.format = j.at("format").get<std::string>();
    if (a.format == "parallel_text") {
      a.source_file = resolve(data_dir, j.at("source_file").get<std::string>());
      a.target_file = resolve(data_dir, j.at("target_file").get<std::string>());
    } else if (a.format == "jsonl") {
      a.file = resolve(data_dir, j.at("file").get<std::string>());
      a.text_field = j.value("text_field", a.text_field);
      a.target_field = j.value("target_field", a.target_field);
    } else {
      throw Error(ErrorCode::kConfigError,
                  path.string() + ": unknown dataset format '" + a.format + "'");
    }
    auto notation = j.value("notation", std::string("prefix"));
    if (notation == "prefix")
      a.notation = Notation::kPrefix;
    else if (notation == "infix")
      a.notation = Notation::kInfix;
    else
      throw Error(ErrorCode::kConfigError,
                  path.string() + ": unknown notation '" + notation + "'");
    // Configuration files live next to the adapter, data files may not.
    a.apset = resolve(config_dir, j.at("apset").get<std::string>());
    if (j.contains("structures"))
      a.structures = resolve(config_dir, j.at("structures").get<std::string>());
    if (j.contains("declared")) {
      const auto& d = j.at("declared");
      auto opt = [&](const char* key) -> std::optional<std::size_t> {
        if (!d.contains(key)) return std::nullopt;
        return d.at(key).get<std::size_t>();
      };
      a.declared = {opt("n_structures"), opt("n_formulas"), opt("n_aps"),
                    opt("n_commands")};
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, path.string() + ": " + e.what());
  }
}

DatasetStats compute_stats(const std::vector<Example>& examples,
                           const std::vector<LtlStructure>& structures) {
  DatasetStats s;
  s.n_commands = examples.size();
  std::map<std::string, const Formula*> formulas;
  for (const auto& e : examples)
    formulas.emplace(print_formula(e.target, Notation::kPrefix), &e.target);
  s.n_formulas = formulas.size();
  std::set<std::string> ids, aps;
  for (const auto& [key, f] : formulas) {
    auto matches = find_matches(*f, structures);
    if (matches.empty()) {
      ++s.n_unmatched_formulas;
      for (const auto& a : f->atoms()) aps.insert(a);
      continue;
    }
    for (const auto& m : matches) {
      ids.insert(m.structure_id);
      for (const auto& [k, name] : m.binding) aps.insert(name);
    }
  }
  s.n_structures = ids.size();
  s.n_aps = aps.size();
  return s;
}

std::vector<std::string> stat_mismatches(const DatasetStats& actual,
                                         const DeclaredStats& declared) {
  std::vector<std::string> out;
  auto check = [&](const char* name, std::size_t have,
                   const std::optional<std::size_t>& want) {
    if (want && *want != have)
      out.push_back(std::string(name) + ": declared " + std::to_string(*want) +
                    ", found " + std::to_string(have));
  };
  check("n_structures", actual.n_structures, declared.n_structures);
  check("n_formulas", actual.n_formulas, declared.n_formulas);
  check("n_aps", actual.n_aps, declared.n_aps);
  check("n_commands", actual.n_commands, declared.n_commands);
  return out;
}

Dataset ingest(const DatasetAdapter& adapter, bool check_declared) {
  Dataset d;
  d.name = adapter.name;
  d.declared = adapter.declared;
  d.aps = load_ap_set(adapter.apset);
  if (!adapter.structures.empty()) d.structures = load_structures(adapter.structures, &d.aps);

  if (adapter.format == "parallel_text") {
    auto sources = all_lines(adapter.source_file);
    auto targets = all_lines(adapter.target_file);
    if (sources.size() != targets.size())
      throw Error(ErrorCode::kParseFailure,
                  adapter.source_file.string() + " has " +
                      std::to_string(sources.size()) + " lines but " +
                      adapter.target_file.string() + " has " +
                      std::to_string(targets.size()),
                  std::min(sources.size(), targets.size()) + 1);
    for (std::size_t i = 0; i < sources.size(); ++i)
      d.examples.push_back(golden(sources[i], targets[i], adapter.notation, d.aps, i + 1,
                                  adapter.target_file));
  } else {
    for (const auto& [line_no, line] : read_lines(adapter.file)) {
      std::string text, target;
      try {
        auto j = nlohmann::json::parse(line);
        text = j.at(adapter.text_field).get<std::string>();
        target = j.at(adapter.target_field).get<std::string>();
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParseFailure, adapter.file.string() + ": " + e.what(),
                    line_no);
      }
      d.examples.push_back(golden(text, target, adapter.notation, d.aps, line_no,
                                  adapter.file));
    }
  }

  d.stats = compute_stats(d.examples, d.structures);
  if (check_declared) {
    auto problems = stat_mismatches(d.stats, d.declared);
    if (!problems.empty())
      throw Error(ErrorCode::kStatMismatch, d.name + ": " + join(problems, "; "));
  }
  return d;
}

Dataset ingest(const std::filesystem::path& adapter_path, bool check_declared) {
  return ingest(load_adapter(adapter_path), check_declared);
}

}  // namespace nl2ltl
