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

// Golden command/formula datasets and their declarative adapters.
//
// An adapter is a small JSON document:
//
//   {"name": "cleanup",
//    "format": "parallel_text",          // or "jsonl"
//    "source_file": "src.txt",           // parallel_text: one command per line
//    "target_file": "tar.txt",           //   and one formula per line
//    "file": "...", "text_field": "...", "target_field": "...",   // jsonl
//    "notation": "prefix",               // or "infix"
//    "apset": "apset.jsonl",
//    "structures": "structures.jsonl",   // optional
//    "declared": {"n_structures": 4, "n_formulas": 39, "n_aps": 6,
//                 "n_commands": 3382}}   // any subset
//
// Relative paths resolve against the adapter's directory, or against
// `data_root` when one is given.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nl2ltl/corpus.hpp"
#include "nl2ltl/structure.hpp"

namespace nl2ltl {

struct DatasetStats {
  std::size_t n_structures = 0;
  std::size_t n_formulas = 0;
  std::size_t n_aps = 0;
  std::size_t n_commands = 0;
  /// Formulas no structure matches; they count toward n_aps with all atoms.
  std::size_t n_unmatched_formulas = 0;
};

struct DeclaredStats {
  std::optional<std::size_t> n_structures, n_formulas, n_aps, n_commands;
};

struct DatasetAdapter {
  std::string name;
  std::string format;  // parallel_text | jsonl
  std::filesystem::path source_file, target_file, file;
  std::string text_field = "text", target_field = "target";
  Notation notation = Notation::kPrefix;
  std::filesystem::path apset, structures;
  DeclaredStats declared;
};

/// Throws ConfigError on schema problems.
DatasetAdapter load_adapter(const std::filesystem::path& path,
                            const std::optional<std::filesystem::path>& data_root = {});

struct Dataset {
  std::string name;
  ApSet aps;
  std::vector<LtlStructure> structures;
  /// Golden examples, targets in raw prefix; source ids "g00001", ...
  std::vector<Example> examples;
  DatasetStats stats;
  DeclaredStats declared;
};

DatasetStats compute_stats(const std::vector<Example>& examples,
                           const std::vector<LtlStructure>& structures);

/// Lists every declared statistic that differs from `actual`; empty when
/// they agree.
std::vector<std::string> stat_mismatches(const DatasetStats& actual,
                                         const DeclaredStats& declared);

/// Reads and validates the dataset. Throws ParseFailure (with the 1-based
/// line number) for unreadable records and, when `check_declared`,
/// StatMismatch listing every disagreement.
Dataset ingest(const DatasetAdapter& adapter, bool check_declared = true);
Dataset ingest(const std::filesystem::path& adapter_path, bool check_declared = true);

}  // namespace nl2ltl
