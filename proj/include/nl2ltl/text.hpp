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

// Small string helpers shared by every module.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nl2ltl {

/// Splits on runs of ASCII whitespace; never yields empty tokens.
std::vector<std::string> split_whitespace(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Collapses every whitespace run to one space and trims both ends.
std::string normalize_whitespace(std::string_view text);

std::string to_lower(std::string_view text);

std::string trim(std::string_view text);

bool contains_whitespace(std::string_view text);

/// 64-bit FNV-1a. Used for fingerprints and per-item seeds, so it must not
/// change between releases.
std::uint64_t fnv1a64(std::string_view data,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t value);

std::string read_file(const std::filesystem::path& path);

/// Reads non-blank lines; the returned pairs carry 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> read_lines(
    const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace nl2ltl
