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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nl2ltl {

enum class ErrorCode {
  kInvalidArgument,
  kUnknownToken,
  kMalformedExpression,
  kUnknownAtom,
  kInvalidApSet,
  kMissingPhrase,
  kUnparsableCanonical,
  kAmbiguousPhrase,
  kInvalidLexicon,
  kInvalidStructure,
  kNoMatchingStructure,
  kMultipleMatchingStructures,
  kInsufficientAps,
  kServiceUnavailable,
  kMalformedServiceResponse,
  kEmptyOutputSet,
  kEmptyCorpus,
  kParseFailure,
  kStatMismatch,
  kTooFewExamples,
  kUnknownSubcommand,
  kConfigError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `position` is a 1-based token index
/// for parser errors and a 1-based line number for file ingestion errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

  /// True for failures a caller may retry (remote service errors).
  bool retriable() const noexcept;

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace nl2ltl
