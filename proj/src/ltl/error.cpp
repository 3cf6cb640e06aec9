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

#include "nl2ltl/error.hpp"

namespace nl2ltl {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kMalformedExpression: return "MalformedExpression";
    case ErrorCode::kUnknownAtom: return "UnknownAtom";
    case ErrorCode::kInvalidApSet: return "InvalidApSet";
    case ErrorCode::kMissingPhrase: return "MissingPhrase";
    case ErrorCode::kUnparsableCanonical: return "UnparsableCanonical";
    case ErrorCode::kAmbiguousPhrase: return "AmbiguousPhrase";
    case ErrorCode::kInvalidLexicon: return "InvalidLexicon";
    case ErrorCode::kInvalidStructure: return "InvalidStructure";
    case ErrorCode::kNoMatchingStructure: return "NoMatchingStructure";
    case ErrorCode::kMultipleMatchingStructures:
      return "MultipleMatchingStructures";
    case ErrorCode::kInsufficientAps: return "InsufficientAPs";
    case ErrorCode::kServiceUnavailable: return "ServiceUnavailable";
    case ErrorCode::kMalformedServiceResponse:
      return "MalformedServiceResponse";
    case ErrorCode::kEmptyOutputSet: return "EmptyOutputSet";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kParseFailure: return "ParseFailure";
    case ErrorCode::kStatMismatch: return "StatMismatch";
    case ErrorCode::kTooFewExamples: return "TooFewExamples";
    case ErrorCode::kUnknownSubcommand: return "UnknownSubcommand";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> position) {
  std::string out(error_code_name(code));
  if (position) out += " at " + std::to_string(*position);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(decorate(code, message, position)),
      code_(code),
      position_(position) {}

bool Error::retriable() const noexcept {
  return code_ == ErrorCode::kServiceUnavailable ||
         code_ == ErrorCode::kMalformedServiceResponse;
}

}  // namespace nl2ltl
