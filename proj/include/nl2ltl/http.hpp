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

#include <chrono>
#include <string>

namespace nl2ltl {

struct HttpEndpoint {
  std::string origin;  ///< scheme://host[:port]
  std::string path;
};

/// Throws ConfigError when the URL has no scheme.
HttpEndpoint split_url(const std::string& url);

/// POSTs a JSON body and returns the response body. Connection failures,
/// 429 and 5xx raise ServiceUnavailable; other non-200 statuses raise
/// MalformedServiceResponse.
std::string post_json(const std::string& url, const std::string& token,
                      const std::string& body, std::chrono::seconds timeout);

}  // namespace nl2ltl
