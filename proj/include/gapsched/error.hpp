// Copyright 2026 The gapsched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAPSCHED_ERROR_HPP_
#define GAPSCHED_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gapsched {

enum class ErrorCode {
  Parse,       // malformed input text
  Validation,  // well-formed input violating a domain invariant
  Domain,      // mathematically undefined request (e.g. zero period)
  NotFound,
  Conflict,    // stale revision or nothing to undo
  Io,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::Conflict: return "conflict";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        code_(code),
        message_(message),
        field_(std::move(field)) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  /// Path of the offending input field ("preventive_tasks[3].due"), or empty.
  const std::string& field() const { return field_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::string field_;
};

}  // namespace gapsched

#endif  // GAPSCHED_ERROR_HPP_
