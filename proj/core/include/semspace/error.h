// Copyright 2026 The semspace Authors.
//
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semspace {

enum class ErrorCode {
  kMalformedLine,
  kUnknownConcept,
  kCycleDetected,
  kHashCollision,
  kInvalidConcept,
  kModelNotLoaded,
  kInvalidLease,
  kFloorOutOfRange,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Single exception type for everything the library reports. `subject()` is
// the offending concept/model/value where there is one; `line()` is the
// 1-based input line for parse errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {},
        std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }
  std::size_t line() const noexcept { return line_; }

  static Error malformed_line(std::size_t line, std::string_view why);
  static Error unknown_concept(std::string_view concept_uri);
  static Error cycle_detected(std::string_view witness);

 private:
  ErrorCode code_;
  std::string subject_;
  std::size_t line_;
};

}  // namespace semspace
