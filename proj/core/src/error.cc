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

#include "semspace/error.h"

#include <utility>

namespace semspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kUnknownConcept: return "UnknownConcept";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kHashCollision: return "HashCollision";
    case ErrorCode::kInvalidConcept: return "InvalidConcept";
    case ErrorCode::kModelNotLoaded: return "ModelNotLoaded";
    case ErrorCode::kInvalidLease: return "InvalidLease";
    case ErrorCode::kFloorOutOfRange: return "FloorOutOfRange";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string subject,
             std::size_t line)
    : std::runtime_error(std::move(message)),
      code_(code),
      subject_(std::move(subject)),
      line_(line) {}

Error Error::malformed_line(std::size_t line, std::string_view why) {
  return Error(ErrorCode::kMalformedLine,
               "malformed line " + std::to_string(line) + ": " +
                   std::string(why),
               {}, line);
}

Error Error::unknown_concept(std::string_view concept_uri) {
  return Error(ErrorCode::kUnknownConcept,
               "unknown concept: " + std::string(concept_uri),
               std::string(concept_uri));
}

Error Error::cycle_detected(std::string_view witness) {
  return Error(ErrorCode::kCycleDetected,
               "cycle detected through concept: " + std::string(witness),
               std::string(witness));
}

}  // namespace semspace
