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

#include "semspace/concept.h"

#include <algorithm>

#include "semspace/error.h"

namespace semspace {

bool ConceptId::is_valid(std::string_view uri) noexcept {
  if (uri.empty()) return false;
  return std::none_of(uri.begin(), uri.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  });
}

ConceptId::ConceptId(std::string uri) : uri_(std::move(uri)) {
  if (!is_valid(uri_)) {
    throw Error(ErrorCode::kInvalidConcept,
                "concept id must be non-empty and contain no whitespace: '" +
                    uri_ + "'",
                uri_);
  }
}

PairList::PairList(
    std::initializer_list<std::pair<std::string_view, std::string_view>> pairs) {
  for (const auto& [child, parent] : pairs) {
    add(ConceptId(std::string(child)), ConceptId(std::string(parent)));
  }
}

bool PairList::add(ConceptId child, ConceptId parent) {
  if (child == parent) throw Error::cycle_detected(child.uri());
  // '\n' cannot occur inside a ConceptId, so it is a safe key separator.
  std::string key = child.uri() + '\n' + parent.uri();
  if (!seen_.insert(std::move(key)).second) return false;
  pairs_.push_back({std::move(child), std::move(parent)});
  return true;
}

}  // namespace semspace
