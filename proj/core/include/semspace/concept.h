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

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace semspace {

// Identifier of an ontology concept, normally an IRI. Non-empty, no
// whitespace, compared byte-wise.
class ConceptId {
 public:
  // Throws Error(kInvalidConcept) when `uri` is empty or has whitespace.
  explicit ConceptId(std::string uri);

  static bool is_valid(std::string_view uri) noexcept;

  const std::string& uri() const noexcept { return uri_; }

  friend bool operator==(const ConceptId&, const ConceptId&) = default;
  friend auto operator<=>(const ConceptId&, const ConceptId&) = default;

 private:
  std::string uri_;
};

using ConceptSet = std::set<ConceptId>;

struct ConceptPair {
  ConceptId child;
  ConceptId parent;

  friend bool operator==(const ConceptPair&, const ConceptPair&) = default;
};

// Ordered (child, parent) relation with first-occurrence de-duplication.
class PairList {
 public:
  PairList() = default;
  PairList(std::initializer_list<std::pair<std::string_view, std::string_view>> pairs);

  // Returns false when the pair was already present. A pair with
  // child == parent is a one-node cycle and throws CycleDetected.
  bool add(ConceptId child, ConceptId parent);

  std::span<const ConceptPair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

 private:
  std::vector<ConceptPair> pairs_;
  std::unordered_set<std::string> seen_;
};

}  // namespace semspace

template <>
struct std::hash<semspace::ConceptId> {
  std::size_t operator()(const semspace::ConceptId& id) const noexcept {
    return std::hash<std::string>{}(id.uri());
  }
};
