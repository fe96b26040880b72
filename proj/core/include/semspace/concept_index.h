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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "semspace/concept.h"
#include "semspace/path_key.h"

namespace semspace {

// <concept, ListOfSuperConcepts>; an empty list marks a top concept.
struct ChildParents {
  ConceptId concept_id;
  std::vector<ConceptId> superconcepts;

  friend bool operator==(const ChildParents&, const ChildParents&) = default;
};

// Breadth-first upward closure of one concept; front() is that concept.
using ChildParentsList = std::vector<ChildParents>;

// Topmost ancestor first, the concept itself last.
using ConceptPath = std::vector<ConceptId>;
using ConceptPathList = std::vector<ConceptPath>;

// Throws UnknownConcept when `concept_id` is not mentioned by `pairs`, and
// CycleDetected when the upward relation from it is cyclic.
ChildParentsList create_child_parents_list(const ConceptId& concept_id,
                                           const PairList& pairs);

// Every root-to-concept path. Partial paths are grown at their head; a head
// with k > 1 superconcepts keeps the first in place and appends k - 1 copies,
// so the output order is deterministic for a given `cpl`.
ConceptPathList create_concept_path_list(const ConceptId& concept_id,
                                         const ChildParentsList& cpl);

// Immutable per-model lookup structure: for every concept, all of its
// paths plus their hash and packed-integer encodings. Concepts are numbered
// (ordinals) in order of first mention in the pair source, then declared
// concepts in sorted order.
class ConceptIndex {
 public:
  using Ordinal = std::uint32_t;
  // Sorted ordinals of the nodes of one path.
  using NodeSet = std::vector<Ordinal>;

  struct Entry {
    ConceptId concept_id;
    ConceptPathList paths;
    std::vector<HashPath> hash_paths;
    std::vector<PathKey> path_keys;
    std::vector<NodeSet> node_sets;
  };

  // Throws CycleDetected or HashCollision.
  static ConceptIndex build(const PairList& pairs,
                            const ConceptSet& declared = {});

  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(const ConceptId& c) const { return find(c) != nullptr; }

  const Entry* find(const ConceptId& c) const;
  // Throws UnknownConcept.
  const Entry& at(const ConceptId& c) const;

  std::optional<Ordinal> ordinal_of(const ConceptId& c) const;
  const Entry& entry(Ordinal ordinal) const { return entries_.at(ordinal); }
  std::span<const Entry> entries() const noexcept { return entries_; }

  const PairList& pair_source() const noexcept { return pairs_; }

 private:
  ConceptIndex() = default;

  std::vector<Entry> entries_;
  std::unordered_map<std::string, Ordinal> by_uri_;
  PairList pairs_;
};

inline ConceptIndex build_concept_index(const PairList& pairs,
                                        const ConceptSet& declared = {}) {
  return ConceptIndex::build(pairs, declared);
}

// Throws UnknownConcept.
const ConceptPathList& paths_of(const ConceptIndex& index,
                                const ConceptId& concept_id);

}  // namespace semspace
