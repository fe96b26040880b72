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

#include "semspace/concept_index.h"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

#include "semspace/error.h"
#include "semspace/string_hash.h"

namespace semspace {
namespace {

// Direct superconcepts of every mentioned concept, in pair order.
class ParentMap {
 public:
  explicit ParentMap(const PairList& pairs) {
    for (const auto& [child, parent] : pairs) {
      slot(child).push_back(parent);
      slot(parent);
    }
  }

  void declare(const ConceptId& c) { slot(c); }

  const std::vector<ConceptId>* find(const ConceptId& c) const {
    auto it = parents_.find(c.uri());
    return it == parents_.end() ? nullptr : &it->second;
  }

  const std::vector<ConceptId>& at(const ConceptId& c) const {
    const auto* found = find(c);
    if (found == nullptr) throw Error::unknown_concept(c.uri());
    return *found;
  }

  // First-mention order.
  const std::vector<ConceptId>& concepts() const { return order_; }

 private:
  std::vector<ConceptId>& slot(const ConceptId& c) {
    auto [it, inserted] = parents_.try_emplace(c.uri());
    if (inserted) order_.push_back(c);
    return it->second;
  }

  std::unordered_map<std::string, std::vector<ConceptId>> parents_;
  std::vector<ConceptId> order_;
};

// Iterative three-colour DFS over the upward relation starting at `start`.
// `done` carries finished nodes across calls so a whole-graph check is
// linear. Throws CycleDetected naming the node closing the back edge.
void check_acyclic_from(const ConceptId& start, const ParentMap& parents,
                        std::unordered_set<std::string>& done) {
  if (done.contains(start.uri())) return;
  std::unordered_set<std::string> on_chain;
  struct Frame {
    const ConceptId* node;
    std::size_t next;
  };
  std::vector<Frame> stack{{&start, 0}};
  on_chain.insert(start.uri());
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& ups = parents.at(*top.node);
    if (top.next == ups.size()) {
      on_chain.erase(top.node->uri());
      done.insert(top.node->uri());
      stack.pop_back();
      continue;
    }
    const ConceptId& up = ups[top.next++];
    if (on_chain.contains(up.uri())) throw Error::cycle_detected(up.uri());
    if (done.contains(up.uri())) continue;
    on_chain.insert(up.uri());
    stack.push_back({&up, 0});
  }
}

ChildParentsList child_parents_from(const ConceptId& concept_id,
                                    const ParentMap& parents) {
  ChildParentsList cpl;
  std::unordered_set<std::string> listed{concept_id.uri()};
  cpl.push_back({concept_id, parents.at(concept_id)});
  // cpl grows while we walk it; index rather than iterate.
  for (std::size_t i = 0; i < cpl.size(); ++i) {
    for (std::size_t k = 0; k < cpl[i].superconcepts.size(); ++k) {
      ConceptId up = cpl[i].superconcepts[k];
      if (listed.insert(up.uri()).second) {
        cpl.push_back({up, parents.at(up)});
      }
    }
  }
  return cpl;
}

}  // namespace

ChildParentsList create_child_parents_list(const ConceptId& concept_id,
                                           const PairList& pairs) {
  ParentMap parents(pairs);
  std::unordered_set<std::string> done;
  check_acyclic_from(concept_id, parents, done);
  return child_parents_from(concept_id, parents);
}

ConceptPathList create_concept_path_list(const ConceptId& concept_id,
                                         const ChildParentsList& cpl) {
  if (cpl.empty() || cpl.front().concept_id != concept_id) {
    throw Error::unknown_concept(concept_id.uri());
  }
  std::unordered_map<std::string, const std::vector<ConceptId>*> supers;
  for (const auto& entry : cpl) {
    supers.emplace(entry.concept_id.uri(), &entry.superconcepts);
  }

  // Partial paths are kept reversed: concept first, current head last.
  std::vector<std::vector<ConceptId>> partial;
  const auto& first = cpl.front().superconcepts;
  if (first.empty()) {
    partial.push_back({concept_id});
  } else {
    for (const auto& up : first) partial.push_back({concept_id, up});
  }

  for (std::size_t i = 0; i < partial.size(); ++i) {
    for (;;) {
      auto found = supers.find(partial[i].back().uri());
      if (found == supers.end()) {
        throw Error::unknown_concept(partial[i].back().uri());
      }
      const auto& ups = *found->second;
      if (ups.empty()) break;
      for (std::size_t k = 1; k < ups.size(); ++k) {
        auto copy = partial[i];
        copy.push_back(ups[k]);
        partial.push_back(std::move(copy));
      }
      auto& path = partial[i];
      if (std::find(path.begin(), path.end(), ups[0]) != path.end()) {
        throw Error::cycle_detected(ups[0].uri());
      }
      path.push_back(ups[0]);
    }
    // Copies appended above were checked only for their new head.
    const auto& path = partial[i];
    std::unordered_set<std::string> seen;
    for (const auto& node : path) {
      if (!seen.insert(node.uri()).second) throw Error::cycle_detected(node.uri());
    }
  }

  ConceptPathList out;
  out.reserve(partial.size());
  for (auto& path : partial) {
    std::reverse(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  return out;
}

ConceptIndex ConceptIndex::build(const PairList& pairs,
                                 const ConceptSet& declared) {
  ParentMap parents(pairs);
  for (const auto& c : declared) parents.declare(c);

  std::unordered_set<std::string> done;
  for (const auto& c : parents.concepts()) check_acyclic_from(c, parents, done);

  ConceptIndex index;
  index.pairs_ = pairs;

  const auto& concepts = parents.concepts();
  std::vector<std::uint32_t> codes;
  codes.reserve(concepts.size());
  std::unordered_map<std::uint32_t, Ordinal> by_code;
  for (const auto& c : concepts) {
    auto ordinal = static_cast<Ordinal>(index.by_uri_.size());
    index.by_uri_.emplace(c.uri(), ordinal);
    std::uint32_t code = concept_code(c.uri());
    auto [it, inserted] = by_code.emplace(code, ordinal);
    if (!inserted) {
      const auto& other = concepts[it->second].uri();
      throw Error(ErrorCode::kHashCollision,
                  "hash collision between '" + other + "' and '" + c.uri() +
                      "' (" + std::to_string(code) + ")",
                  c.uri());
    }
    codes.push_back(code);
  }

  index.entries_.reserve(concepts.size());
  for (const auto& c : concepts) {
    Entry entry{c, create_concept_path_list(c, child_parents_from(c, parents)),
                {}, {}, {}};
    for (const auto& path : entry.paths) {
      HashPath hash_path;
      NodeSet nodes;
      hash_path.reserve(path.size());
      nodes.reserve(path.size());
      for (const auto& node : path) {
        Ordinal ordinal = index.by_uri_.at(node.uri());
        hash_path.push_back(codes[ordinal]);
        nodes.push_back(ordinal);
      }
      std::sort(nodes.begin(), nodes.end());
      entry.path_keys.push_back(PathKey::encode(hash_path));
      entry.hash_paths.push_back(std::move(hash_path));
      entry.node_sets.push_back(std::move(nodes));
    }
    index.entries_.push_back(std::move(entry));
  }
  return index;
}

const ConceptIndex::Entry* ConceptIndex::find(const ConceptId& c) const {
  auto it = by_uri_.find(c.uri());
  return it == by_uri_.end() ? nullptr : &entries_[it->second];
}

const ConceptIndex::Entry& ConceptIndex::at(const ConceptId& c) const {
  const Entry* entry = find(c);
  if (entry == nullptr) throw Error::unknown_concept(c.uri());
  return *entry;
}

std::optional<ConceptIndex::Ordinal> ConceptIndex::ordinal_of(
    const ConceptId& c) const {
  auto it = by_uri_.find(c.uri());
  if (it == by_uri_.end()) return std::nullopt;
  return it->second;
}

const ConceptPathList& paths_of(const ConceptIndex& index,
                                const ConceptId& concept_id) {
  return index.at(concept_id).paths;
}

}  // namespace semspace
