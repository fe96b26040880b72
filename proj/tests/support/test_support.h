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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semspace/concept.h"
#include "semspace/ontology_parser.h"

namespace semspace::testing {

inline constexpr std::string_view kSwingNs =
    "http://swing.uni-muenster.de/core/Swing/";

inline ConceptId swing(std::string_view local) {
  return ConceptId(std::string(kSwingNs) + std::string(local));
}

inline std::string data_path(std::string_view name) {
  return std::string(SEMSPACE_TEST_DATA_DIR) + "/" + std::string(name);
}

inline PairList swing_pairs() {
  return load_ontology_file(data_path("swing.pairs"), OntologyFormat::kPairs);
}

// Local names of every concept in the swing fixture.
inline const std::vector<std::string>& swing_concepts() {
  static const std::vector<std::string> names{
      "Organism",         "Plant",
      "Animal",           "Invertebrate",
      "Vertebrate",       "Arthropod",
      "Bird",             "Amphibian",
      "Reptile",          "Fish",
      "Mammal",           "Snake",
      "Frog",             "Community",
      "AdministrativeEntity", "ConsumptionEntity",
      "CommunityIdentifier",  "GeographicIdentifier",
      "SpatialReference", "INSEECODE",
      "Identifier"};
  return names;
}

// Reference hash: sum of s[i] * 31^(n-1-i) over UTF-16 code units, each
// power built separately, all arithmetic modulo 2^32.
inline std::int32_t direct_hash_oracle(std::u16string_view units) {
  const std::size_t n = units.size();
  std::uint32_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t power = 1;
    for (std::size_t k = 0; k < n - 1 - i; ++k) power *= 31u;
    sum += static_cast<std::uint32_t>(units[i]) * power;
  }
  return static_cast<std::int32_t>(sum);
}

// Seeded random DAG over nodes "urn:dag:<seed>:n<i>". Each node picks its
// parents among earlier nodes, so the graph is acyclic by construction.
// Edges that would push any node past `max_paths` root paths are dropped.
struct RandomDag {
  std::vector<std::string> nodes;
  // (child, parent) node indices, in insertion order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  PairList pairs() const {
    PairList out;
    for (auto [c, p] : edges) out.add(ConceptId(nodes[c]), ConceptId(nodes[p]));
    return out;
  }

  // Nodes taking part in at least one edge.
  std::set<std::size_t> mentioned() const {
    std::set<std::size_t> m;
    for (auto [c, p] : edges) {
      m.insert(c);
      m.insert(p);
    }
    return m;
  }

  std::vector<std::vector<std::size_t>> parents() const {
    std::vector<std::vector<std::size_t>> up(nodes.size());
    for (auto [c, p] : edges) up[c].push_back(p);
    return up;
  }
};

inline RandomDag make_random_dag(std::uint64_t seed, std::size_t max_nodes,
                                 std::size_t max_edges,
                                 std::uint64_t max_paths = 4096) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> node_count(5, max_nodes);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> extra(2, 3);

  RandomDag dag;
  const std::size_t n = node_count(rng);
  std::vector<std::uint64_t> paths(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    dag.nodes.push_back("urn:dag:" + std::to_string(seed) + ":n" +
                        std::to_string(i));
    if (i == 0 || coin(rng) < 0.1) continue;
    int want = coin(rng) < 0.6 ? 1 : extra(rng);
    std::set<std::size_t> picked;
    std::uniform_int_distribution<std::size_t> earlier(0, i - 1);
    for (int k = 0; k < want * 4 && static_cast<int>(picked.size()) < want; ++k)
      picked.insert(earlier(rng));
    std::uint64_t total = 0;
    for (std::size_t p : picked) {
      if (dag.edges.size() >= max_edges) break;
      if (total + paths[p] > max_paths) continue;
      dag.edges.emplace_back(i, p);
      total += paths[p];
    }
    paths[i] = total == 0 ? 1 : total;
  }
  return dag;
}

// Every root-to-node path as a node-index set, found by plain recursion.
inline std::vector<std::set<std::size_t>> dfs_path_sets(
    const std::vector<std::vector<std::size_t>>& parents, std::size_t node) {
  std::vector<std::set<std::size_t>> out;
  std::vector<std::size_t> trail;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    trail.push_back(v);
    if (parents[v].empty()) {
      out.emplace_back(trail.begin(), trail.end());
    } else {
      for (std::size_t p : parents[v]) walk(p);
    }
    trail.pop_back();
  };
  walk(node);
  return out;
}

}  // namespace semspace::testing
