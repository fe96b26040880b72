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

#include "semspace/similarity.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "semspace/error.h"

namespace semspace {
namespace {

std::uint64_t intersection_size(const ConceptIndex::NodeSet& a,
                                const ConceptIndex::NodeSet& b) {
  std::uint64_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

using NaivePath = std::vector<std::string>;

std::vector<NaivePath> naive_paths(const PairList& pairs,
                                   const std::string& uri) {
  std::vector<NaivePath> out;
  bool has_parent = false;
  for (const auto& [child, parent] : pairs) {
    if (child.uri() != uri) continue;
    has_parent = true;
    for (auto& path : naive_paths(pairs, parent.uri())) {
      path.push_back(uri);
      out.push_back(std::move(path));
    }
  }
  if (!has_parent) out.push_back({uri});
  return out;
}

bool mentioned(const PairList& pairs, const ConceptId& c) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const ConceptPair& p) {
    return p.child == c || p.parent == c;
  });
}

}  // namespace

DiceRatio s_dice_exact(const ConceptIndex::Entry& a,
                       const ConceptIndex::Entry& b) {
  DiceRatio best{0, 1};
  for (const auto& x : a.node_sets) {
    for (const auto& y : b.node_sets) {
      DiceRatio r{2 * intersection_size(x, y), x.size() + y.size()};
      if (r > best) best = r;
      if (best.is_one()) return best;
    }
  }
  return best;
}

DiceRatio s_dice_exact(const ConceptIndex& index, const ConceptId& c1,
                       const ConceptId& c2) {
  return s_dice_exact(index.at(c1), index.at(c2));
}

double s_dice(const ConceptIndex& index, const ConceptId& c1,
              const ConceptId& c2) {
  return s_dice_exact(index, c1, c2).value();
}

void check_floor(double floor) {
  if (!(floor >= 0.0 && floor <= 1.0)) {
    throw Error(ErrorCode::kFloorOutOfRange,
                "semantic match degree floor must be in [0, 1], got " +
                    std::to_string(floor));
  }
}

bool passes_floor(const DiceRatio& degree, double floor) {
  if (floor <= 0.0) return true;
  if (floor >= 1.0) return degree.is_one();
  return degree.value() > floor;
}

MatchSet matching_concepts(const ConceptIndex& index, const ConceptId& query,
                           double floor) {
  check_floor(floor);
  const auto& q = index.at(query);
  MatchSet out;
  for (const auto& entry : index.entries()) {
    DiceRatio r = s_dice_exact(q, entry);
    if (passes_floor(r, floor)) out.push_back({entry.concept_id, r, r.value()});
  }
  std::sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    return a.concept_id < b.concept_id;
  });
  return out;
}

DiceRatio brute_force_s_dice_exact(const PairList& pairs, const ConceptId& c1,
                                   const ConceptId& c2) {
  for (const auto* c : {&c1, &c2}) {
    if (!mentioned(pairs, *c)) throw Error::unknown_concept(c->uri());
  }
  DiceRatio best{0, 1};
  for (const auto& p1 : naive_paths(pairs, c1.uri())) {
    std::set<std::string> x(p1.begin(), p1.end());
    for (const auto& p2 : naive_paths(pairs, c2.uri())) {
      std::set<std::string> y(p2.begin(), p2.end());
      std::uint64_t common = 0;
      for (const auto& node : x) common += y.count(node);
      DiceRatio r{2 * common, x.size() + y.size()};
      if (r > best) best = r;
    }
  }
  return best;
}

double brute_force_s_dice(const PairList& pairs, const ConceptId& c1,
                          const ConceptId& c2) {
  return brute_force_s_dice_exact(pairs, c1, c2).value();
}

}  // namespace semspace
