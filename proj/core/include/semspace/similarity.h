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
#include <cstdint>
#include <vector>

#include "semspace/concept.h"
#include "semspace/concept_index.h"

namespace semspace {

// Exact Dice value 2|X ∩ Y| / (|X| + |Y|), kept as an unreduced fraction so
// threshold and equality tests never see rounding.
struct DiceRatio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool is_one() const noexcept { return numerator == denominator; }
  bool is_zero() const noexcept { return numerator == 0; }

  friend bool operator==(const DiceRatio& a, const DiceRatio& b) noexcept {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
  friend std::strong_ordering operator<=>(const DiceRatio& a,
                                          const DiceRatio& b) noexcept {
    return a.numerator * b.denominator <=> b.numerator * a.denominator;
  }
};

// Similarity of two concepts: the best Dice value over every pairing of a
// path of one with a path of the other. Each path's node set includes the
// concept itself. Throws UnknownConcept.
DiceRatio s_dice_exact(const ConceptIndex& index, const ConceptId& c1,
                       const ConceptId& c2);
DiceRatio s_dice_exact(const ConceptIndex::Entry& a,
                       const ConceptIndex::Entry& b);
double s_dice(const ConceptIndex& index, const ConceptId& c1,
              const ConceptId& c2);

// Throws FloorOutOfRange unless 0 <= floor <= 1.
void check_floor(double floor);

// floor 0 admits everything, floor 1 only exact identity, anything in
// between requires degree > floor.
bool passes_floor(const DiceRatio& degree, double floor);

struct Match {
  ConceptId concept_id;
  DiceRatio ratio;
  double degree;
};

// Degree descending, ties by uri ascending.
using MatchSet = std::vector<Match>;

MatchSet matching_concepts(const ConceptIndex& index, const ConceptId& query,
                           double floor);

// Reference implementation straight from the pair list: naive recursive path
// enumeration and set intersection, no index. Used as a test oracle.
DiceRatio brute_force_s_dice_exact(const PairList& pairs, const ConceptId& c1,
                                   const ConceptId& c2);
double brute_force_s_dice(const PairList& pairs, const ConceptId& c1,
                          const ConceptId& c2);

}  // namespace semspace
