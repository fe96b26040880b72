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

#include <cmath>
#include <limits>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "semspace/error.h"
#include "test_support.h"

namespace semspace {
namespace {

using testing::swing;

class SwingSimilarity : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    index_ = new ConceptIndex(build_concept_index(testing::swing_pairs()));
  }
  static void TearDownTestSuite() {
    delete index_;
    index_ = nullptr;
  }
  static ConceptIndex* index_;
};

ConceptIndex* SwingSimilarity::index_ = nullptr;

struct Golden {
  const char* concept_name;
  std::uint64_t num;
  std::uint64_t den;
};

const Golden kFrogGolden[] = {
    {"Organism", 1, 3},     {"Plant", 2, 7},     {"Animal", 4, 7},
    {"Invertebrate", 1, 2}, {"Vertebrate", 3, 4}, {"Arthropod", 4, 9},
    {"Bird", 2, 3},         {"Amphibian", 8, 9}, {"Reptile", 2, 3},
    {"Fish", 2, 3},         {"Mammal", 2, 3},    {"Snake", 3, 5},
    {"Frog", 1, 1},
};

TEST_F(SwingSimilarity, FrogGoldenValues) {
  for (const auto& g : kFrogGolden) {
    DiceRatio r = s_dice_exact(*index_, swing("Frog"), swing(g.concept_name));
    EXPECT_EQ(r, (DiceRatio{g.num, g.den})) << g.concept_name;
    EXPECT_NEAR(s_dice(*index_, swing("Frog"), swing(g.concept_name)),
                static_cast<double>(g.num) / static_cast<double>(g.den), 1e-12);
  }
}

TEST_F(SwingSimilarity, DisjointFragmentsScoreZero) {
  for (const char* c : {"Community", "INSEECODE", "Identifier",
                        "SpatialReference", "ConsumptionEntity"}) {
    EXPECT_TRUE(s_dice_exact(*index_, swing("Frog"), swing(c)).is_zero()) << c;
  }
}

TEST_F(SwingSimilarity, SymmetricBoundedAndReflexive) {
  const auto& names = testing::swing_concepts();
  for (const auto& a : names) {
    EXPECT_TRUE(s_dice_exact(*index_, swing(a), swing(a)).is_one()) << a;
    for (const auto& b : names) {
      double ab = s_dice(*index_, swing(a), swing(b));
      EXPECT_EQ(ab, s_dice(*index_, swing(b), swing(a))) << a << " " << b;
      EXPECT_GE(ab, 0.0);
      EXPECT_LE(ab, 1.0);
      if (a != b) {
        EXPECT_LT(ab, 1.0) << a << " " << b;
      }
    }
  }
}

TEST_F(SwingSimilarity, AgreesWithBruteForce) {
  const auto pairs = testing::swing_pairs();
  for (const auto& a : testing::swing_concepts()) {
    for (const auto& b : testing::swing_concepts()) {
      EXPECT_EQ(s_dice_exact(*index_, swing(a), swing(b)),
                brute_force_s_dice_exact(pairs, swing(a), swing(b)))
          << a << " " << b;
    }
  }
}

TEST_F(SwingSimilarity, UnknownConceptThrows) {
  EXPECT_THROW(s_dice(*index_, swing("Frog"), ConceptId("a:Nope")), Error);
}

std::set<std::string> match_names(const MatchSet& m) {
  std::set<std::string> out;
  for (const auto& x : m) {
    out.insert(x.concept_id.uri().substr(testing::kSwingNs.size()));
  }
  return out;
}

TEST_F(SwingSimilarity, MatchingConceptsAtInteriorFloor) {
  auto m = matching_concepts(*index_, swing("Frog"), 0.5);
  EXPECT_EQ(match_names(m),
            (std::set<std::string>{"Animal", "Vertebrate", "Bird", "Amphibian",
                                   "Reptile", "Fish", "Mammal", "Snake",
                                   "Frog"}));
  for (std::size_t i = 1; i < m.size(); ++i) {
    EXPECT_GE(m[i - 1].degree, m[i].degree);
  }
  EXPECT_EQ(m.front().concept_id, swing("Frog"));
}

TEST_F(SwingSimilarity, MatchingConceptsAtEndpoints) {
  EXPECT_EQ(match_names(matching_concepts(*index_, swing("Frog"), 1.0)),
            std::set<std::string>{"Frog"});
  EXPECT_EQ(matching_concepts(*index_, swing("Frog"), 0.0).size(),
            index_->size());
}

TEST_F(SwingSimilarity, MatchingCountIsMonotoneInFloor) {
  for (const auto& q : testing::swing_concepts()) {
    std::size_t prev = std::numeric_limits<std::size_t>::max();
    for (int f = 0; f <= 100; ++f) {
      std::size_t n = matching_concepts(*index_, swing(q), f / 100.0).size();
      EXPECT_LE(n, prev) << q << " floor " << f;
      prev = n;
    }
  }
}

TEST(Floor, RejectsOutOfRange) {
  check_floor(0.0);
  check_floor(1.0);
  for (double bad : {-0.01, 1.5, std::nan("")}) {
    try {
      check_floor(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kFloorOutOfRange);
    }
  }
}

TEST(Floor, PredicateSemantics) {
  EXPECT_TRUE(passes_floor({0, 1}, 0.0));
  EXPECT_TRUE(passes_floor({1, 1}, 1.0));
  EXPECT_FALSE(passes_floor({8, 9}, 1.0));
  EXPECT_FALSE(passes_floor({1, 2}, 0.5));
  EXPECT_TRUE(passes_floor({4, 7}, 0.5));
}

TEST(DiceRatio, ComparesByValue) {
  EXPECT_EQ((DiceRatio{2, 4}), (DiceRatio{1, 2}));
  EXPECT_LT((DiceRatio{1, 3}), (DiceRatio{1, 2}));
  EXPECT_TRUE((DiceRatio{3, 3}).is_one());
}

class RandomDagSimilarity : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomDagSimilarity, IndexedEqualsBruteForce) {
  auto dag = testing::make_random_dag(GetParam() * 7919, 60, 150);
  auto pairs = dag.pairs();
  auto index = build_concept_index(pairs);
  for (const auto& a : index.entries()) {
    for (const auto& b : index.entries()) {
      DiceRatio fast = s_dice_exact(a, b);
      ASSERT_EQ(fast, brute_force_s_dice_exact(pairs, a.concept_id, b.concept_id))
          << a.concept_id.uri() << " " << b.concept_id.uri();
      ASSERT_EQ(fast, s_dice_exact(b, a));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomDagSimilarity,
                         ::testing::Range<std::uint64_t>(1, 21));

}  // namespace
}  // namespace semspace
