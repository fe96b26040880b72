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

#include "semspace/string_hash.h"

#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "semspace/path_key.h"
#include "test_support.h"

namespace semspace {
namespace {

using testing::direct_hash_oracle;

struct HashCase {
  const char* utf8;
  const char16_t* utf16;
  std::int32_t expected;
};

// Expected values were computed once with an arbitrary-precision script
// and frozen here.
const HashCase kFrozen[] = {
    {"", u"", 0},
    {"a", u"a", 97},
    {"b", u"b", 98},
    {"ab", u"ab", 3105},
    {"abc", u"abc", 96354},
    {"Aa", u"Aa", 2112},
    {"BB", u"BB", 2112},
    {"hello", u"hello", 99162322},
    {"Hello, World!", u"Hello, World!", 1498789909},
    {"polygenelubricants", u"polygenelubricants", -2147483647 - 1},
    {"GydZG_", u"GydZG_", -2147483647 - 1},
    {"DESIGNING WORKHOUSES", u"DESIGNING WORKHOUSES", -2147483647 - 1},
    {"0123456789", u"0123456789", 1584875013},
    {"Frog", u"Frog", 2198468},
    {"http://swing.uni-muenster.de/core/Swing/Frog",
     u"http://swing.uni-muenster.de/core/Swing/Frog", 2075826631},
    {"http://swing.uni-muenster.de/core/Swing/Organism",
     u"http://swing.uni-muenster.de/core/Swing/Organism", 517814645},
    {"http://swing.uni-muenster.de/core/Swing/Animal",
     u"http://swing.uni-muenster.de/core/Swing/Animal", 1857557343},
    {"http://swing.uni-muenster.de/core/Swing/Vertebrate",
     u"http://swing.uni-muenster.de/core/Swing/Vertebrate", 1459725137},
    {"http://swing.uni-muenster.de/core/Swing/Amphibian",
     u"http://swing.uni-muenster.de/core/Swing/Amphibian", -2124006986},
    {"http://swing.uni-muenster.de/core/Swing/Community",
     u"http://swing.uni-muenster.de/core/Swing/Community", -466252890},
    {"http://www.w3.org/2000/01/rdf-schema#subClassOf",
     u"http://www.w3.org/2000/01/rdf-schema#subClassOf", 1167244807},
    {"caf\xc3\xa9", u"café", 3045921},
    {"\xe6\x97\xa5\xe6\x9c\xac\xe8\xaa\x9e", u"日本語", 25921943},
    {"\xf0\x9f\x90\xb8 frog", u"\U0001F438 frog", -1467611895},
    {"\xf0\x90\x8d\x88", u"\U00010348", 1771336},
};

TEST(StringHash, MatchesFrozenVector) {
  for (const auto& c : kFrozen) {
    EXPECT_EQ(string_hash31(c.utf8), c.expected) << c.utf8;
  }
}

TEST(StringHash, FrozenVectorAgreesWithDirectFormula) {
  for (const auto& c : kFrozen) {
    EXPECT_EQ(direct_hash_oracle(c.utf16), c.expected) << c.utf8;
  }
}

TEST(StringHash, RandomAsciiAgreesWithDirectFormula) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 64);
  std::uniform_int_distribution<int> ch(0x20, 0x7e);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    std::u16string u;
    for (int k = len(rng); k > 0; --k) {
      char c = static_cast<char>(ch(rng));
      s.push_back(c);
      u.push_back(static_cast<char16_t>(c));
    }
    ASSERT_EQ(string_hash31(s), direct_hash_oracle(u)) << s;
  }
}

TEST(StringHash, MalformedUtf8HashesAsReplacementCharacter) {
  EXPECT_EQ(string_hash31("\xff"), direct_hash_oracle(u"�"));
  EXPECT_EQ(string_hash31("a\xc3"), direct_hash_oracle(u"a�"));
}

TEST(HashMagnitude, HandlesSignAndMinimum) {
  EXPECT_EQ(hash_magnitude(0), 0u);
  EXPECT_EQ(hash_magnitude(97), 97u);
  EXPECT_EQ(hash_magnitude(-466252890), 466252890u);
  EXPECT_EQ(hash_magnitude(std::numeric_limits<std::int32_t>::min()),
            2147483648u);
  EXPECT_EQ(concept_code("polygenelubricants"), 2147483648u);
}

TEST(PathKey, EncodesBase2To32Digits) {
  const std::uint32_t two_three[] = {2, 3};
  EXPECT_EQ(PathKey::encode(two_three).to_string(), "8589934595");
  EXPECT_EQ(PathKey::encode({}).to_string(), "0");
  const std::uint32_t single[] = {97};
  EXPECT_EQ(PathKey::encode(single).to_string(), "97");
}

TEST(PathKey, FrogPathKeyMatchesExactArithmetic) {
  const std::uint32_t codes[] = {517814645, 1857557343, 1459725137,
                                 2124006986, 2075826631};
  EXPECT_EQ(PathKey::encode(codes).to_string(),
            "176203193174096348602829031418536086351533218247");
}

TEST(PathKey, DecodeInvertsEncode) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> digit;
  std::uniform_int_distribution<int> len(1, 12);
  for (int i = 0; i < 300; ++i) {
    HashPath codes(len(rng));
    for (auto& d : codes) d = digit(rng);
    PathKey key = PathKey::encode(codes);
    ASSERT_EQ(key.decode(codes.size()), codes);
  }
}

}  // namespace
}  // namespace semspace
