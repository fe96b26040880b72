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

#include <cstdint>
#include <string_view>

namespace semspace {

// Polynomial string hash s[0]*31^(n-1) + ... + s[n-1] over UTF-16 code
// units, wrapping in signed 32-bit arithmetic. Bit-compatible with
// java.lang.String#hashCode. Input is UTF-8; malformed sequences hash as
// U+FFFD.
std::int32_t string_hash31(std::string_view utf8);

// |h| as an unsigned value; INT32_MIN maps to 2^31 instead of overflowing.
constexpr std::uint32_t hash_magnitude(std::int32_t h) noexcept {
  return h < 0 ? static_cast<std::uint32_t>(0) - static_cast<std::uint32_t>(h)
               : static_cast<std::uint32_t>(h);
}

inline std::uint32_t concept_code(std::string_view uri) {
  return hash_magnitude(string_hash31(uri));
}

}  // namespace semspace
