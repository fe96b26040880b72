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

#include "semspace/path_key.h"

namespace semspace {

PathKey PathKey::encode(std::span<const std::uint32_t> codes) {
  Integer value = 0;
  for (std::uint32_t code : codes) {
    value <<= 32;
    value += code;
  }
  return PathKey(std::move(value));
}

HashPath PathKey::decode(std::size_t length) const {
  HashPath codes(length);
  Integer rest = value_;
  const Integer mask = 0xFFFFFFFFu;
  for (std::size_t i = length; i-- > 0;) {
    codes[i] = static_cast<std::uint32_t>(rest & mask);
    rest >>= 32;
  }
  return codes;
}

}  // namespace semspace
