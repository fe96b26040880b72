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
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semspace {

// Per-node hash magnitudes of one concept path, topmost ancestor first.
using HashPath = std::vector<std::uint32_t>;

// A whole HashPath packed into one integer: each code is a base-2^32 digit,
// most significant first. Injective for a fixed path length, so the key
// plus the path length recovers the codes.
class PathKey {
 public:
  using Integer = boost::multiprecision::cpp_int;

  PathKey() = default;
  explicit PathKey(Integer value) : value_(std::move(value)) {}

  static PathKey encode(std::span<const std::uint32_t> codes);

  // Low `length` digits, most significant first.
  HashPath decode(std::size_t length) const;

  const Integer& value() const noexcept { return value_; }
  std::string to_string() const { return value_.str(); }

  friend bool operator==(const PathKey&, const PathKey&) = default;

 private:
  Integer value_;
};

}  // namespace semspace
