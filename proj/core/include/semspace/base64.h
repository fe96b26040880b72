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

#include <optional>
#include <string>
#include <string_view>

namespace semspace::base64 {

// Standard alphabet with '=' padding.
std::string encode(std::string_view bytes);

// Strict: rejects bad characters, bad length, misplaced padding and
// non-zero trailing bits.
std::optional<std::string> decode(std::string_view text);

}  // namespace semspace::base64
