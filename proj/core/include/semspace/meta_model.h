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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace semspace {

enum class MetaModel { kRdfs, kWsml };

inline constexpr std::array<MetaModel, 2> kMetaModels{MetaModel::kRdfs,
                                                      MetaModel::kWsml};

std::string_view to_string(MetaModel model);
// Accepts exactly "RDFS" or "WSML".
std::optional<MetaModel> parse_meta_model(std::string_view tag);

constexpr std::size_t slot(MetaModel model) {
  return static_cast<std::size_t>(model);
}

}  // namespace semspace
