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

#include "semspace/meta_model.h"

namespace semspace {

std::string_view to_string(MetaModel model) {
  return model == MetaModel::kRdfs ? "RDFS" : "WSML";
}

std::optional<MetaModel> parse_meta_model(std::string_view tag) {
  if (tag == "RDFS") return MetaModel::kRdfs;
  if (tag == "WSML") return MetaModel::kWsml;
  return std::nullopt;
}

}  // namespace semspace
