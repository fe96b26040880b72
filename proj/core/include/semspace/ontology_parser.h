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

#include <string_view>

#include "semspace/concept.h"

namespace semspace {

inline constexpr std::string_view kRdfsSubClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";

enum class OntologyFormat { kPairs, kNTriples };

// "pairs" / "ntriples". Throws Error(kMalformedLine) on anything else.
OntologyFormat parse_ontology_format(std::string_view name);
std::string_view to_string(OntologyFormat format);

// One `child parent` pair per line. '#' starts a comment line, blank lines
// and CRLF endings are accepted.
PairList parse_pairs(std::string_view text);

// Line-oriented N-Triples; keeps only rdfs:subClassOf triples whose subject
// and object are IRIs.
PairList parse_ntriples_subclass(std::string_view text);

PairList parse_ontology(std::string_view text, OntologyFormat format);

// Reads a whole file; throws Error(kIo) when it cannot be opened.
PairList load_ontology_file(const std::string& path, OntologyFormat format);

}  // namespace semspace
