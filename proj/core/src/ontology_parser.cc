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
#include "semspace/ontology_parser.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semspace/error.h"

namespace semspace {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Calls fn(line_number, line) for every line, with any trailing '\r' removed.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(number, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

enum class TermKind { kIri, kBlank, kLiteral };

struct Term {
  TermKind kind;
  std::string value;
};

// Minimal N-Triples term scanner. Advances `pos`; nullopt on bad syntax.
std::optional<Term> scan_term(std::string_view line, std::size_t& pos) {
  while (pos < line.size() && is_space(line[pos])) ++pos;
  if (pos >= line.size()) return std::nullopt;
  char c = line[pos];
  if (c == '<') {
    auto close = line.find('>', pos + 1);
    if (close == std::string_view::npos) return std::nullopt;
    Term t{TermKind::kIri, std::string(line.substr(pos + 1, close - pos - 1))};
    pos = close + 1;
    return t;
  }
  if (c == '_' && pos + 1 < line.size() && line[pos + 1] == ':') {
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) ++pos;
    return Term{TermKind::kBlank, std::string(line.substr(start, pos - start))};
  }
  if (c == '"') {
    std::size_t i = pos + 1;
    for (; i < line.size(); ++i) {
      if (line[i] == '\\') {
        ++i;
      } else if (line[i] == '"') {
        break;
      }
    }
    if (i >= line.size()) return std::nullopt;
    Term t{TermKind::kLiteral, std::string(line.substr(pos + 1, i - pos - 1))};
    pos = i + 1;
    if (pos < line.size() && line[pos] == '@') {
      while (pos < line.size() && !is_space(line[pos]) && line[pos] != '.') ++pos;
    } else if (line.substr(pos).starts_with("^^<")) {
      auto close = line.find('>', pos + 3);
      if (close == std::string_view::npos) return std::nullopt;
      pos = close + 1;
    }
    return t;
  }
  return std::nullopt;
}

}  // namespace

OntologyFormat parse_ontology_format(std::string_view name) {
  if (name == "pairs") return OntologyFormat::kPairs;
  if (name == "ntriples") return OntologyFormat::kNTriples;
  throw Error(ErrorCode::kMalformedLine,
              "unknown ontology format: " + std::string(name),
              std::string(name));
}

std::string_view to_string(OntologyFormat format) {
  return format == OntologyFormat::kPairs ? "pairs" : "ntriples";
}

PairList parse_pairs(std::string_view text) {
  PairList out;
  for_each_line(text, [&](std::size_t number, std::string_view raw) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') return;
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.size() != 2) {
      throw Error::malformed_line(
          number, "expected 2 tokens, got " + std::to_string(tokens.size()));
    }
    out.add(ConceptId(std::string(tokens[0])), ConceptId(std::string(tokens[1])));
  });
  return out;
}

PairList parse_ntriples_subclass(std::string_view text) {
  PairList out;
  for_each_line(text, [&](std::size_t number, std::string_view raw) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') return;
    std::size_t pos = 0;
    Term terms[3];
    for (auto& term : terms) {
      auto t = scan_term(line, pos);
      if (!t) throw Error::malformed_line(number, "bad N-Triples term");
      term = std::move(*t);
    }
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos >= line.size() || line[pos] != '.') {
      throw Error::malformed_line(number, "missing ' .' terminator");
    }
    std::string_view rest = trim(line.substr(pos + 1));
    if (!rest.empty() && rest.front() != '#') {
      throw Error::malformed_line(number, "trailing content after ' .'");
    }
    if (terms[0].kind != TermKind::kIri || terms[1].kind != TermKind::kIri ||
        terms[2].kind != TermKind::kIri) {
      return;
    }
    if (terms[1].value != kRdfsSubClassOf) return;
    if (!ConceptId::is_valid(terms[0].value) ||
        !ConceptId::is_valid(terms[2].value)) {
      throw Error::malformed_line(number, "IRI is empty or has whitespace");
    }
    out.add(ConceptId(std::move(terms[0].value)),
            ConceptId(std::move(terms[2].value)));
  });
  return out;
}

PairList parse_ontology(std::string_view text, OntologyFormat format) {
  return format == OntologyFormat::kPairs ? parse_pairs(text)
                                          : parse_ntriples_subclass(text);
}

PairList load_ontology_file(const std::string& path, OntologyFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open ontology file: " + path, path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ontology(buf.str(), format);
}

}  // namespace semspace
