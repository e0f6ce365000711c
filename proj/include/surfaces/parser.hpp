// Copyright 2026 The n3s Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reader and writer for N3S, the Notation3 subset used to write surfaces:
//
//   (_:S) log:onNegativeSurface {
//       _:S :learns :Physics .
//       () log:onNegativeSurface { _:S :reads :Newton } .
//   } .
//
// Lists are accepted only as the subject of a surface triple and quoted
// graphs only as its object.

#ifndef SURFACES_PARSER_HPP_
#define SURFACES_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "surfaces/model.hpp"

namespace surfaces {

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    UnexpectedToken,
    UnknownPrefix,
    BadIri,
    BadLiteral,
    UnclosedGraph,
    NonListSubjectForSurface,
    DuplicateGraffitiDeclaration,
    NestingTooDeep,
  };

  ParseError(Kind kind, SourceSpan span, const std::string& message);

  Kind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  SourceSpan span_;
  std::string detail_;
};

const char* to_string(ParseError::Kind kind);

struct ParseOptions {
  std::size_t max_nesting = 128;
  // First id issued to graffiti of the parsed document.
  std::uint64_t first_graffiti_id = 0;
  // Bindings in effect before the first directive.
  PrefixMap initial_prefixes{};
};

// Parses an N3S document and closes its blank nodes. Throws ParseError.
Document parse(std::string_view text, const ParseOptions& options = {});

// Writes a closed document back as N3S. Graffiti are rendered `_:g<id>`.
std::string serialize(const Document& doc);

// Expands `prefix:local`. Throws ParseError(UnknownPrefix) when unbound.
std::string expand(std::string_view prefixed_name, const PrefixMap& prefixes);

}  // namespace surfaces

#endif  // SURFACES_PARSER_HPP_
