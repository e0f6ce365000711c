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

// TPTP FOF export.
//
// Symbol mangling:
//   IRI            -> 'iri'                      e.g. 'http://example.org/ns#a'
//   literal        -> '"lexical"^^<datatype>'    or '"lexical"@lang'
//   inside quotes  ' -> %27   \ -> %5C   % -> %25   control bytes -> %XX
//   variable       -> hint with an upper-case first letter, else X<id>
//   Skolem symbol  -> sk<id>
// The predicate is always triple/3.

#ifndef SURFACES_TPTP_HPP_
#define SURFACES_TPTP_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "surfaces/formula.hpp"

namespace surfaces {

std::string to_tptp(const Formula& f, std::string_view name, std::string_view role = "axiom");

std::string tptp_quote(std::string_view text);

// Grammar check for a single `fof(name, role, formula).` statement. Returns
// an error message, or nullopt if the text is well formed.
std::optional<std::string> check_tptp_fof(std::string_view text);

}  // namespace surfaces

#endif  // SURFACES_TPTP_HPP_
