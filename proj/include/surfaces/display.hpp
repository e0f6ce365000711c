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

#ifndef SURFACES_DISPLAY_HPP_
#define SURFACES_DISPLAY_HPP_

#include <string>
#include <vector>

#include "surfaces/formula.hpp"

namespace surfaces {

// Human-readable rendering. Atoms with a ground IRI predicate print as
// binary relations named by the IRI's local name, and a negated
// existential conjunction with negated parts reads as an implication:
//
//   ¬∃s (learns(s, Physics) ∧ ¬reads(s, Newton))   ~~>   ∀s: learns(s, Physics) ⇒ reads(s, Newton)
std::string render_display(const Formula& f);

// One line per top-level conjunct.
std::vector<std::string> render_display_lines(const Formula& f);

std::string local_name(const std::string& iri);

}  // namespace surfaces

#endif  // SURFACES_DISPLAY_HPP_
