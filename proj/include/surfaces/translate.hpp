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

// From surfaces to first-order logic, and on to clause normal form.
//
// A surface with graffiti g1..gn and contents C1..Ck becomes
//
//     Q( ?g1 .. ?gn : T(C1) & .. & T(Ck) )
//
// where Q is the identity on a positive surface and negation on a negative
// one. Universal graffiti therefore only appear after nnf() pushes the
// negation inwards.

#ifndef SURFACES_TRANSLATE_HPP_
#define SURFACES_TRANSLATE_HPP_

#include <cstddef>
#include <stdexcept>

#include "surfaces/formula.hpp"
#include "surfaces/model.hpp"

namespace surfaces {

Formula translate(const Document& doc);
Formula translate(const HGraph& surface);

FoTerm to_fo_term(const Term& t);

Formula nnf(const Formula& f);

// Renames binders so that no two quantifiers bind the same variable and no
// binder shadows a free variable.
Formula standardize_apart(const Formula& f);

// Replaces every existential by a fresh Skolem function of the enclosing
// universals. Symbol ids start above every variable id in `f`.
Formula skolemize(const Formula& f);

class ClauseBlowupLimit : public std::runtime_error {
 public:
  explicit ClauseBlowupLimit(std::size_t limit)
      : std::runtime_error("clause normal form exceeds " + std::to_string(limit) + " clauses"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

inline constexpr std::size_t kDefaultMaxClauses = 1'000'000;

// CNF by distribution. Expects a skolemized formula in NNF; universal
// quantifiers are dropped. Tautologies are removed.
ClauseSet clausify(const Formula& f, std::size_t max_clauses = kDefaultMaxClauses);

// nnf, standardize_apart, skolemize and clausify in sequence.
ClauseSet to_clauses(const Formula& f, std::size_t max_clauses = kDefaultMaxClauses);

}  // namespace surfaces

#endif  // SURFACES_TRANSLATE_HPP_
