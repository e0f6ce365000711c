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

// Finite-interpretation semantics: Tarskian evaluation and bounded model
// search. Used as ground truth for the translator and the prover, so it
// shares nothing with either beyond the Formula type.

#ifndef SURFACES_ORACLE_HPP_
#define SURFACES_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "surfaces/formula.hpp"

namespace surfaces::oracle {

using Element = std::uint32_t;

struct FunctionTable {
  std::size_t arity = 0;
  std::vector<Element> values;  // indexed by the arguments in base domain_size

  Element apply(const std::vector<Element>& args, std::size_t domain_size) const;
};

struct Interpretation {
  std::size_t domain_size = 1;
  std::map<Term, Element> const_map;
  std::set<std::array<Element, 3>> triple_relation;
  std::map<SymbolId, FunctionTable> fn_maps;
};

using Env = std::map<VarId, Element>;

class UnboundSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchSpaceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool eval(const Formula& f, const Interpretation& i, const Env& env = {});

struct SatWitness {
  Interpretation model;
};

struct NoModelUpTo {
  std::size_t max_domain = 0;
  // True when the bound is irrelevant: ground formulas are decided on their
  // Herbrand interpretation.
  bool definitive = false;
};

using SatResult = std::variant<SatWitness, NoModelUpTo>;

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

// Searches interpretations of size 1..max_domain (all constant assignments
// up to domain permutation, all triple relations, all Skolem tables). Cells
// are enumerated lazily: a branch is cut once the formula's truth value no
// longer depends on the unassigned cells.
SatResult brute_sat(const Formula& f, std::size_t max_domain = 4,
                    std::uint64_t node_budget = kDefaultNodeBudget);

inline bool is_sat(const SatResult& r) { return std::holds_alternative<SatWitness>(r); }

// True iff f and g agree on every interpretation of size <= max_domain.
bool equivalent_within(const Formula& f, const Formula& g, std::size_t max_domain,
                       std::uint64_t node_budget = kDefaultNodeBudget);

// Adds one element that behaves exactly like element 0.
Interpretation pad(const Interpretation& i);

}  // namespace surfaces::oracle

#endif  // SURFACES_ORACLE_HPP_
