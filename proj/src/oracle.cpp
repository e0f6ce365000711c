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

#include "surfaces/oracle.hpp"

#include <optional>
#include <stdexcept>

namespace surfaces::oracle {

Element FunctionTable::apply(const std::vector<Element>& args, std::size_t domain_size) const {
  std::size_t index = 0;
  for (Element a : args) index = index * domain_size + a;
  return values.at(index);
}

// -- two-valued evaluation ----------------------------------------------------

namespace {

Element eval_term(const FoTerm& t, const Interpretation& i, const Env& env) {
  switch (t.kind) {
    case FoTerm::Kind::Const: {
      auto it = i.const_map.find(t.constant);
      if (it == i.const_map.end()) throw UnboundSymbol("constant " + term_to_string(t.constant) + " is unmapped");
      return it->second;
    }
    case FoTerm::Kind::Var: {
      auto it = env.find(t.id);
      if (it == env.end()) throw UnboundSymbol("variable X" + std::to_string(t.id) + " is unbound");
      return it->second;
    }
    case FoTerm::Kind::Fn: {
      auto it = i.fn_maps.find(t.id);
      if (it == i.fn_maps.end() || it->second.arity != t.args.size())
        throw UnboundSymbol("function sk" + std::to_string(t.id) + " is unmapped");
      std::vector<Element> args;
      for (const auto& a : t.args) args.push_back(eval_term(a, i, env));
      return it->second.apply(args, i.domain_size);
    }
  }
  return 0;
}

bool eval_in(const Formula& f, const Interpretation& i, Env& env) {
  switch (f.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Atom:
      return i.triple_relation.contains({eval_term(f.atom.subject, i, env), eval_term(f.atom.predicate, i, env),
                                         eval_term(f.atom.object, i, env)});
    case Formula::Kind::Not: return !eval_in(f.body(), i, env);
    case Formula::Kind::And:
      for (const auto& c : f.children)
        if (!eval_in(c, i, env)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children)
        if (eval_in(c, i, env)) return true;
      return false;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool exists = f.kind == Formula::Kind::Exists;
      std::optional<Element> saved;
      if (auto it = env.find(f.var); it != env.end()) saved = it->second;
      bool result = !exists;
      for (Element e = 0; e < i.domain_size; ++e) {
        env[f.var] = e;
        if (eval_in(f.body(), i, env) == exists) {
          result = exists;
          break;
        }
      }
      if (saved)
        env[f.var] = *saved;
      else
        env.erase(f.var);
      return result;
    }
  }
  return false;
}

}  // namespace

bool eval(const Formula& f, const Interpretation& i, const Env& env) {
  Env scratch = env;
  return eval_in(f, i, scratch);
}

// -- bounded model search -----------------------------------------------------

namespace {

enum class Truth : std::int8_t { False, True, Unknown };

void collect_signature(const FoTerm& t, std::set<Term>& constants, std::map<SymbolId, std::size_t>& fns) {
  if (t.is_const()) constants.insert(t.constant);
  if (t.is_fn()) {
    auto [it, inserted] = fns.emplace(t.id, t.args.size());
    if (!inserted && it->second != t.args.size())
      throw std::invalid_argument("function symbol sk" + std::to_string(t.id) + " used with two arities");
  }
  for (const auto& a : t.args) collect_signature(a, constants, fns);
}

void collect_signature(const Formula& f, std::set<Term>& constants, std::map<SymbolId, std::size_t>& fns) {
  if (f.kind == Formula::Kind::Atom) {
    collect_signature(f.atom.subject, constants, fns);
    collect_signature(f.atom.predicate, constants, fns);
    collect_signature(f.atom.object, constants, fns);
  }
  for (const auto& c : f.children) collect_signature(c, constants, fns);
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

class ModelSearch {
 public:
  ModelSearch(const Formula& f, std::size_t n, const std::vector<Term>& constants,
              const std::map<SymbolId, std::size_t>& fns, std::uint64_t& nodes, std::uint64_t budget)
      : f_(f), n_(n), nodes_(nodes), budget_(budget), relation_(n * n * n, -1) {
    for (const auto& c : constants) const_order_.push_back(c);
    for (const auto& [id, arity] : fns) {
      fn_arity_[id] = arity;
      fn_cells_[id].assign(power(n, arity), -1);
    }
  }

  // Tries every constant assignment up to permutation of the domain.
  std::optional<Interpretation> run() {
    std::vector<Element> assignment;
    return assign_constants(assignment, 0);
  }

  std::optional<Interpretation> run_with(const std::vector<Element>& assignment) {
    set_constants(assignment);
    if (dfs()) return witness();
    return std::nullopt;
  }

 private:
  struct Cell {
    bool is_relation = true;
    std::size_t index = 0;
    SymbolId symbol = 0;
  };

  std::optional<Interpretation> assign_constants(std::vector<Element>& assignment, Element used) {
    if (assignment.size() == const_order_.size()) return run_with(assignment);
    Element limit = std::min<Element>(used + 1, static_cast<Element>(n_));
    for (Element e = 0; e < limit; ++e) {
      assignment.push_back(e);
      auto found = assign_constants(assignment, std::max<Element>(used, e + 1));
      assignment.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  void set_constants(const std::vector<Element>& assignment) {
    consts_.clear();
    for (std::size_t k = 0; k < const_order_.size(); ++k) consts_[const_order_[k]] = assignment[k];
  }

  bool dfs() {
    if (++nodes_ > budget_) throw SearchSpaceLimit("model search exceeded " + std::to_string(budget_) + " nodes");
    pending_.reset();
    Env env;
    Truth t = eval3(f_, env);
    if (t == Truth::True) return true;
    if (t == Truth::False) return false;
    Cell cell = *pending_;
    if (cell.is_relation) {
      for (std::int8_t v : {0, 1}) {
        relation_[cell.index] = v;
        if (dfs()) return true;
      }
      relation_[cell.index] = -1;
    } else {
      auto& table = fn_cells_[cell.symbol];
      for (std::size_t v = 0; v < n_; ++v) {
        table[cell.index] = static_cast<int>(v);
        if (dfs()) return true;
      }
      table[cell.index] = -1;
    }
    return false;
  }

  void note(Cell c) {
    if (!pending_) pending_ = c;
  }

  std::optional<Element> term3(const FoTerm& t, const Env& env) {
    switch (t.kind) {
      case FoTerm::Kind::Const: return consts_.at(t.constant);
      case FoTerm::Kind::Var: {
        auto it = env.find(t.id);
        if (it == env.end()) throw UnboundSymbol("variable X" + std::to_string(t.id) + " is free");
        return it->second;
      }
      case FoTerm::Kind::Fn: {
        std::size_t index = 0;
        for (const auto& a : t.args) {
          auto v = term3(a, env);
          if (!v) return std::nullopt;
          index = index * n_ + *v;
        }
        int value = fn_cells_[t.id][index];
        if (value < 0) {
          note(Cell{false, index, t.id});
          return std::nullopt;
        }
        return static_cast<Element>(value);
      }
    }
    return std::nullopt;
  }

  Truth eval3(const Formula& f, Env& env) {
    switch (f.kind) {
      case Formula::Kind::True: return Truth::True;
      case Formula::Kind::False: return Truth::False;
      case Formula::Kind::Atom: {
        auto s = term3(f.atom.subject, env);
        auto p = term3(f.atom.predicate, env);
        auto o = term3(f.atom.object, env);
        if (!s || !p || !o) return Truth::Unknown;
        std::size_t index = (*s * n_ + *p) * n_ + *o;
        if (relation_[index] < 0) {
          note(Cell{true, index, 0});
          return Truth::Unknown;
        }
        return relation_[index] ? Truth::True : Truth::False;
      }
      case Formula::Kind::Not: {
        Truth t = eval3(f.body(), env);
        return t == Truth::Unknown ? t : (t == Truth::True ? Truth::False : Truth::True);
      }
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        Truth zero = f.kind == Formula::Kind::And ? Truth::False : Truth::True;
        Truth result = f.kind == Formula::Kind::And ? Truth::True : Truth::False;
        for (const auto& c : f.children) {
          Truth t = eval3(c, env);
          if (t == zero) return zero;
          if (t == Truth::Unknown) result = Truth::Unknown;
        }
        return result;
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        Truth zero = f.kind == Formula::Kind::Forall ? Truth::False : Truth::True;
        Truth result = f.kind == Formula::Kind::Forall ? Truth::True : Truth::False;
        std::optional<Element> saved;
      if (auto it = env.find(f.var); it != env.end()) saved = it->second;
        for (Element e = 0; e < n_; ++e) {
          env[f.var] = e;
          Truth t = eval3(f.body(), env);
          if (t == zero) {
            result = zero;
            break;
          }
          if (t == Truth::Unknown) result = Truth::Unknown;
        }
        if (saved)
          env[f.var] = *saved;
        else
          env.erase(f.var);
        return result;
      }
    }
    return Truth::Unknown;
  }

  Interpretation witness() const {
    Interpretation i;
    i.domain_size = n_;
    i.const_map = consts_;
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t o = 0; o < n_; ++o)
          if (relation_[(s * n_ + p) * n_ + o] == 1)
            i.triple_relation.insert({static_cast<Element>(s), static_cast<Element>(p), static_cast<Element>(o)});
    for (const auto& [id, cells] : fn_cells_) {
      FunctionTable table;
      table.arity = fn_arity_.at(id);
      for (int v : cells) table.values.push_back(v < 0 ? 0 : static_cast<Element>(v));
      i.fn_maps.emplace(id, std::move(table));
    }
    return i;
  }

  const Formula& f_;
  std::size_t n_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<Term> const_order_;
  std::map<Term, Element> consts_;
  std::vector<std::int8_t> relation_;
  std::map<SymbolId, std::size_t> fn_arity_;
  std::map<SymbolId, std::vector<int>> fn_cells_;
  std::optional<Cell> pending_;
};

}  // namespace

SatResult brute_sat(const Formula& f, std::size_t max_domain, std::uint64_t node_budget) {
  if (!free_vars(f).empty()) throw UnboundSymbol("brute_sat expects a closed formula");
  std::set<Term> constant_set;
  std::map<SymbolId, std::size_t> fns;
  collect_signature(f, constant_set, fns);
  std::vector<Term> constants(constant_set.begin(), constant_set.end());
  std::uint64_t nodes = 0;

  if (is_ground(f)) {
    // Herbrand: distinct constants denote distinct elements.
    std::size_t n = std::max<std::size_t>(1, constants.size());
    std::vector<Element> identity;
    for (std::size_t k = 0; k < constants.size(); ++k) identity.push_back(static_cast<Element>(k));
    if (auto model = ModelSearch(f, n, constants, fns, nodes, node_budget).run_with(identity))
      return SatWitness{std::move(*model)};
    return NoModelUpTo{max_domain, true};
  }

  for (std::size_t n = 1; n <= max_domain; ++n)
    if (auto model = ModelSearch(f, n, constants, fns, nodes, node_budget).run())
      return SatWitness{std::move(*model)};
  return NoModelUpTo{max_domain, false};
}

bool equivalent_within(const Formula& f, const Formula& g, std::size_t max_domain, std::uint64_t node_budget) {
  Formula differ = Formula::make_or({Formula::make_and({f, Formula::make_not(g)}),
                                     Formula::make_and({Formula::make_not(f), g})});
  return !is_sat(brute_sat(differ, max_domain, node_budget));
}

Interpretation pad(const Interpretation& i) {
  const std::size_t n = i.domain_size;
  const auto extra = static_cast<Element>(n);
  Interpretation out;
  out.domain_size = n + 1;
  out.const_map = i.const_map;
  auto variants = [&](Element e) { return e == 0 ? std::vector<Element>{0, extra} : std::vector<Element>{e}; };
  for (const auto& [s, p, o] : i.triple_relation)
    for (Element s2 : variants(s))
      for (Element p2 : variants(p))
        for (Element o2 : variants(o)) out.triple_relation.insert({s2, p2, o2});
  for (const auto& [id, table] : i.fn_maps) {
    FunctionTable t;
    t.arity = table.arity;
    std::size_t cells = power(n + 1, table.arity);
    for (std::size_t index = 0; index < cells; ++index) {
      std::vector<Element> args(table.arity);
      std::size_t rest = index;
      for (std::size_t k = table.arity; k-- > 0;) {
        auto a = static_cast<Element>(rest % (n + 1));
        args[k] = a == extra ? 0 : a;
        rest /= n + 1;
      }
      t.values.push_back(table.apply(args, n));
    }
    out.fn_maps.emplace(id, std::move(t));
  }
  return out;
}

}  // namespace surfaces::oracle
