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

#include "surfaces/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace surfaces {

Term make_iri(std::string value) { return Iri{std::move(value)}; }

Term make_literal(std::string lexical, std::string datatype) {
  return Literal{std::move(lexical), std::move(datatype), std::nullopt};
}

Term make_lang_literal(std::string lexical, std::string language) {
  return Literal{std::move(lexical), kRdfLangString, std::move(language)};
}

Graffiti Document::fresh_graffiti(std::optional<std::string> hint) {
  return Graffiti{next_graffiti_id++, std::move(hint)};
}

namespace {

template <class F>
void rewrite_terms(HGraph& g, F&& fn) {
  for (auto& e : g.contents) {
    if (auto* t = std::get_if<Triple>(&e)) {
      t->subject = fn(t->subject);
      t->predicate = fn(t->predicate);
      t->object = fn(t->object);
    } else {
      rewrite_terms(*std::get<Box<HGraph>>(e), fn);
    }
  }
}

class BlankNodeCloser {
 public:
  explicit BlankNodeCloser(Document& doc) : doc_(doc) {}

  void run() {
    visit(doc_.root);
    for (auto& g : appended_) doc_.root.graffiti.push_back(g);
  }

 private:
  void visit(HGraph& g) {
    for (std::size_t i = 0; i < g.graffiti.size(); ++i) {
      const auto& hint = g.graffiti[i].hint;
      if (!hint) continue;
      bool dup = std::any_of(g.graffiti.begin(), g.graffiti.begin() + i,
                             [&](const Graffiti& o) { return o.hint == hint; });
      for (const auto* scope : scopes_)
        dup = dup || std::any_of(scope->begin(), scope->end(),
                                 [&](const Graffiti& o) { return o.hint == hint; });
      if (dup)
        throw ScopeError(ScopeError::Kind::DuplicateGraffitiDeclaration, *hint,
                         "graffiti _:" + *hint + " declared twice along one nesting path");
    }
    scopes_.push_back(&g.graffiti);
    for (auto& e : g.contents) {
      if (auto* t = std::get_if<Triple>(&e)) {
        t->subject = bind(t->subject);
        t->predicate = bind(t->predicate);
        t->object = bind(t->object);
      } else {
        visit(*std::get<Box<HGraph>>(e));
      }
    }
    scopes_.pop_back();
  }

  Term bind(const Term& t) {
    const auto* b = std::get_if<BlankNode>(&t);
    if (!b) return t;
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      for (const auto& g : **it)
        if (g.hint == b->label) return g;
    auto found = undeclared_.find(b->label);
    if (found != undeclared_.end()) return found->second;
    Graffiti fresh = doc_.fresh_graffiti(b->label);
    undeclared_.emplace(b->label, fresh);
    appended_.push_back(fresh);
    return fresh;
  }

  Document& doc_;
  std::vector<const std::vector<Graffiti>*> scopes_;
  std::unordered_map<std::string, Graffiti> undeclared_;
  std::vector<Graffiti> appended_;
};

void collect_occurrences(const HGraph& g, std::vector<std::uint64_t>& order,
                         std::set<std::uint64_t>& seen) {
  auto note = [&](const Term& t) {
    if (const auto* gr = std::get_if<Graffiti>(&t))
      if (seen.insert(gr->id).second) order.push_back(gr->id);
  };
  for (const auto& e : g.contents) {
    if (const auto* t = std::get_if<Triple>(&e)) {
      note(t->subject);
      note(t->predicate);
      note(t->object);
    } else {
      collect_occurrences(*std::get<Box<HGraph>>(e), order, seen);
    }
  }
}

void order_by_first_use(HGraph& g) {
  std::vector<std::uint64_t> order;
  std::set<std::uint64_t> seen;
  collect_occurrences(g, order, seen);
  std::unordered_map<std::uint64_t, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
  auto key = [&](const Graffiti& gr) {
    auto it = rank.find(gr.id);
    return it == rank.end() ? order.size() : it->second;
  };
  std::stable_sort(g.graffiti.begin(), g.graffiti.end(),
                   [&](const Graffiti& a, const Graffiti& b) { return key(a) < key(b); });
  for (auto& e : g.contents)
    if (auto* nested = std::get_if<Box<HGraph>>(&e)) order_by_first_use(**nested);
}

void assign_ids(HGraph& g, std::unordered_map<std::uint64_t, std::uint64_t>& renumber,
                std::uint64_t& next) {
  for (auto& gr : g.graffiti) {
    renumber[gr.id] = next;
    gr.id = next++;
  }
  for (auto& e : g.contents)
    if (auto* nested = std::get_if<Box<HGraph>>(&e)) assign_ids(**nested, renumber, next);
}

}  // namespace

Document close_blank_nodes(Document doc) {
  BlankNodeCloser(doc).run();
  return doc;
}

Document standardize(Document doc) {
  std::vector<std::uint64_t> used;
  std::set<std::uint64_t> seen;
  collect_occurrences(doc.root, used, seen);
  std::erase_if(doc.root.graffiti, [&](const Graffiti& g) { return !seen.contains(g.id); });

  order_by_first_use(doc.root);

  std::unordered_map<std::uint64_t, std::uint64_t> renumber;
  std::uint64_t next = 0;
  assign_ids(doc.root, renumber, next);
  rewrite_terms(doc.root, [&](const Term& t) -> Term {
    if (const auto* gr = std::get_if<Graffiti>(&t)) {
      auto it = renumber.find(gr->id);
      if (it != renumber.end()) return Graffiti{it->second, gr->hint};
    }
    return t;
  });
  doc.next_graffiti_id = next;
  return doc;
}

Document merge(Document first, const Document& second) {
  HGraph incoming = second.root;
  std::unordered_map<std::uint64_t, Graffiti> reissued;
  auto reissue = [&](const Graffiti& g) {
    auto it = reissued.find(g.id);
    if (it != reissued.end()) return it->second;
    Graffiti fresh = first.fresh_graffiti(g.hint);
    reissued.emplace(g.id, fresh);
    return fresh;
  };
  // Declarations first so that ids follow declaration order.
  auto redeclare = [&](auto&& self, HGraph& g) -> void {
    for (auto& gr : g.graffiti) gr = reissue(gr);
    for (auto& e : g.contents)
      if (auto* nested = std::get_if<Box<HGraph>>(&e)) self(self, **nested);
  };
  redeclare(redeclare, incoming);
  rewrite_terms(incoming, [&](const Term& t) -> Term {
    if (const auto* gr = std::get_if<Graffiti>(&t)) return reissue(*gr);
    return t;
  });

  for (auto& gr : incoming.graffiti) first.root.graffiti.push_back(std::move(gr));
  for (auto& e : incoming.contents) first.root.contents.push_back(std::move(e));
  for (const auto& [label, ns] : second.prefixes) first.prefixes.emplace(label, ns);
  if (!first.base) first.base = second.base;
  return first;
}

DocumentStats stats(const Document& doc) {
  DocumentStats s;
  auto walk = [&](auto&& self, const HGraph& g, std::size_t depth) -> void {
    s.graffiti += g.graffiti.size();
    s.max_depth = std::max(s.max_depth, depth);
    for (const auto& e : g.contents) {
      if (std::holds_alternative<Triple>(e)) {
        ++s.triples;
      } else {
        ++s.surfaces;
        self(self, *std::get<Box<HGraph>>(e), depth + 1);
      }
    }
  };
  walk(walk, doc.root, 0);
  return s;
}

bool is_well_scoped(const Document& doc) {
  std::set<std::uint64_t> declared_anywhere;
  std::vector<std::set<std::uint64_t>> scopes;
  auto ok_term = [&](const Term& t) {
    if (is_blank(t)) return false;
    if (const auto* g = std::get_if<Graffiti>(&t))
      return std::any_of(scopes.begin(), scopes.end(),
                         [&](const auto& s) { return s.contains(g->id); });
    return true;
  };
  auto walk = [&](auto&& self, const HGraph& g) -> bool {
    std::set<std::uint64_t> here;
    for (const auto& gr : g.graffiti)
      if (!declared_anywhere.insert(gr.id).second) return false;
    for (const auto& gr : g.graffiti) here.insert(gr.id);
    scopes.push_back(std::move(here));
    for (const auto& e : g.contents) {
      if (const auto* t = std::get_if<Triple>(&e)) {
        if (!ok_term(t->subject) || !ok_term(t->predicate) || !ok_term(t->object)) return false;
      } else if (!self(self, *std::get<Box<HGraph>>(e))) {
        return false;
      }
    }
    scopes.pop_back();
    return true;
  };
  return doc.root.kind == SurfaceKind::Positive && walk(walk, doc.root);
}

std::string term_to_string(const Term& t) {
  struct Printer {
    std::string operator()(const Iri& i) const { return "<" + i.value + ">"; }
    std::string operator()(const Literal& l) const {
      std::string out = "\"" + l.lexical + "\"";
      if (l.language) return out + "@" + *l.language;
      return out + "^^<" + l.datatype + ">";
    }
    std::string operator()(const BlankNode& b) const { return "_:" + b.label; }
    std::string operator()(const Graffiti& g) const { return "_:g" + std::to_string(g.id); }
  };
  return std::visit(Printer{}, t);
}

}  // namespace surfaces
