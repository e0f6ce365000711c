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

// Data model for RDF Surfaces: terms, triples, H-graphs and documents.

#ifndef SURFACES_MODEL_HPP_
#define SURFACES_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace surfaces {

inline constexpr const char* kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* kLogNs = "http://www.w3.org/2000/10/swap/log#";
inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr const char* kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr const char* kOnNegativeSurface =
    "http://www.w3.org/2000/10/swap/log#onNegativeSurface";

struct Iri {
  std::string value;
  auto operator<=>(const Iri&) const = default;
};

struct Literal {
  std::string lexical;
  std::string datatype;
  std::optional<std::string> language;
  auto operator<=>(const Literal&) const = default;
};

struct BlankNode {
  std::string label;
  auto operator<=>(const BlankNode&) const = default;
};

// A surface variable. Identity is the id alone; the hint is the source label.
struct Graffiti {
  std::uint64_t id = 0;
  std::optional<std::string> hint;

  bool operator==(const Graffiti& other) const { return id == other.id; }
  std::strong_ordering operator<=>(const Graffiti& other) const { return id <=> other.id; }
};

using Term = std::variant<Iri, Literal, BlankNode, Graffiti>;

Term make_iri(std::string value);
Term make_literal(std::string lexical, std::string datatype = kXsdString);
Term make_lang_literal(std::string lexical, std::string language);

inline bool is_graffiti(const Term& t) { return std::holds_alternative<Graffiti>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;
  SourceSpan span;

  bool operator==(const Triple& other) const {
    return subject == other.subject && predicate == other.predicate && object == other.object;
  }
};

enum class SurfaceKind : std::uint8_t { Positive, Negative };

// Heap cell with value semantics; lets HGraph nest inside its own contents.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  bool operator==(const Box& other) const { return *ptr_ == *other.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct HGraph;
using Element = std::variant<Triple, Box<HGraph>>;

// A typed surface, the graffiti declared on it, and what is written on it.
struct HGraph {
  SurfaceKind kind = SurfaceKind::Positive;
  std::vector<Graffiti> graffiti;
  std::vector<Element> contents;
  SourceSpan span;

  bool operator==(const HGraph& other) const {
    return kind == other.kind && graffiti == other.graffiti && contents == other.contents;
  }
};

using PrefixMap = std::map<std::string, std::string>;

struct Document {
  PrefixMap prefixes;
  std::optional<std::string> base;
  HGraph root;
  // Next id handed out by fresh_graffiti. Mutated only while a document is
  // being built; closed documents are read-only.
  std::uint64_t next_graffiti_id = 0;

  Graffiti fresh_graffiti(std::optional<std::string> hint = std::nullopt);

  bool operator==(const Document& other) const {
    return prefixes == other.prefixes && base == other.base && root == other.root;
  }
};

class ScopeError : public std::runtime_error {
 public:
  enum class Kind { DuplicateGraffitiDeclaration };
  ScopeError(Kind kind, std::string label, const std::string& message)
      : std::runtime_error(message), kind_(kind), label_(std::move(label)) {}
  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

 private:
  Kind kind_;
  std::string label_;
};

// Binds every blank node to the innermost enclosing graffiti declared under
// its label; undeclared labels become existentials on the root surface.
// Throws ScopeError when a label is declared twice along one nesting path.
Document close_blank_nodes(Document doc);

// Canonical alpha-renaming: graffiti lists ordered by first use, ids assigned
// depth-first from zero, unused root existentials dropped.
Document standardize(Document doc);

// Graffiti-safe union. Every graffiti of `second` is re-issued from `first`'s
// generator before the roots are combined.
Document merge(Document first, const Document& second);

// Visits every surface reachable from `root`, outermost first.
template <class F>
void for_each_surface(const HGraph& root, F&& visit) {
  visit(root);
  for (const auto& e : root.contents)
    if (const auto* g = std::get_if<Box<HGraph>>(&e)) for_each_surface(**g, visit);
}

template <class F>
void for_each_triple(const HGraph& root, F&& visit) {
  for (const auto& e : root.contents) {
    if (const auto* t = std::get_if<Triple>(&e))
      visit(*t);
    else
      for_each_triple(*std::get<Box<HGraph>>(e), visit);
  }
}

struct DocumentStats {
  std::size_t triples = 0;
  std::size_t surfaces = 0;  // excluding the root
  std::size_t graffiti = 0;
  std::size_t max_depth = 0;
};
DocumentStats stats(const Document& doc);

// Checks that no blank node remains, every graffiti occurrence has an
// enclosing declaration and no id is declared twice.
bool is_well_scoped(const Document& doc);

std::string term_to_string(const Term& t);

}  // namespace surfaces

#endif  // SURFACES_MODEL_HPP_
