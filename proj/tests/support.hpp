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


// Seeded generators shared by the unit, property and acceptance tests.

#ifndef SURFACES_TESTS_SUPPORT_HPP_
#define SURFACES_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "surfaces/formula.hpp"
#include "surfaces/model.hpp"

namespace surfaces::testing {

inline const std::string kEx = "http://example.org/ns#";

inline Term ex(const std::string& local) { return make_iri(kEx + local); }
inline FoTerm cx(const std::string& local) { return FoTerm::make_const(ex(local)); }
inline FoTerm vx(VarId v) { return FoTerm::make_var(v); }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::filesystem::path corpus_path(const std::string& relative) {
  return std::filesystem::path(N3S_CORPUS_DIR) / relative;
}

struct DocShape {
  std::size_t max_triples = 6;
  std::size_t iris = 4;
  std::size_t max_depth = 3;
  std::size_t max_surfaces = 4;
  std::size_t max_graffiti = 0;
};

// Random closed documents. Every surface below the root is negative; graffiti
// occur only where declared.
class DocumentGenerator {
 public:
  DocumentGenerator(std::uint64_t seed, DocShape shape) : rng_(seed), shape_(shape) {}

  Document next() {
    Document doc;
    doc.prefixes[""] = kEx;
    doc.prefixes["log"] = kLogNs;
    triples_left_ = std::max<std::size_t>(1, pick(shape_.max_triples));
    surfaces_left_ = shape_.max_surfaces;
    graffiti_left_ = shape_.max_graffiti;
    std::vector<Graffiti> scope;
    doc.root = surface(doc, SurfaceKind::Positive, 0, scope);
    return doc;
  }

 private:
  std::size_t pick(std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  Term term(const std::vector<Graffiti>& scope) {
    if (!scope.empty() && coin(0.45)) return scope[pick(scope.size() - 1)];
    return ex("e" + std::to_string(pick(shape_.iris - 1)));
  }

  HGraph surface(Document& doc, SurfaceKind kind, std::size_t depth, std::vector<Graffiti>& scope) {
    HGraph g;
    g.kind = kind;
    std::size_t declared = graffiti_left_ > 0 && coin(0.6) ? 1 + pick(std::min<std::size_t>(1, graffiti_left_ - 1)) : 0;
    graffiti_left_ -= declared;
    for (std::size_t k = 0; k < declared; ++k) {
      g.graffiti.push_back(doc.fresh_graffiti("v" + std::to_string(doc.next_graffiti_id)));
      scope.push_back(g.graffiti.back());
    }
    std::size_t elements = 1 + pick(2);
    for (std::size_t k = 0; k < elements; ++k) {
      if (surfaces_left_ > 0 && depth < shape_.max_depth && coin(0.4)) {
        --surfaces_left_;
        g.contents.emplace_back(Box<HGraph>(surface(doc, SurfaceKind::Negative, depth + 1, scope)));
      } else if (triples_left_ > 0) {
        --triples_left_;
        g.contents.emplace_back(Triple{term(scope), term(scope), term(scope), {}});
      }
    }
    scope.resize(scope.size() - declared);
    return g;
  }

  std::mt19937_64 rng_;
  DocShape shape_;
  std::size_t triples_left_ = 0;
  std::size_t surfaces_left_ = 0;
  std::size_t graffiti_left_ = 0;
};

// Random first-order terms over constants e0..e2, variables base..base+3 and
// function symbols 100 (arity 1) and 101 (arity 2).
class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed) : rng_(seed) {}

  FoTerm term(std::size_t depth, VarId base) {
    std::size_t choice = std::uniform_int_distribution<std::size_t>(0, depth == 0 ? 1 : 3)(rng_);
    if (choice == 0) return cx("e" + std::to_string(small(2)));
    if (choice == 1) return vx(base + small(3));
    if (choice == 2) return FoTerm::make_fn(100, {term(depth - 1, base)});
    return FoTerm::make_fn(101, {term(depth - 1, base), term(depth - 1, base)});
  }

  Atom atom(std::size_t depth, VarId base) { return {term(depth, base), cx("p"), term(depth, base)}; }

  std::size_t small(std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace surfaces::testing

#endif  // SURFACES_TESTS_SUPPORT_HPP_
