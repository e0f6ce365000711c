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

#include <string>

#include "surfaces/parser.hpp"

namespace surfaces {

namespace {

bool is_simple_local(std::string_view local) {
  if (local.empty()) return true;
  auto ok = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-';
  };
  if (local.front() == '-' || local.back() == '.') return false;
  for (char c : local)
    if (!ok(c) && c != '.') return false;
  return true;
}

class Writer {
 public:
  explicit Writer(const Document& doc) : doc_(doc) {}

  std::string run() {
    if (doc_.base) out_ += "@base <" + *doc_.base + "> .\n";
    for (const auto& [label, ns] : doc_.prefixes) out_ += "@prefix " + label + ": <" + ns + "> .\n";
    if (!doc_.base && doc_.prefixes.empty()) {
      if (doc_.root.contents.empty()) return out_;
    } else if (!doc_.root.contents.empty()) {
      out_ += "\n";
    }
    contents(doc_.root, 0);
    return out_;
  }

 private:
  void contents(const HGraph& g, std::size_t indent) {
    for (const auto& e : g.contents) {
      out_.append(indent, ' ');
      if (const auto* t = std::get_if<Triple>(&e)) {
        out_ += term(t->subject) + " " + predicate(t->predicate) + " " + term(t->object) + " .\n";
        continue;
      }
      const HGraph& nested = *std::get<Box<HGraph>>(e);
      out_ += "(";
      for (std::size_t i = 0; i < nested.graffiti.size(); ++i) {
        if (i) out_ += " ";
        out_ += "_:g" + std::to_string(nested.graffiti[i].id);
      }
      out_ += ") " + iri(kOnNegativeSurface) + " {";
      if (nested.contents.empty()) {
        out_ += "} .\n";
        continue;
      }
      out_ += "\n";
      contents(nested, indent + 4);
      out_.append(indent, ' ');
      out_ += "} .\n";
    }
  }

  std::string predicate(const Term& t) const {
    if (const auto* i = std::get_if<Iri>(&t); i && i->value == kRdfType) return "a";
    return term(t);
  }

  std::string iri(const std::string& value) const {
    const std::string* best_label = nullptr;
    std::size_t best_len = 0;
    for (const auto& [label, ns] : doc_.prefixes) {
      if (ns.size() >= best_len && value.size() >= ns.size() && value.compare(0, ns.size(), ns) == 0 &&
          is_simple_local(std::string_view(value).substr(ns.size()))) {
        best_label = &label;
        best_len = ns.size();
      }
    }
    if (best_label) return *best_label + ":" + value.substr(best_len);
    return "<" + value + ">";
  }

  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
      }
    }
    return out + "\"";
  }

  std::string term(const Term& t) const {
    if (const auto* i = std::get_if<Iri>(&t)) return iri(i->value);
    if (const auto* l = std::get_if<Literal>(&t)) {
      if (l->language) return quote(l->lexical) + "@" + *l->language;
      if (l->datatype == kXsdString) return quote(l->lexical);
      return quote(l->lexical) + "^^" + iri(l->datatype);
    }
    if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label;
    return "_:g" + std::to_string(std::get<Graffiti>(t).id);
  }

  const Document& doc_;
  std::string out_;
};

}  // namespace

std::string serialize(const Document& doc) { return Writer(doc).run(); }

}  // namespace surfaces
