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


#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "surfaces/display.hpp"
#include "surfaces/model.hpp"
#include "surfaces/oracle.hpp"
#include "surfaces/parser.hpp"
#include "surfaces/prover.hpp"
#include "surfaces/tptp.hpp"
#include "surfaces/translate.hpp"

namespace n3s {

namespace {

using nlohmann::ordered_json;
using namespace surfaces;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& file, const ParseError& e)
      : std::runtime_error(file + ":" + std::to_string(e.span().line) + ":" + std::to_string(e.span().column) +
                           ": " + to_string(e.kind()) + ": " + e.detail()),
        file_(file),
        kind_(e.kind()),
        span_(e.span()),
        detail_(e.detail()) {}

  ordered_json to_json() const {
    return {{"file", file_},          {"kind", to_string(kind_)},   {"line", span_.line},
            {"column", span_.column}, {"offset", span_.start},      {"message", detail_}};
  }

 private:
  std::string file_;
  ParseError::Kind kind_;
  SourceSpan span_;
  std::string detail_;
};

struct Options {
  std::vector<std::string> files;
  bool json = false;
  bool timing = false;

  std::string emit;
  std::string format = "display";
  bool oracle = false;
  std::size_t oracle_domain = 4;
  std::string proof_path;
  std::string goal;
  std::string pattern;

  std::size_t max_clauses = Limits{}.max_clauses;
  double max_seconds = 10.0;
  std::size_t max_depth = Limits{}.max_term_depth;

  Limits limits() const {
    if (max_clauses == 0 || max_depth == 0 || !(max_seconds > 0))
      throw UsageError("--max-clauses, --max-seconds and --max-depth must be positive");
    Limits l;
    l.max_clauses = max_clauses;
    l.max_time = std::chrono::milliseconds(std::llround(max_seconds * 1000.0));
    l.max_term_depth = max_depth;
    if (l.max_time.count() == 0) l.max_time = std::chrono::milliseconds(1);
    return l;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Document load(const std::string& path, std::uint64_t first_id = 0) {
  ParseOptions options;
  options.first_graffiti_id = first_id;
  try {
    return parse(read_file(path), options);
  } catch (const ParseError& e) {
    throw InputError(path, e);
  }
}

Document load_all(const std::vector<std::string>& files) {
  Document doc = load(files.front());
  for (std::size_t k = 1; k < files.size(); ++k) doc = merge(std::move(doc), load(files[k]));
  return doc;
}

std::string var_name(const Graffiti& g) { return g.hint ? *g.hint : "g" + std::to_string(g.id); }

std::string value_text(const FoTerm& t) {
  if (t.is_const()) {
    if (const auto* iri = std::get_if<Iri>(&t.constant)) return iri->value;
    return term_to_string(t.constant);
  }
  return to_string(t);
}

ordered_json stats_json(const Verdict& v) {
  return {{"clauses_generated", v.stats.clauses_generated},
          {"given", v.stats.given},
          {"subsumed", v.stats.subsumed},
          {"proof_length", v.refuted() ? v.proof().size() : 0}};
}

ordered_json proof_json(const std::vector<ProofStep>& proof) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : proof)
    steps.push_back({{"id", s.id}, {"rule", to_string(s.rule)}, {"parents", s.parents}, {"clause", to_string(s.clause)}});
  return {{"steps", steps}};
}

void write_proof(const std::string& path, const Verdict& v) {
  if (path.empty()) return;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << (v.refuted() ? proof_json(v.proof()) : ordered_json{{"steps", ordered_json::array()}}).dump(2) << "\n";
}

std::string limit_text(const Verdict& v) {
  return std::string(to_string(std::get<ResourceOut>(v.outcome).limit)) + " limit reached";
}

void print_stats(std::ostream& out, const Verdict& v) {
  out << "clauses generated: " << v.stats.clauses_generated << ", given: " << v.stats.given
      << ", subsumed: " << v.stats.subsumed;
  if (v.refuted()) out << ", proof length: " << v.proof().size();
  out << "\n";
}

// -- commands -------------------------------------------------------------------

int cmd_parse(const Options& o, ordered_json& report, std::ostream& out) {
  Document doc = load_all(o.files);
  DocumentStats s = stats(doc);
  report["stats"] = {{"triples", s.triples}, {"surfaces", s.surfaces}, {"graffiti", s.graffiti},
                     {"max_depth", s.max_depth}};
  std::string canonical;
  if (o.emit == "canonical") {
    canonical = serialize(standardize(doc));
    report["canonical"] = canonical;
  }
  if (!o.json) {
    out << "ok: " << s.triples << " triples, " << s.surfaces << " surfaces, " << s.graffiti << " graffiti, depth "
        << s.max_depth << "\n";
    out << canonical;
  }
  return kExitOk;
}

int cmd_translate(const Options& o, ordered_json& report, std::ostream& out) {
  Formula f = translate(load_all(o.files));
  std::string text;
  if (o.format == "tptp") {
    text = to_tptp(f, "document") + "\n";
    if (auto problem = check_tptp_fof(text)) throw std::logic_error("generated TPTP is malformed: " + *problem);
  } else {
    for (const auto& line : render_display_lines(f)) text += line + "\n";
  }
  report["format"] = o.format;
  report["output"] = text;
  if (!o.json) out << text;
  return kExitOk;
}

int check_with_oracle(const Options& o, const Document& doc, ordered_json& report, std::ostream& out) {
  report["engine"] = "oracle";
  oracle::SatResult result;
  try {
    result = oracle::brute_sat(translate(doc), o.oracle_domain);
  } catch (const oracle::SearchSpaceLimit&) {
    report["verdict"] = "unknown";
    report["reason"] = "search space limit";
    if (!o.json) out << "unknown: oracle search space limit\n";
    return kExitUnknown;
  }
  if (const auto* w = std::get_if<oracle::SatWitness>(&result)) {
    report["verdict"] = "consistent";
    report["model_size"] = w->model.domain_size;
    if (!o.json) out << "consistent: model of size " << w->model.domain_size << "\n";
    return kExitOk;
  }
  const auto& none = std::get<oracle::NoModelUpTo>(result);
  if (none.definitive) {
    report["verdict"] = "inconsistent";
    if (!o.json) out << "inconsistent\n";
    return kExitNegative;
  }
  report["verdict"] = "unknown";
  report["reason"] = "no model up to size " + std::to_string(none.max_domain);
  if (!o.json) out << "unknown: no model up to size " << none.max_domain << "\n";
  return kExitUnknown;
}

int cmd_check(const Options& o, ordered_json& report, std::ostream& out) {
  Document doc = load_all(o.files);
  if (o.oracle) return check_with_oracle(o, doc, report, out);
  report["engine"] = "prover";
  Verdict v = check_consistency(doc, o.limits());
  write_proof(o.proof_path, v);
  report["stats"] = stats_json(v);
  if (v.refuted()) {
    report["verdict"] = "inconsistent";
    if (!o.json) out << "inconsistent\n";
    if (!o.json) print_stats(out, v);
    return kExitNegative;
  }
  if (v.saturated()) {
    report["verdict"] = "consistent";
    if (!o.json) out << "consistent\n";
    if (!o.json) print_stats(out, v);
    return kExitOk;
  }
  report["verdict"] = "unknown";
  report["reason"] = limit_text(v);
  if (!o.json) out << "unknown: " << limit_text(v) << "\n";
  return kExitUnknown;
}

int cmd_prove(const Options& o, ordered_json& report, std::ostream& out) {
  Document axioms = load_all(o.files);
  Document goal = load(o.goal, axioms.next_graffiti_id);
  report["goal"] = o.goal;
  Verdict v = prove(axioms, goal, o.limits());
  write_proof(o.proof_path, v);
  report["stats"] = stats_json(v);
  int code = kExitUnknown;
  std::string verdict = "unknown";
  if (v.refuted()) {
    verdict = "entailed";
    code = kExitOk;
  } else if (v.saturated()) {
    verdict = "not-entailed";
    code = kExitNegative;
  } else {
    report["reason"] = limit_text(v);
  }
  report["verdict"] = verdict;
  if (!o.json) {
    out << verdict;
    if (code == kExitUnknown) out << ": " << limit_text(v);
    out << "\n";
  }
  return code;
}

int cmd_query(const Options& o, ordered_json& report, std::ostream& out) {
  Document axioms = load_all(o.files);
  Document pattern = load(o.pattern, axioms.next_graffiti_id);
  report["pattern"] = o.pattern;
  QueryResult r;
  try {
    r = query(axioms, pattern.root, o.limits());
  } catch (const UnsupportedQueryShape& e) {
    throw UsageError(o.pattern + ": " + e.what());
  }
  ordered_json answers = ordered_json::array();
  for (const auto& answer : r.answers) {
    ordered_json row = ordered_json::object();
    std::string line;
    for (const auto& g : pattern.root.graffiti) {
      std::string value = value_text(answer.at(g.id));
      row[var_name(g)] = value;
      line += (line.empty() ? "" : " ") + var_name(g) + "=" + value;
    }
    answers.push_back(row);
    if (!o.json) out << (line.empty() ? "yes" : line) << "\n";
  }
  report["answers"] = answers;
  report["stats"] = stats_json(r.verdict);
  std::string status = r.verdict.refuted() ? "refuted" : r.verdict.saturated() ? "saturated" : "resource-out";
  report["status"] = status;
  if (r.verdict.resource_out()) report["reason"] = limit_text(r.verdict);
  if (!r.answers.empty()) return kExitOk;
  if (!o.json) out << (r.verdict.resource_out() ? "unknown: " + limit_text(r.verdict) : "no answers") << "\n";
  return r.verdict.resource_out() ? kExitUnknown : kExitNegative;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "Print a JSON report instead of text");
  cmd->add_flag("--timing", o.timing, "Include wall time in the JSON report");
}

void add_limit_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-clauses", o.max_clauses, "Stop after this many kept clauses")->capture_default_str();
  cmd->add_option("--max-seconds", o.max_seconds, "Wall-clock budget per run")->capture_default_str();
  cmd->add_option("--max-depth", o.max_depth, "Discard clauses with deeper terms")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reasoner for RDF Surfaces documents", "n3s"};
  app.require_subcommand(1);
  Options o;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and validate documents");
  parse_cmd->add_option("files", o.files, "Input .n3s files")->required();
  parse_cmd->add_option("--emit", o.emit, "Print the document in the given form")
      ->check(CLI::IsMember({"canonical"}));
  add_output_flags(parse_cmd, o);

  auto* translate_cmd = app.add_subcommand("translate", "Print the first-order translation");
  translate_cmd->add_option("files", o.files, "Input .n3s files")->required();
  translate_cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"display", "tptp"}))
      ->capture_default_str();
  add_output_flags(translate_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Decide whether the documents are consistent");
  check_cmd->add_option("files", o.files, "Input .n3s files")->required();
  check_cmd->add_flag("--oracle", o.oracle, "Use bounded model search instead of the prover");
  check_cmd->add_option("--oracle-domain", o.oracle_domain, "Largest domain tried by --oracle")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  check_cmd->add_option("--proof", o.proof_path, "Write the refutation as JSON to this file");
  add_limit_flags(check_cmd, o);
  add_output_flags(check_cmd, o);

  auto* prove_cmd = app.add_subcommand("prove", "Decide whether the axioms entail a goal");
  prove_cmd->add_option("files", o.files, "Axiom .n3s files")->required();
  prove_cmd->add_option("--goal", o.goal, "Goal .n3s file")->required();
  prove_cmd->add_option("--proof", o.proof_path, "Write the refutation as JSON to this file");
  add_limit_flags(prove_cmd, o);
  add_output_flags(prove_cmd, o);

  auto* query_cmd = app.add_subcommand("query", "Find bindings for a triple pattern");
  query_cmd->add_option("files", o.files, "Axiom .n3s files")->required();
  query_cmd->add_option("--pattern", o.pattern, "Pattern .n3s file; its blank nodes are the answer variables")
      ->required();
  add_limit_flags(query_cmd, o);
  add_output_flags(query_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  ordered_json report;
  report["command"] = cmd->get_name();
  report["inputs"] = o.files;

  const auto start = Clock::now();
  int code = kExitOk;
  try {
    if (cmd == parse_cmd) code = cmd_parse(o, report, out);
    if (cmd == translate_cmd) code = cmd_translate(o, report, out);
    if (cmd == check_cmd) code = cmd_check(o, report, out);
    if (cmd == prove_cmd) code = cmd_prove(o, report, out);
    if (cmd == query_cmd) code = cmd_query(o, report, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    report["error"] = e.to_json();
    code = kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    report["error"] = {{"message", e.what()}};
    code = kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    report["error"] = {{"message", e.what()}};
    code = kExitUnknown;
  }

  if (o.json) {
    if (o.timing)
      report["wall_time_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    report["exit_code"] = code;
    out << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace n3s
