// Copyright 2026 The amrinfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amrinfer/cli.h"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amrinfer/classifier.h"
#include "amrinfer/corpus.h"
#include "amrinfer/penman.h"
#include "amrinfer/taxonomy.h"
#include "amrinfer/transform.h"

namespace amrinfer {
namespace {

// Thrown for bad flag values that CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<PenmanEntry> read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusIoError("cannot open " + path);
  return read_penman_document(in, path);
}

// A Penman file holding exactly one graph, with its sentence if annotated.
Statement read_statement(const std::string& path) {
  std::vector<PenmanEntry> entries = read_document(path);
  if (entries.size() != 1) {
    throw CorpusIoError(path + ": expected one graph, found " +
                        std::to_string(entries.size()));
  }
  PenmanEntry& e = entries.front();
  std::string text = e.sentence ? *e.sentence : linearize(e.graph);
  return Statement{std::move(text), std::move(e.graph)};
}

// Writes to the file if one was given, else to `out`.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CorpusIoError("cannot write " + path);
  write(f);
  if (!f.flush()) throw CorpusIoError("write failed for " + path);
}

LoadResult load_reporting(const std::string& path, bool strict, std::ostream& err) {
  LoadResult loaded = load_corpus(path, strict ? LoadMode::kStrict : LoadMode::kLenient);
  for (const RecordError& e : loaded.errors) {
    err << path << ": skipped " << e.what() << "\n";
  }
  return loaded;
}

std::string result_json(const ClassificationResult& r) {
  nlohmann::ordered_json j;
  j["type"] = abbreviation(r.type);
  j["display_name"] = display_name(r.type);
  j["pivot"] = r.pivot;
  j["rule"] = rule_name(r.evidence.rule);
  j["witnesses"] = r.evidence.witnesses;
  j["frame_insertion"] = r.frame_insertion;
  j["delta_approximate"] = r.delta_approximate;
  return j.dump(2) + "\n";
}

void print_result(const ClassificationResult& r, std::ostream& out) {
  out << abbreviation(r.type) << "\n";
  out << "rule: " << rule_name(r.evidence.rule) << "\n";
  out << "pivot: p" << r.pivot << "\n";
  if (!r.evidence.witnesses.empty()) {
    out << "witnesses:";
    for (const std::string& w : r.evidence.witnesses) out << " " << w;
    out << "\n";
  }
  if (r.frame_insertion) out << "frame insertion\n";
  if (r.delta_approximate) out << "note: graph difference is approximate\n";
}

std::pair<NodeId, NodeId> parse_site(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == s.size() ||
      s.find(':', colon + 1) != std::string::npos) {
    throw UsageError("--site expects P1VAR:P2VAR, got '" + s + "'");
  }
  return {s.substr(0, colon), s.substr(colon + 1)};
}

InferenceType parse_type_flag(const std::string& s) {
  try {
    return lookup_type(s);
  } catch (const UnknownType& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inference-type tooling for AMR entailment triples", "amrinfer"};
  app.require_subcommand(1);
  std::function<void()> action;

  // parse
  std::string parse_input;
  auto* parse = app.add_subcommand("parse", "Validate Penman graphs and print them canonically");
  parse->add_option("input", parse_input, "Penman file")->required();
  parse->callback([&] {
    action = [&] {
      for (const PenmanEntry& e : read_document(parse_input)) {
        out << serialize_penman(e.graph) << "\n";
      }
    };
  });

  // classify
  std::string c_p1, c_p2, c_c, c_format = "text";
  auto* cls = app.add_subcommand("classify", "Label a triple with its inference type");
  cls->add_option("--p1", c_p1, "First premise (Penman file)")->required();
  cls->add_option("--p2", c_p2, "Second premise (Penman file)")->required();
  cls->add_option("--c", c_c, "Conclusion (Penman file)")->required();
  cls->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}));
  cls->callback([&] {
    action = [&] {
      EntailmentTriple t{read_statement(c_p1), read_statement(c_p2), read_statement(c_c)};
      ClassificationResult r = classify(t);
      if (c_format == "json") {
        out << result_json(r);
      } else {
        print_result(r, out);
      }
    };
  });

  // transform
  std::string t_p1, t_p2, t_type, t_site;
  auto* tr = app.add_subcommand("transform", "Derive a conclusion from two premises");
  tr->add_option("--p1", t_p1, "First premise (Penman file)")->required();
  tr->add_option("--p2", t_p2, "Second premise (Penman file)")->required();
  tr->add_option("--type", t_type, "Inference type abbreviation")->required();
  tr->add_option("--site", t_site, "Bridge as P1VAR:P2VAR");
  tr->callback([&] {
    action = [&] {
      TransformRequest req;
      req.type = parse_type_flag(t_type);
      if (!t_site.empty()) req.site_hint = parse_site(t_site);
      req.p1 = read_statement(t_p1).graph;
      req.p2 = read_statement(t_p2).graph;
      TransformResult r = transform(req);
      if (r.heuristic) err << "note: " << abbreviation(req.type) << " output is heuristic\n";
      out << serialize_penman(r.graph) << "\n";
    };
  });

  // annotate
  std::string a_in, a_out;
  std::size_t a_jobs = 1;
  bool a_strict = false;
  auto* ann = app.add_subcommand("annotate", "Classify every record of a corpus file");
  ann->add_option("--input", a_in, "Record file")->required();
  ann->add_option("--output", a_out, "Annotated record file (default stdout)");
  ann->add_option("--jobs", a_jobs, "Worker threads")->check(CLI::Range(1, 1024));
  ann->add_flag("--strict", a_strict, "Stop at the first bad record");
  ann->callback([&] {
    action = [&] {
      LoadResult loaded = load_reporting(a_in, a_strict, err);
      AnnotationOutcome res = annotate_corpus(std::move(loaded.records), a_jobs);
      emit(a_out, out, [&](std::ostream& o) { write_corpus(o, res.records); });
      err << "annotated " << res.report.total << " records";
      if (!res.report.failures.empty()) err << ", " << res.report.failures.size() << " failed";
      if (!loaded.errors.empty()) err << ", " << loaded.errors.size() << " skipped";
      err << "\n";
      for (const RecordFailure& f : res.report.failures) {
        err << f.id << ": " << f.message << "\n";
      }
    };
  });

  // stats
  std::string s_in, s_format = "text";
  std::size_t s_jobs = 1;
  auto* st = app.add_subcommand("stats", "Type distribution of a corpus file");
  st->add_option("--input", s_in, "Record file; unannotated records are classified")
      ->required();
  st->add_option("--format", s_format)->check(CLI::IsMember({"text", "json"}));
  st->add_option("--jobs", s_jobs, "Worker threads")->check(CLI::Range(1, 1024));
  st->callback([&] {
    action = [&] {
      LoadResult loaded = load_reporting(s_in, false, err);
      std::vector<CorpusRecord>& recs = loaded.records;
      bool pending = std::any_of(recs.begin(), recs.end(), [](const CorpusRecord& r) {
        return !r.prediction && !r.error;
      });
      if (pending) recs = annotate_corpus(std::move(recs), s_jobs).records;
      StatsTable table = compute_stats(summarize(recs));
      out << (s_format == "json" ? render_stats_json(table) : render_stats_text(table));
    };
  });

  // emit-prompts
  std::string e_in, e_out, e_mode;
  auto* ep = app.add_subcommand("emit-prompts", "Write type-conditioned prompt records");
  ep->add_option("--input", e_in, "Annotated (or gold-labelled) record file")->required();
  ep->add_option("--mode", e_mode, "ep, dp, de or none")->required();
  ep->add_option("--output", e_out, "Prompt file (default stdout)");
  ep->callback([&] {
    action = [&] {
      PromptMode mode;
      try {
        mode = lookup_mode(e_mode);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      LoadResult loaded = load_reporting(e_in, false, err);
      std::vector<PromptRecord> prompts = emit_prompts(loaded.records, mode);
      emit(e_out, out, [&](std::ostream& o) { write_prompts(o, prompts); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace amrinfer
