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

#include "amrinfer/corpus.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "amrinfer/penman.h"

namespace amrinfer {
namespace {

using Json = nlohmann::ordered_json;

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string required_text(const Json& obj, const char* field, std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end()) throw RecordError(line, std::string("missing field ") + field);
  if (!it->is_string()) {
    throw RecordError(line, std::string("field ") + field + " is not a string");
  }
  std::string s = it->get<std::string>();
  if (blank(s)) throw RecordError(line, std::string("field ") + field + " is empty");
  return s;
}

AmrGraph parse_field(const std::string& text, const char* field, std::size_t line) {
  try {
    return parse_penman(text);
  } catch (const PenmanError& e) {
    throw RecordError(line, std::string(field) + ": " + e.what());
  }
}

InferenceType type_field(const Json& v, const char* field, std::size_t line) {
  if (!v.is_string()) {
    throw RecordError(line, std::string("field ") + field + " is not a string");
  }
  try {
    return lookup_type(v.get<std::string>());
  } catch (const UnknownType& e) {
    throw RecordError(line, std::string(field) + ": " + e.what());
  }
}

ClassificationResult prediction_fields(const Json& obj, std::size_t line) {
  ClassificationResult r;
  r.type = type_field(obj.at("predicted_type"), "predicted_type", line);
  try {
    r.pivot = obj.value("pivot", 1);
    if (r.pivot != 1 && r.pivot != 2) throw RecordError(line, "pivot must be 1 or 2");
    if (auto it = obj.find("rule"); it != obj.end()) {
      auto rule = rule_from_name(it->get<std::string>());
      if (!rule) throw RecordError(line, "unknown rule " + it->get<std::string>());
      r.evidence.rule = *rule;
    }
    r.evidence.witnesses = obj.value("witnesses", std::vector<std::string>{});
    r.frame_insertion = obj.value("frame_insertion", false);
    r.delta_approximate = obj.value("delta_approximate", false);
  } catch (const Json::exception& e) {
    throw RecordError(line, std::string("annotation fields: ") + e.what());
  }
  return r;
}

CorpusRecord parse_record(const std::string& text, std::size_t line) {
  Json obj;
  try {
    obj = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw RecordError(line, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw RecordError(line, "record is not a JSON object");

  CorpusRecord r;
  r.id = required_text(obj, "id", line);
  r.p1_text = required_text(obj, "p1_text", line);
  r.p2_text = required_text(obj, "p2_text", line);
  r.c_text = required_text(obj, "c_text", line);
  r.p1_amr = required_text(obj, "p1_amr", line);
  r.p2_amr = required_text(obj, "p2_amr", line);
  r.c_amr = required_text(obj, "c_amr", line);
  r.p1_graph = parse_field(r.p1_amr, "p1_amr", line);
  r.p2_graph = parse_field(r.p2_amr, "p2_amr", line);
  r.c_graph = parse_field(r.c_amr, "c_amr", line);
  if (auto it = obj.find("gold_type"); it != obj.end() && !it->is_null()) {
    r.gold_type = type_field(*it, "gold_type", line);
  }
  if (obj.contains("predicted_type")) {
    r.prediction = prediction_fields(obj, line);
  } else if (auto it = obj.find("error"); it != obj.end()) {
    if (!it->is_string()) throw RecordError(line, "field error is not a string");
    r.error = it->get<std::string>();
  }
  return r;
}

std::string format_fixed(double v, bool sign) {
  char buf[32];
  std::snprintf(buf, sizeof buf, sign ? "%+.3f" : "%.3f", v);
  return buf;
}

std::size_t occurrences(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string_view::npos;
       pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

EntailmentTriple CorpusRecord::triple() const {
  return EntailmentTriple{Statement{p1_text, p1_graph}, Statement{p2_text, p2_graph},
                          Statement{c_text, c_graph}};
}

std::optional<InferenceType> CorpusRecord::effective_type() const {
  if (prediction) return prediction->type;
  return gold_type;
}

RecordError::RecordError(std::size_t line, std::string cause)
    : std::runtime_error("line " + std::to_string(line) + ": " + cause),
      line_(line),
      cause_(std::move(cause)) {}

LoadResult read_corpus(std::istream& in, LoadMode mode) {
  LoadResult out;
  std::unordered_set<std::string> ids;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (blank(text)) continue;
    try {
      CorpusRecord r = parse_record(text, line);
      if (!ids.insert(r.id).second) throw RecordError(line, "duplicate id " + r.id);
      out.records.push_back(std::move(r));
    } catch (const RecordError& e) {
      if (mode == LoadMode::kStrict) throw;
      out.errors.push_back(e);
    }
  }
  return out;
}

LoadResult load_corpus(const std::string& path, LoadMode mode) {
  std::ifstream in(path);
  if (!in) throw CorpusIoError("cannot open " + path);
  return read_corpus(in, mode);
}

std::string record_to_json_line(const CorpusRecord& r) {
  Json j;
  j["id"] = r.id;
  j["p1_text"] = r.p1_text;
  j["p2_text"] = r.p2_text;
  j["c_text"] = r.c_text;
  j["p1_amr"] = r.p1_amr;
  j["p2_amr"] = r.p2_amr;
  j["c_amr"] = r.c_amr;
  if (r.gold_type) j["gold_type"] = abbreviation(*r.gold_type);
  if (r.prediction) {
    const ClassificationResult& p = *r.prediction;
    j["predicted_type"] = abbreviation(p.type);
    j["pivot"] = p.pivot;
    j["rule"] = rule_name(p.evidence.rule);
    j["witnesses"] = p.evidence.witnesses;
    j["frame_insertion"] = p.frame_insertion;
    j["delta_approximate"] = p.delta_approximate;
  } else if (r.error) {
    j["error"] = *r.error;
  }
  return j.dump() + "\n";
}

void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const CorpusRecord& r : records) out << record_to_json_line(r);
}

void save_corpus(const std::string& path, const std::vector<CorpusRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusIoError("cannot write " + path);
  write_corpus(out, records);
  if (!out.flush()) throw CorpusIoError("write failed for " + path);
}

std::size_t AnnotationReport::count(InferenceType t) const {
  return counts[static_cast<std::size_t>(t)];
}

double AnnotationReport::fraction(InferenceType t) const {
  return total == 0 ? 0.0 : static_cast<double>(count(t)) / static_cast<double>(total);
}

AnnotationReport summarize(const std::vector<CorpusRecord>& records) {
  AnnotationReport rep;
  for (const CorpusRecord& r : records) {
    if (r.prediction) {
      ++rep.counts[static_cast<std::size_t>(r.prediction->type)];
      ++rep.total;
      if (r.prediction->delta_approximate) ++rep.approximate;
      if (r.gold_type) {
        ++rep.gold_compared;
        if (*r.gold_type == r.prediction->type) {
          ++rep.gold_matches;
        } else {
          rep.mismatches.push_back({r.id, *r.gold_type, r.prediction->type});
        }
      }
    } else if (r.error) {
      rep.failures.push_back({r.id, *r.error});
    }
  }
  return rep;
}

AnnotationOutcome annotate_corpus(std::vector<CorpusRecord> records, std::size_t jobs) {
  if (jobs == 0) throw std::invalid_argument("jobs must be at least 1");
  auto work = [&records](std::size_t i) {
    CorpusRecord& r = records[i];
    r.prediction.reset();
    r.error.reset();
    try {
      r.prediction = classify(r.triple());
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  };

  const std::size_t workers = std::min(jobs, records.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < records.size(); i = next++) work(i);
      });
    }
  }

  AnnotationOutcome out;
  out.report = summarize(records);
  out.records = std::move(records);
  return out;
}

StatsTable compute_stats(const AnnotationReport& report) {
  StatsTable t;
  t.total = report.total;
  t.failures = report.failures.size();
  t.gold_compared = report.gold_compared;
  t.gold_matches = report.gold_matches;
  t.approximate = report.approximate;
  for (InferenceType type : all_inference_types()) {
    StatsRow row;
    row.type = type;
    row.count = report.count(type);
    row.fraction = report.fraction(type);
    row.expected = expected_proportion(type);
    if (row.expected && report.total > 0) {
      row.delta = row.fraction - *row.expected;
      row.flagged = std::fabs(*row.delta) > kDeltaFlagThreshold;
    }
    t.rows.push_back(row);
  }
  return t;
}

std::string render_stats_text(const StatsTable& table) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%-14s %7s %9s %9s %8s\n", "type", "count",
                "fraction", "expected", "delta");
  out << line;
  bool any_flag = false;
  for (const StatsRow& r : table.rows) {
    std::string expected = r.expected ? format_fixed(*r.expected, false) : "-";
    std::string delta = r.delta ? format_fixed(*r.delta, true) : "-";
    std::snprintf(line, sizeof line, "%-14s %7zu %9s %9s %8s%s\n",
                  std::string(abbreviation(r.type)).c_str(), r.count,
                  format_fixed(r.fraction, false).c_str(), expected.c_str(),
                  delta.c_str(), r.flagged ? "  !" : "");
    out << line;
    any_flag |= r.flagged;
  }
  out << "total " << table.total << "\n";
  if (table.failures > 0) out << "failures " << table.failures << "\n";
  if (table.gold_compared > 0) {
    out << "gold matches " << table.gold_matches << "/" << table.gold_compared << "\n";
  }
  if (table.approximate > 0) out << "approximate deltas " << table.approximate << "\n";
  if (any_flag) out << "! |delta| > " << format_fixed(kDeltaFlagThreshold, false) << "\n";
  return out.str();
}

std::string render_stats_json(const StatsTable& table) {
  Json j;
  j["total"] = table.total;
  j["failures"] = table.failures;
  j["gold_compared"] = table.gold_compared;
  j["gold_matches"] = table.gold_matches;
  j["approximate"] = table.approximate;
  j["rows"] = Json::array();
  for (const StatsRow& r : table.rows) {
    Json row;
    row["type"] = abbreviation(r.type);
    row["display_name"] = display_name(r.type);
    row["count"] = r.count;
    row["fraction"] = r.fraction;
    row["expected"] = r.expected ? Json(*r.expected) : Json();
    row["delta"] = r.delta ? Json(*r.delta) : Json();
    row["flagged"] = r.flagged;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string_view mode_name(PromptMode m) {
  switch (m) {
    case PromptMode::kEP: return "EP";
    case PromptMode::kDP: return "DP";
    case PromptMode::kDE: return "DE";
    case PromptMode::kNone: return "NONE";
  }
  return "NONE";
}

PromptMode lookup_mode(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (PromptMode m : {PromptMode::kEP, PromptMode::kDP, PromptMode::kDE, PromptMode::kNone}) {
    if (mode_name(m) == upper) return m;
  }
  throw std::invalid_argument("unknown prompt mode '" + std::string(name) +
                              "' (expected ep, dp, de or none)");
}

std::vector<PromptRecord> emit_prompts(const std::vector<CorpusRecord>& records,
                                       PromptMode mode) {
  const std::string sep = " " + std::string(kSeparator) + " ";
  const std::string phrase(kTypePhrase);
  std::vector<PromptRecord> out;
  out.reserve(records.size());
  for (const CorpusRecord& r : records) {
    PromptRecord p;
    p.mode = mode;
    p.input = r.p1_text + sep + r.p2_text;
    p.target = r.c_text;
    if (mode != PromptMode::kNone) {
      auto type = r.effective_type();
      if (!type) throw MissingType("record " + r.id + " has no inference type");
      const std::string name(display_name(*type));
      switch (mode) {
        case PromptMode::kEP:
          p.input = phrase + name + sep + p.input;
          break;
        case PromptMode::kDP:
          p.target = std::string(kSeparator) + " " + phrase + name + ". " + r.c_text;
          break;
        case PromptMode::kDE:
          p.target = std::string(kSeparator) + " " + r.c_text + ". " + phrase + name;
          break;
        case PromptMode::kNone:
          break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool placement_holds(const PromptRecord& p) {
  const std::string dp_head = std::string(kSeparator) + " " + std::string(kTypePhrase);
  switch (p.mode) {
    case PromptMode::kEP:
      return p.input.starts_with(kTypePhrase) && occurrences(p.target, kTypePhrase) == 0;
    case PromptMode::kDP:
      return occurrences(p.target, kTypePhrase) == 1 && p.target.starts_with(dp_head) &&
             occurrences(p.input, kTypePhrase) == 0;
    case PromptMode::kDE:
      return occurrences(p.target, kTypePhrase) == 1 &&
             p.target.starts_with(std::string(kSeparator) + " ") &&
             !p.target.starts_with(dp_head) && occurrences(p.input, kTypePhrase) == 0;
    case PromptMode::kNone:
      return occurrences(p.input, kTypePhrase) == 0 &&
             occurrences(p.target, kTypePhrase) == 0;
  }
  return false;
}

std::string prompt_to_json_line(const PromptRecord& p) {
  Json j;
  j["input"] = p.input;
  j["target"] = p.target;
  j["mode"] = mode_name(p.mode);
  return j.dump() + "\n";
}

void write_prompts(std::ostream& out, const std::vector<PromptRecord>& prompts) {
  for (const PromptRecord& p : prompts) out << prompt_to_json_line(p);
}

}  // namespace amrinfer
