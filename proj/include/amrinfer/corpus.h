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

// Record files, batch annotation, distribution statistics and prompt
// emission.
//
// A record file holds one JSON object per line:
//
//   {"id": "...", "p1_text": "...", "p2_text": "...", "c_text": "...",
//    "p1_amr": "(...)", "p2_amr": "(...)", "c_amr": "(...)",
//    "gold_type": "ARG-SUB"}
//
// gold_type is optional. Annotated files add "predicted_type", "pivot",
// "rule", "witnesses", "frame_insertion" and "delta_approximate", or "error"
// when the triple could not be classified. Type names are abbreviations.

#ifndef AMRINFER_CORPUS_H_
#define AMRINFER_CORPUS_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amrinfer/classifier.h"
#include "amrinfer/graph.h"
#include "amrinfer/taxonomy.h"

namespace amrinfer {

struct CorpusRecord {
  std::string id;
  std::string p1_text, p2_text, c_text;
  std::string p1_amr, p2_amr, c_amr;
  std::optional<InferenceType> gold_type;

  // Parsed from the *_amr fields when the record is loaded.
  AmrGraph p1_graph, p2_graph, c_graph;

  // Present once annotated (at most one of the two).
  std::optional<ClassificationResult> prediction;
  std::optional<std::string> error;

  EntailmentTriple triple() const;
  // Prediction if annotated, else gold.
  std::optional<InferenceType> effective_type() const;
};

// A bad line in a record file. line() is 1-based.
class RecordError : public std::runtime_error {
 public:
  RecordError(std::size_t line, std::string cause);
  std::size_t line() const { return line_; }
  const std::string& cause() const { return cause_; }

 private:
  std::size_t line_;
  std::string cause_;
};

// The file itself could not be opened or written.
class CorpusIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LoadMode { kStrict, kLenient };

struct LoadResult {
  std::vector<CorpusRecord> records;
  std::vector<RecordError> errors;
};

// Strict mode throws the first RecordError; lenient mode skips bad lines and
// collects their errors. Blank lines are ignored.
LoadResult read_corpus(std::istream& in, LoadMode mode = LoadMode::kLenient);
LoadResult load_corpus(const std::string& path, LoadMode mode = LoadMode::kLenient);

// One JSON object per record followed by '\n'. Output depends only on the
// records, so equal inputs give byte-identical files.
std::string record_to_json_line(const CorpusRecord& r);
void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& records);
void save_corpus(const std::string& path, const std::vector<CorpusRecord>& records);

struct GoldMismatch {
  std::string id;
  InferenceType gold;
  InferenceType predicted;
};

struct RecordFailure {
  std::string id;
  std::string message;
};

struct AnnotationReport {
  std::array<std::size_t, kNumInferenceTypes> counts{};
  // Records that received a prediction; failures are not included.
  std::size_t total = 0;
  std::vector<RecordFailure> failures;
  std::size_t gold_compared = 0;
  std::size_t gold_matches = 0;
  std::vector<GoldMismatch> mismatches;
  std::size_t approximate = 0;

  std::size_t count(InferenceType t) const;
  double fraction(InferenceType t) const;
};

// Tallies whatever predictions and errors the records already carry.
AnnotationReport summarize(const std::vector<CorpusRecord>& records);

struct AnnotationOutcome {
  std::vector<CorpusRecord> records;
  AnnotationReport report;
};

// Classifies every record on up to `jobs` worker threads. Output order is
// input order. A record that fails to classify keeps its error message and
// does not stop the batch. Throws std::invalid_argument if jobs is 0.
AnnotationOutcome annotate_corpus(std::vector<CorpusRecord> records,
                                  std::size_t jobs = 1);

struct StatsRow {
  InferenceType type;
  std::size_t count = 0;
  double fraction = 0;
  std::optional<double> expected;
  // fraction - expected; absent when there is no expectation or no data.
  std::optional<double> delta;
  bool flagged = false;
};

struct StatsTable {
  std::vector<StatsRow> rows;
  std::size_t total = 0;
  std::size_t failures = 0;
  std::size_t gold_compared = 0;
  std::size_t gold_matches = 0;
  std::size_t approximate = 0;
};

// |delta| above this marks a row.
inline constexpr double kDeltaFlagThreshold = 0.05;

// Rows follow all_inference_types() order.
StatsTable compute_stats(const AnnotationReport& report);
std::string render_stats_text(const StatsTable& table);
std::string render_stats_json(const StatsTable& table);

enum class PromptMode { kEP, kDP, kDE, kNone };

std::string_view mode_name(PromptMode m);  // "EP", "DP", "DE", "NONE"
// Case-insensitive; throws std::invalid_argument.
PromptMode lookup_mode(std::string_view name);

struct PromptRecord {
  std::string input;
  std::string target;
  PromptMode mode = PromptMode::kNone;
};

class MissingType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kTypePhrase = "the inference type is ";
inline constexpr std::string_view kSeparator = "</s>";

// Uses each record's prediction, falling back to its gold type.
std::vector<PromptRecord> emit_prompts(const std::vector<CorpusRecord>& records,
                                       PromptMode mode);

// Whether the type phrase sits where the mode puts it.
bool placement_holds(const PromptRecord& p);

std::string prompt_to_json_line(const PromptRecord& p);
void write_prompts(std::ostream& out, const std::vector<PromptRecord>& prompts);

}  // namespace amrinfer

#endif  // AMRINFER_CORPUS_H_
