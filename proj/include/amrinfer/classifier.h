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

// Rule-based classification of (premise, premise, conclusion) triples into
// inference types.

#ifndef AMRINFER_CLASSIFIER_H_
#define AMRINFER_CLASSIFIER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrinfer/graph.h"
#include "amrinfer/taxonomy.h"

namespace amrinfer {

struct Statement {
  std::string text;
  AmrGraph graph;
};

struct EntailmentTriple {
  Statement p1;
  Statement p2;
  Statement conclusion;
};

class MalformedTriple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The branch of the decision procedure that produced a label.
enum class Rule {
  kPremiseCopy,
  kExampleKeyword,
  kConditionalConclusion,
  kSingleWordVerb,
  kSingleWordArgument,
  kSingleWordMadeOf,
  kConditionalPath,
  kSubstitutedArgument,
  kSubstitutedMadeOf,
  kSubstitutedFrame,
  kBothPremisesEmbedded,
  kDomainCoordination,
  kPivotEmbedded,
  kDomainAcrossPremises,
  kNoRule,
};

// Stable kebab-case name, e.g. "single-word-verb".
std::string_view rule_name(Rule r);
// Inverse of rule_name().
std::optional<Rule> rule_from_name(std::string_view name);

struct Evidence {
  Rule rule = Rule::kNoRule;
  // Free-form witnesses such as "c:a" (variable a of the conclusion) or
  // "word:contains/stores".
  std::vector<std::string> witnesses;
};

struct ClassificationResult {
  InferenceType type = InferenceType::kUnknown;
  int pivot = 1;  // premise most similar to the conclusion (1 or 2)
  Evidence evidence;
  // ARG-INS whose inserted material is headed by a predicate.
  bool frame_insertion = false;
  // A graph difference fell back to the greedy alignment.
  bool delta_approximate = false;
};

// Lower-cased whitespace tokens with surrounding punctuation stripped and
// the determiners a/an/the removed.
std::vector<std::string> tokenize(std::string_view text);

// Jaccard similarity of the token sets of two sentences.
double token_jaccard(std::string_view a, std::string_view b);

// 1 or 2; ties go to premise 1.
int most_similar_premise(const EntailmentTriple& t);

// The differing word pair when the token sequences have equal length and
// differ at exactly one position.
std::optional<std::pair<std::string, std::string>> single_token_diff(
    std::string_view a, std::string_view b);

// Candidate lemmas of `word` under a small suffix-stripping rule set.
std::vector<std::string> lemma_candidates(std::string_view word);

// True when some lemma of `word` is the stem of a sensed concept of g.
bool is_verb(std::string_view word, const AmrGraph& g);

// EXAMPLE or IFT when the conclusion carries the keyword or a conditional
// that neither premise has.
std::optional<InferenceType> lexical_signal(const EntailmentTriple& t);

// Throws MalformedTriple for empty texts or malformed graphs.
ClassificationResult classify(const EntailmentTriple& t);

// Concept stems in depth-first order from the root, space separated. A
// stand-in sentence for graphs that come without text.
std::string linearize(const AmrGraph& g);

}  // namespace amrinfer

#endif  // AMRINFER_CLASSIFIER_H_
