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

// Forward application of an inference type: derive a conclusion graph from
// two premise graphs.
//
// Substitution and insertion types anchor on a bridge, a pair of nodes with
// the same concept in the two premises. Bridges are tried in
// bridge_candidates() order unless a site hint names one.

#ifndef AMRINFER_TRANSFORM_H_
#define AMRINFER_TRANSFORM_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amrinfer/graph.h"
#include "amrinfer/taxonomy.h"

namespace amrinfer {

class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No bridge fits the pattern the requested type needs.
class NoBridge : public TransformError {
 public:
  using TransformError::TransformError;
};

class NoConditional : public TransformError {
 public:
  using TransformError::TransformError;
};

class NotSingleDifference : public TransformError {
 public:
  using TransformError::TransformError;
};

class UnsupportedType : public TransformError {
 public:
  using TransformError::TransformError;
};

struct Bridge {
  NodeId p1_var;
  NodeId p2_var;
  Concept shared;
};

// Every cross pair of nodes with equal concepts, largest combined forward
// closure first, then by concept label and variables.
std::vector<Bridge> bridge_candidates(const AmrGraph& p1, const AmrGraph& p2);

struct TransformRequest {
  AmrGraph p1;
  AmrGraph p2;
  InferenceType type = InferenceType::kArgSub;
  // (variable in p1, variable in p2) of the bridge to use.
  std::optional<std::pair<NodeId, NodeId>> site_hint;
};

struct TransformResult {
  AmrGraph graph;
  // Set for IFT, whose construction is a convention rather than a rule.
  bool heuristic = false;
};

// Per type:
//   ARG-SUB      premise L has (b :domain a); b's twin in the other premise
//                is replaced by a's subtree.
//   PRED-SUB     premise L relates two frames as arguments of one predicate;
//                the twin of the first frame's predicate is swapped for the
//                second.
//   FRAME-SUB    the frame around the bridge in one premise is replaced by
//                the frame around the bridge in the other.
//   COND-FRAME   the :condition antecedent of one premise binds into the
//                other; the consequent is emitted with the binding applied.
//   ARG-INS      material of one premise is attached under the bridge of
//                the other.
//   FRAME-CONJ   conjoin_graphs(p1, p2, and).
//   ARG/PRED-GEN (p1-concept :domain p2-concept) for the one differing node.
//   ARG-SUB-PROP in (make-01 :ARG1 x :ARG2 y), x replaces y's material in
//                the other premise.
//   IFT          p1 with :condition -> p2.
// Throws UnsupportedType for UNK, EXAMPLE and PREM-COPY.
TransformResult transform(const TransformRequest& req);

}  // namespace amrinfer

#endif  // AMRINFER_TRANSFORM_H_
