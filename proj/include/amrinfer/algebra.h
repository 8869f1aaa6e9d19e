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

// Structural algebra over AmrGraph values.
//
// "Relaxed" comparisons require concept-preserving injective node maps under
// which every argument-class edge (:ARGn, :opn) of the smaller graph has a
// counterpart with the same role. Other roles (:manner, :time, :mod, ...) are
// ignored on both sides. Sense suffixes are part of the concept and must
// match exactly.
//
// Every operation returning a graph leaves its inputs untouched and renames
// variables with canonicalize_variables().

#ifndef AMRINFER_ALGEBRA_H_
#define AMRINFER_ALGEBRA_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amrinfer/graph.h"

namespace amrinfer {

class InvalidSite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateRole : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MatchOptions {
  // Check every edge and constant, not just argument-class ones.
  bool all_edges = false;
  // Require the root of `inner` to map onto the root of `outer`.
  bool match_root = false;
  // Treat placeholder concepts of `inner` (see is_placeholder_concept) as
  // matching any concept of `outer`.
  bool placeholders = false;
};

// "something", "anything", "someone", "somebody".
bool is_placeholder_concept(const Concept& c);

// Node map witnessing that `inner` embeds in `outer`: witness[i] is the node
// of `outer` that inner node i maps to.
std::optional<std::vector<NodeIndex>> find_embedding(const AmrGraph& inner,
                                                     const AmrGraph& outer,
                                                     const MatchOptions& opts = {});

bool relaxed_subset(const AmrGraph& inner, const AmrGraph& outer);
bool relaxed_isomorphic(const AmrGraph& a, const AmrGraph& b);
// Exact isomorphism: concepts, every edge, constants and the root.
bool isomorphic(const AmrGraph& a, const AmrGraph& b);

struct DeltaNode {
  NodeId var;
  Concept instance;

  friend bool operator==(const DeltaNode&, const DeltaNode&) = default;
};

// Edge endpoints are variables of the graph the edge belongs to: `from` for
// removed edges, `to` for added ones.
struct DeltaEdge {
  NodeId source;
  RoleLabel role;
  std::string target;
  bool target_is_constant = false;
  bool constant_quoted = false;

  friend bool operator==(const DeltaEdge&, const DeltaEdge&) = default;
};

// Result of graph_difference(from, to).
struct GraphDelta {
  std::vector<DeltaNode> removed_nodes;  // vars of `from`
  std::vector<DeltaNode> added_nodes;    // vars of `to`
  std::vector<DeltaEdge> removed_edges;
  std::vector<DeltaEdge> added_edges;
  // Alignment of shared nodes: (var in from, var in to).
  std::vector<std::pair<NodeId, NodeId>> alignment;
  NodeId to_root;
  // Top of the added material, if any node was added.
  std::optional<NodeId> added_root;
  // Set when the alignment came from the greedy fallback rather than the
  // exact search.
  bool approximate = false;

  bool empty() const {
    return removed_nodes.empty() && added_nodes.empty() &&
           removed_edges.empty() && added_edges.empty();
  }
};

// Graphs larger than this many nodes are aligned greedily.
inline constexpr std::size_t kExactAlignmentLimit = 25;

// Minimal delta over all maximum-common-subgraph alignments: first the most
// aligned nodes, then the most preserved argument edges, then the most
// preserved other edges. Ties go to the alignment found first when nodes are
// visited in concept-label order.
GraphDelta graph_difference(const AmrGraph& from, const AmrGraph& to);

// Rebuilds `to` from `from` and a delta computed against it.
AmrGraph apply_delta(const AmrGraph& from, const GraphDelta& delta);

// Nodes owned by the subtree below `at`: its forward closure minus anything
// that is also referenced from outside that closure.
std::vector<NodeIndex> dominated_nodes(const AmrGraph& g, NodeIndex at);

// g without edge `edge_index` and the nodes dominated by its target; nodes
// left disconnected from the root are dropped too. Variable names are kept.
AmrGraph detach_branch(const AmrGraph& g, std::size_t edge_index);

// Replaces the subtree dominated by `at` with `replacement`; edges that
// pointed at `at` now point at the replacement root.
//
// When both `at` and a single-node replacement are predicates, only the
// predicate is swapped and its arguments are kept (predicate substitution).
// Throws InvalidSite when a subtree substitution targets the root.
AmrGraph substitute_subgraph(const AmrGraph& g, NodeIndex at,
                             const AmrGraph& replacement);

// Adds `arg` below `frame_head` via `role`. An inverse role such as
// ":ARG1-of" attaches frame_head as argument of the inserted root instead.
// Throws DuplicateRole if frame_head already carries the role to a target
// relaxed-isomorphic to arg.
AmrGraph insert_argument(const AmrGraph& g, NodeIndex frame_head,
                         const AmrGraph& arg, const std::string& role);

// Fresh `and` / `or` root with :op1 -> a and :op2 -> b. Throws
// std::invalid_argument for any other connective.
AmrGraph conjoin_graphs(const AmrGraph& a, const AmrGraph& b,
                        const Concept& connective);

}  // namespace amrinfer

#endif  // AMRINFER_ALGEBRA_H_
