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

#ifndef AMRINFER_GRAPH_H_
#define AMRINFER_GRAPH_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace amrinfer {

// Raised when a graph violates one of the AmrGraph invariants.
class MalformedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Variable name of a node (e.g. "s", "c2"). Names carry no meaning: every
// comparison in the algebra is name-agnostic.
using NodeId = std::string;

// Position of a node inside AmrGraph::nodes().
using NodeIndex = std::size_t;

// A concept label such as "contain-01" or "scar". A trailing "-NN" marks a
// PropBank sense, which is how predicates are told apart from nouns.
class Concept {
 public:
  Concept() = default;
  explicit Concept(std::string label);

  const std::string& label() const { return label_; }
  // Label without the sense suffix ("contain" for "contain-01").
  std::string_view stem() const;
  // Two-digit sense suffix, if present.
  std::optional<int> sense() const { return sense_; }
  bool is_predicate() const { return sense_.has_value(); }

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.label_ == b.label_;
  }
  friend auto operator<=>(const Concept& a, const Concept& b) {
    return a.label_ <=> b.label_;
  }

 private:
  std::string label_;
  std::optional<int> sense_;
};

enum class RoleClass { kArgument, kRelaxable };

// An edge label such as ":ARG0" or ":manner". Argument-class roles (:ARGn,
// :opn) must be preserved by relaxed comparisons; all others may be dropped.
class RoleLabel {
 public:
  RoleLabel() = default;
  // Accepts the name with or without the leading colon.
  explicit RoleLabel(std::string_view name);

  const std::string& name() const { return name_; }
  RoleClass role_class() const { return class_; }
  bool is_argument() const { return class_ == RoleClass::kArgument; }

  friend bool operator==(const RoleLabel& a, const RoleLabel& b) {
    return a.name_ == b.name_;
  }
  friend auto operator<=>(const RoleLabel& a, const RoleLabel& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
  RoleClass class_ = RoleClass::kRelaxable;
};

// Leaf value used as an edge target: a quoted string, a number, or a bare
// symbol such as the polarity marker "-".
struct Constant {
  std::string text;
  bool quoted = false;

  friend bool operator==(const Constant&, const Constant&) = default;
};

struct Node {
  NodeId var;
  Concept instance;
};

struct Edge {
  NodeIndex source = 0;
  RoleLabel role;
  std::variant<NodeIndex, Constant> target;

  bool targets_node() const { return target.index() == 0; }
  NodeIndex target_node() const { return std::get<NodeIndex>(target); }
  const Constant& target_constant() const { return std::get<Constant>(target); }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A rooted, labelled, possibly re-entrant semantic graph. Nodes and edges
// keep insertion order, which doubles as the stable serialization order.
//
// The builder methods do not enforce the invariants one at a time; call
// validate() (or well_formed()) once construction is finished.
class AmrGraph {
 public:
  AmrGraph() = default;

  // Adds a node and returns its index. Throws MalformedGraph if the variable
  // is already defined.
  NodeIndex add_node(NodeId var, Concept instance);
  void add_edge(NodeIndex source, RoleLabel role, NodeIndex target);
  void add_edge(NodeIndex source, RoleLabel role, Constant target);
  void add_edge(Edge edge);
  void set_root(NodeIndex root);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Node& node(NodeIndex i) const { return nodes_.at(i); }
  const Concept& concept_of(NodeIndex i) const { return nodes_.at(i).instance; }
  NodeIndex root() const { return root_; }
  const Node& root_node() const { return nodes_.at(root_); }

  std::optional<NodeIndex> find(std::string_view var) const;
  // Like find() but throws std::out_of_range for unknown variables.
  NodeIndex index_of(std::string_view var) const;
  bool contains_concept(std::string_view label) const;

  // Indices of edges leaving / entering a node, in edge order.
  std::vector<std::size_t> out_edges(NodeIndex n) const;
  std::vector<std::size_t> in_edges(NodeIndex n) const;

  // Returns a description of the first violated invariant, if any.
  std::optional<std::string> check() const;
  bool well_formed() const { return !check().has_value(); }
  // Throws MalformedGraph when check() reports a violation.
  void validate() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, NodeIndex> by_var_;
  NodeIndex root_ = 0;
};

// Nodes reachable from `start` by following edges forward, in DFS order.
std::vector<NodeIndex> forward_closure(const AmrGraph& g, NodeIndex start);

// The subgraph induced by forward_closure(g, start), rooted at start.
// Variable names are kept.
AmrGraph subgraph_at(const AmrGraph& g, NodeIndex start);

// Copy of g with variables renamed deterministically: first letter of the
// concept plus a per-graph counter, assigned in depth-first order from the
// root (edges followed in either direction). Nodes are reordered by that
// traversal; edge order is kept.
AmrGraph canonicalize_variables(const AmrGraph& g);

// A predicate node together with the closure of its argument-class edges.
struct Frame {
  NodeIndex head = 0;
  std::vector<NodeIndex> span;
};

// Throws std::invalid_argument when head carries no sense suffix.
Frame frame_at(const AmrGraph& g, NodeIndex head);

}  // namespace amrinfer

#endif  // AMRINFER_GRAPH_H_
