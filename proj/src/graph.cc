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

#include "amrinfer/graph.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace amrinfer {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Concept::Concept(std::string label) : label_(std::move(label)) {
  const auto n = label_.size();
  if (n >= 4 && label_[n - 3] == '-' &&
      all_digits(std::string_view(label_).substr(n - 2))) {
    sense_ = std::stoi(label_.substr(n - 2));
  }
}

std::string_view Concept::stem() const {
  std::string_view s = label_;
  if (sense_) s.remove_suffix(3);
  return s;
}

RoleLabel::RoleLabel(std::string_view name) {
  if (name.empty() || name.front() != ':') {
    name_ = ":" + std::string(name);
  } else {
    name_ = std::string(name);
  }
  std::string_view bare = std::string_view(name_).substr(1);
  if ((bare.starts_with("ARG") && all_digits(bare.substr(3))) ||
      (bare.starts_with("op") && all_digits(bare.substr(2)))) {
    class_ = RoleClass::kArgument;
  }
}

NodeIndex AmrGraph::add_node(NodeId var, Concept instance) {
  if (by_var_.contains(var)) {
    throw MalformedGraph("duplicate variable '" + var + "'");
  }
  const NodeIndex i = nodes_.size();
  by_var_.emplace(var, i);
  nodes_.push_back(Node{std::move(var), std::move(instance)});
  return i;
}

void AmrGraph::add_edge(NodeIndex source, RoleLabel role, NodeIndex target) {
  edges_.push_back(Edge{source, std::move(role), target});
}

void AmrGraph::add_edge(NodeIndex source, RoleLabel role, Constant target) {
  edges_.push_back(Edge{source, std::move(role), std::move(target)});
}

void AmrGraph::add_edge(Edge edge) { edges_.push_back(std::move(edge)); }

void AmrGraph::set_root(NodeIndex root) { root_ = root; }

std::optional<NodeIndex> AmrGraph::find(std::string_view var) const {
  auto it = by_var_.find(std::string(var));
  if (it == by_var_.end()) return std::nullopt;
  return it->second;
}

NodeIndex AmrGraph::index_of(std::string_view var) const {
  auto i = find(var);
  if (!i) throw std::out_of_range("unknown variable '" + std::string(var) + "'");
  return *i;
}

bool AmrGraph::contains_concept(std::string_view label) const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [&](const Node& n) { return n.instance.label() == label; });
}

std::vector<std::size_t> AmrGraph::out_edges(NodeIndex n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].source == n) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> AmrGraph::in_edges(NodeIndex n) const {
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].targets_node() && edges_[i].target_node() == n) in.push_back(i);
  }
  return in;
}

std::optional<std::string> AmrGraph::check() const {
  if (nodes_.empty()) return "graph has no nodes";
  if (root_ >= nodes_.size()) return "root is not a node of the graph";

  std::set<std::tuple<NodeIndex, std::string, int, std::string>> seen;
  std::vector<std::vector<NodeIndex>> adj(nodes_.size());
  for (const Edge& e : edges_) {
    if (e.source >= nodes_.size()) return "edge source out of range";
    std::string tgt;
    int kind = 0;
    if (e.targets_node()) {
      if (e.target_node() >= nodes_.size()) return "edge target out of range";
      tgt = std::to_string(e.target_node());
      adj[e.source].push_back(e.target_node());
      adj[e.target_node()].push_back(e.source);
    } else {
      kind = e.target_constant().quoted ? 2 : 1;
      tgt = e.target_constant().text;
    }
    if (!seen.emplace(e.source, e.role.name(), kind, tgt).second) {
      return "duplicate edge " + nodes_[e.source].var + " " + e.role.name() +
             " " + (kind == 0 ? nodes_[e.target_node()].var : tgt);
    }
  }

  std::vector<bool> reached(nodes_.size(), false);
  std::vector<NodeIndex> stack{root_};
  reached[root_] = true;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    for (NodeIndex w : adj[v]) {
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (NodeIndex i = 0; i < nodes_.size(); ++i) {
    if (!reached[i]) return "node '" + nodes_[i].var + "' is disconnected";
  }
  return std::nullopt;
}

void AmrGraph::validate() const {
  if (auto err = check()) throw MalformedGraph(*err);
}

std::vector<NodeIndex> forward_closure(const AmrGraph& g, NodeIndex start) {
  std::vector<NodeIndex> order;
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeIndex> stack{start};
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    order.push_back(v);
    auto outs = g.out_edges(v);
    for (auto it = outs.rbegin(); it != outs.rend(); ++it) {
      const Edge& e = g.edges()[*it];
      if (e.targets_node() && !seen[e.target_node()]) {
        stack.push_back(e.target_node());
      }
    }
  }
  return order;
}

AmrGraph subgraph_at(const AmrGraph& g, NodeIndex start) {
  const auto keep = forward_closure(g, start);
  std::map<NodeIndex, NodeIndex> remap;
  AmrGraph out;
  for (NodeIndex n : keep) remap[n] = out.add_node(g.node(n).var, g.concept_of(n));
  for (const Edge& e : g.edges()) {
    auto src = remap.find(e.source);
    if (src == remap.end()) continue;
    if (e.targets_node()) {
      auto tgt = remap.find(e.target_node());
      if (tgt == remap.end()) continue;
      out.add_edge(src->second, e.role, tgt->second);
    } else {
      out.add_edge(src->second, e.role, e.target_constant());
    }
  }
  out.set_root(remap.at(start));
  return out;
}

AmrGraph canonicalize_variables(const AmrGraph& g) {
  if (g.empty()) return g;
  std::vector<NodeIndex> order;
  std::vector<bool> seen(g.size(), false);
  // Undirected DFS in edge order so nodes only reachable through inverse
  // edges still get a stable position.
  std::vector<std::vector<NodeIndex>> adj(g.size());
  for (const Edge& e : g.edges()) {
    if (!e.targets_node()) continue;
    adj[e.source].push_back(e.target_node());
    adj[e.target_node()].push_back(e.source);
  }
  std::vector<NodeIndex> stack{g.root()};
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    order.push_back(v);
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (!seen[*it]) stack.push_back(*it);
    }
  }
  for (NodeIndex i = 0; i < g.size(); ++i) {
    if (!seen[i]) order.push_back(i);
  }

  std::map<char, int> counters;
  std::vector<NodeIndex> remap(g.size());
  AmrGraph out;
  for (NodeIndex old : order) {
    const std::string& label = g.concept_of(old).label();
    char c = label.empty() ? 'x' : static_cast<char>(std::tolower(
                                       static_cast<unsigned char>(label[0])));
    if (c < 'a' || c > 'z') c = 'x';
    int k = ++counters[c];
    std::string var(1, c);
    if (k > 1) var += std::to_string(k);
    remap[old] = out.add_node(std::move(var), g.concept_of(old));
  }
  for (const Edge& e : g.edges()) {
    Edge copy = e;
    copy.source = remap[e.source];
    if (e.targets_node()) copy.target = remap[e.target_node()];
    out.add_edge(std::move(copy));
  }
  out.set_root(remap[g.root()]);
  return out;
}

Frame frame_at(const AmrGraph& g, NodeIndex head) {
  if (!g.concept_of(head).is_predicate()) {
    throw std::invalid_argument("frame head '" + g.node(head).var +
                                "' has no sense suffix");
  }
  Frame f{head, {}};
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeIndex> stack{head};
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    f.span.push_back(v);
    for (std::size_t ei : g.out_edges(v)) {
      const Edge& e = g.edges()[ei];
      if (e.targets_node() && e.role.is_argument()) stack.push_back(e.target_node());
    }
  }
  return f;
}

}  // namespace amrinfer
