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

#include "amrinfer/algebra.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

namespace amrinfer {

namespace {

using NodeEdgeKey = std::tuple<NodeIndex, std::string, NodeIndex>;
using ConstEdgeKey = std::tuple<NodeIndex, std::string, std::string, bool>;

struct EdgeIndex {
  std::set<NodeEdgeKey> node_edges;
  std::set<ConstEdgeKey> const_edges;

  explicit EdgeIndex(const AmrGraph& g) {
    for (const Edge& e : g.edges()) {
      if (e.targets_node()) {
        node_edges.emplace(e.source, e.role.name(), e.target_node());
      } else {
        const_edges.emplace(e.source, e.role.name(), e.target_constant().text,
                            e.target_constant().quoted);
      }
    }
  }

  // Whether the image of `e` under `map` exists.
  bool has(const Edge& e, const std::vector<NodeIndex>& map) const {
    if (e.targets_node()) {
      return node_edges.contains({map[e.source], e.role.name(), map[e.target_node()]});
    }
    return const_edges.contains({map[e.source], e.role.name(),
                                 e.target_constant().text,
                                 e.target_constant().quoted});
  }
};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const AmrGraph& inner, const AmrGraph& outer,
                  const MatchOptions& opts)
      : inner_(inner), outer_(outer), index_(outer), incident_(inner.size()) {
    for (std::size_t i = 0; i < inner.edges().size(); ++i) {
      const Edge& e = inner.edges()[i];
      if (!opts.all_edges && !e.role.is_argument()) continue;
      incident_[e.source].push_back(i);
      if (e.targets_node() && e.target_node() != e.source) {
        incident_[e.target_node()].push_back(i);
      }
    }
    candidates_.resize(inner.size());
    for (NodeIndex i = 0; i < inner.size(); ++i) {
      const Concept& c = inner.concept_of(i);
      const bool wild = opts.placeholders && is_placeholder_concept(c);
      for (NodeIndex j = 0; j < outer.size(); ++j) {
        if (opts.match_root && (i == inner.root()) != (j == outer.root())) continue;
        if (wild || outer.concept_of(j) == c) candidates_[i].push_back(j);
      }
    }
    order_.resize(inner.size());
    std::iota(order_.begin(), order_.end(), NodeIndex{0});
    order_by_constraint();
  }

  std::optional<std::vector<NodeIndex>> run() {
    if (inner_.size() > outer_.size()) return std::nullopt;
    for (const auto& c : candidates_) {
      if (c.empty()) return std::nullopt;
    }
    map_.assign(inner_.size(), kUnset);
    used_.assign(outer_.size(), false);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr NodeIndex kUnset = static_cast<NodeIndex>(-1);

  // Fewest candidates first, then prefer nodes adjacent to ones already
  // placed so edge checks prune early.
  void order_by_constraint() {
    std::vector<bool> placed(inner_.size(), false);
    std::vector<bool> adjacent(inner_.size(), false);
    for (std::size_t k = 0; k < order_.size(); ++k) {
      NodeIndex best = kUnset;
      for (NodeIndex i = 0; i < inner_.size(); ++i) {
        if (placed[i]) continue;
        if (best == kUnset) {
          best = i;
          continue;
        }
        auto key = [&](NodeIndex n) {
          return std::make_tuple(!adjacent[n], candidates_[n].size(), n);
        };
        if (key(i) < key(best)) best = i;
      }
      order_[k] = best;
      placed[best] = true;
      for (std::size_t ei : incident_[best]) {
        const Edge& e = inner_.edges()[ei];
        adjacent[e.source] = true;
        if (e.targets_node()) adjacent[e.target_node()] = true;
      }
    }
  }

  bool consistent(NodeIndex i) const {
    for (std::size_t ei : incident_[i]) {
      const Edge& e = inner_.edges()[ei];
      if (map_[e.source] == kUnset) continue;
      if (e.targets_node() && map_[e.target_node()] == kUnset) continue;
      if (!index_.has(e, map_)) return false;
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const NodeIndex i = order_[k];
    for (NodeIndex j : candidates_[i]) {
      if (used_[j]) continue;
      map_[i] = j;
      used_[j] = true;
      if (consistent(i) && extend(k + 1)) return true;
      used_[j] = false;
      map_[i] = kUnset;
    }
    return false;
  }

  const AmrGraph& inner_;
  const AmrGraph& outer_;
  EdgeIndex index_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::vector<NodeIndex>> candidates_;
  std::vector<NodeIndex> order_;
  std::vector<NodeIndex> map_;
  std::vector<bool> used_;
};

std::size_t count_argument_edges(const AmrGraph& g) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(),
                    [](const Edge& e) { return e.role.is_argument(); }));
}

// ---------------------------------------------------------------------------
// Maximum common subgraph alignment for graph_difference.

using Score = std::array<int, 3>;  // nodes, argument edges, other edges

Score operator+(Score a, const Score& b) {
  for (int i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

// Caps the exact search on pathological inputs (many nodes sharing one
// concept). Hitting the cap keeps the best alignment found so far and marks
// the delta approximate.
constexpr long kSearchBudget = 2'000'000;

class Aligner {
 public:
  Aligner(const AmrGraph& from, const AmrGraph& to)
      : from_(from), to_(to), to_index_(to) {
    order_.resize(from.size());
    std::iota(order_.begin(), order_.end(), NodeIndex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](NodeIndex a, NodeIndex b) {
      return from.concept_of(a) < from.concept_of(b);
    });
    pos_.resize(from.size());
    for (std::size_t k = 0; k < order_.size(); ++k) pos_[order_[k]] = k;

    candidates_.resize(from.size());
    for (NodeIndex u = 0; u < from.size(); ++u) {
      for (NodeIndex v = 0; v < to.size(); ++v) {
        if (to.concept_of(v) == from.concept_of(u)) candidates_[u].push_back(v);
      }
    }

    // Edges are scored when their last endpoint (in search order) is decided.
    closing_.resize(order_.size());
    remaining_.assign(order_.size() + 1, Score{0, 0, 0});
    for (std::size_t ei = 0; ei < from.edges().size(); ++ei) {
      const Edge& e = from.edges()[ei];
      std::size_t last = pos_[e.source];
      if (e.targets_node()) last = std::max(last, pos_[e.target_node()]);
      closing_[last].push_back(ei);
    }
    for (std::size_t k = order_.size(); k-- > 0;) {
      remaining_[k] = remaining_[k + 1];
      if (!candidates_[order_[k]].empty()) remaining_[k][0] += 1;
      for (std::size_t ei : closing_[k]) {
        remaining_[k][from.edges()[ei].role.is_argument() ? 1 : 2] += 1;
      }
    }
  }

  std::vector<NodeIndex> exact(bool* exhausted_budget) {
    map_.assign(from_.size(), kUnmapped);
    used_.assign(to_.size(), false);
    best_map_ = map_;
    best_ = Score{-1, -1, -1};
    steps_ = 0;
    search(0, Score{0, 0, 0});
    *exhausted_budget = steps_ > kSearchBudget;
    return best_map_;
  }

  std::vector<NodeIndex> greedy() {
    map_.assign(from_.size(), kUnmapped);
    used_.assign(to_.size(), false);
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const NodeIndex u = order_[k];
      NodeIndex pick = kUnmapped;
      Score pick_gain{-1, -1, -1};
      for (NodeIndex v : candidates_[u]) {
        if (used_[v]) continue;
        map_[u] = v;
        Score g = gain(k);
        if (g > pick_gain) {
          pick_gain = g;
          pick = v;
        }
        map_[u] = kUnmapped;
      }
      if (pick != kUnmapped) {
        map_[u] = pick;
        used_[pick] = true;
      }
    }
    return map_;
  }

  static constexpr NodeIndex kUnmapped = static_cast<NodeIndex>(-1);

 private:
  // Score contributed by deciding position k under the current map.
  Score gain(std::size_t k) const {
    Score s{map_[order_[k]] != kUnmapped ? 1 : 0, 0, 0};
    for (std::size_t ei : closing_[k]) {
      const Edge& e = from_.edges()[ei];
      if (map_[e.source] == kUnmapped) continue;
      if (e.targets_node() && map_[e.target_node()] == kUnmapped) continue;
      if (to_index_.has(e, map_)) s[e.role.is_argument() ? 1 : 2] += 1;
    }
    return s;
  }

  void search(std::size_t k, Score current) {
    if (++steps_ > kSearchBudget) return;
    if (k == order_.size()) {
      if (current > best_) {
        best_ = current;
        best_map_ = map_;
      }
      return;
    }
    if (best_[0] >= 0 && !(current + remaining_[k] > best_)) return;
    const NodeIndex u = order_[k];
    for (NodeIndex v : candidates_[u]) {
      if (used_[v]) continue;
      map_[u] = v;
      used_[v] = true;
      search(k + 1, current + gain(k));
      used_[v] = false;
      map_[u] = kUnmapped;
    }
    search(k + 1, current + gain(k));
  }

  const AmrGraph& from_;
  const AmrGraph& to_;
  EdgeIndex to_index_;
  std::vector<NodeIndex> order_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<NodeIndex>> candidates_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<Score> remaining_;
  std::vector<NodeIndex> map_;
  std::vector<bool> used_;
  std::vector<NodeIndex> best_map_;
  Score best_{-1, -1, -1};
  long steps_ = 0;
};

DeltaEdge to_delta_edge(const AmrGraph& g, const Edge& e) {
  DeltaEdge d{g.node(e.source).var, e.role, "", false, false};
  if (e.targets_node()) {
    d.target = g.node(e.target_node()).var;
  } else {
    d.target = e.target_constant().text;
    d.target_is_constant = true;
    d.constant_quoted = e.target_constant().quoted;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Composition helpers. Nodes get throwaway variables; the caller
// canonicalizes the finished graph.

class Composer {
 public:
  // Copies g's nodes except those in `skip`; returns old -> new index, with
  // kSkipped for skipped nodes.
  std::vector<NodeIndex> add_nodes(const AmrGraph& g,
                                   const std::vector<bool>* skip = nullptr) {
    std::vector<NodeIndex> remap(g.size(), kSkipped);
    for (NodeIndex i = 0; i < g.size(); ++i) {
      if (skip && (*skip)[i]) continue;
      remap[i] = add_node(g.concept_of(i));
    }
    return remap;
  }

  NodeIndex add_node(const Concept& c) {
    return out_.add_node("n" + std::to_string(counter_++), c);
  }

  // Copies edges whose endpoints both survive under remap.
  void add_edges(const AmrGraph& g, const std::vector<NodeIndex>& remap) {
    for (const Edge& e : g.edges()) {
      if (remap[e.source] == kSkipped) continue;
      Edge copy = e;
      copy.source = remap[e.source];
      if (e.targets_node()) {
        if (remap[e.target_node()] == kSkipped) continue;
        copy.target = remap[e.target_node()];
      }
      out_.add_edge(std::move(copy));
    }
  }

  AmrGraph& graph() { return out_; }

  AmrGraph finish(NodeIndex root) {
    out_.set_root(root);
    out_.validate();
    return canonicalize_variables(out_);
  }

  static constexpr NodeIndex kSkipped = static_cast<NodeIndex>(-1);

 private:
  AmrGraph out_;
  int counter_ = 0;
};

bool is_inverse_role(const std::string& role) {
  return role.size() > 4 && role.ends_with("-of") && role != ":consist-of" &&
         role != "consist-of";
}

}  // namespace

bool is_placeholder_concept(const Concept& c) {
  const auto& l = c.label();
  return l == "something" || l == "anything" || l == "someone" || l == "somebody";
}

std::optional<std::vector<NodeIndex>> find_embedding(const AmrGraph& inner,
                                                     const AmrGraph& outer,
                                                     const MatchOptions& opts) {
  if (inner.empty()) return std::vector<NodeIndex>{};
  return EmbeddingSearch(inner, outer, opts).run();
}

bool relaxed_subset(const AmrGraph& inner, const AmrGraph& outer) {
  return find_embedding(inner, outer).has_value();
}

bool relaxed_isomorphic(const AmrGraph& a, const AmrGraph& b) {
  if (a.size() != b.size()) return false;
  if (count_argument_edges(a) != count_argument_edges(b)) return false;
  return relaxed_subset(a, b);
}

bool isomorphic(const AmrGraph& a, const AmrGraph& b) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return false;
  MatchOptions opts;
  opts.all_edges = true;
  opts.match_root = true;
  return find_embedding(a, b, opts).has_value();
}

GraphDelta graph_difference(const AmrGraph& from, const AmrGraph& to) {
  Aligner aligner(from, to);
  GraphDelta delta;
  std::vector<NodeIndex> map;
  if (std::max(from.size(), to.size()) > kExactAlignmentLimit) {
    map = aligner.greedy();
    delta.approximate = true;
  } else {
    bool exhausted = false;
    map = aligner.exact(&exhausted);
    delta.approximate = exhausted;
  }

  std::vector<bool> image(to.size(), false);
  for (NodeIndex u = 0; u < from.size(); ++u) {
    if (map[u] == Aligner::kUnmapped) {
      delta.removed_nodes.push_back({from.node(u).var, from.concept_of(u)});
    } else {
      image[map[u]] = true;
      delta.alignment.emplace_back(from.node(u).var, to.node(map[u]).var);
    }
  }
  for (NodeIndex v = 0; v < to.size(); ++v) {
    if (!image[v]) delta.added_nodes.push_back({to.node(v).var, to.concept_of(v)});
  }

  EdgeIndex to_index(to);
  std::set<std::size_t> kept_to_edges;
  std::vector<std::size_t> to_edge_of;
  for (const Edge& e : from.edges()) {
    bool kept = map[e.source] != Aligner::kUnmapped &&
                (!e.targets_node() || map[e.target_node()] != Aligner::kUnmapped) &&
                to_index.has(e, map);
    if (!kept) {
      delta.removed_edges.push_back(to_delta_edge(from, e));
      continue;
    }
    for (std::size_t j = 0; j < to.edges().size(); ++j) {
      const Edge& t = to.edges()[j];
      if (t.source != map[e.source] || !(t.role == e.role)) continue;
      if (e.targets_node() ? (t.targets_node() && t.target_node() == map[e.target_node()])
                           : (!t.targets_node() && t.target_constant() == e.target_constant())) {
        kept_to_edges.insert(j);
        break;
      }
    }
  }
  for (std::size_t j = 0; j < to.edges().size(); ++j) {
    if (!kept_to_edges.contains(j)) {
      delta.added_edges.push_back(to_delta_edge(to, to.edges()[j]));
    }
  }

  delta.to_root = to.root_node().var;
  if (!image[to.root()]) {
    delta.added_root = to.root_node().var;
  } else {
    for (NodeIndex v = 0; v < to.size() && !delta.added_root; ++v) {
      if (image[v]) continue;
      bool fed_by_added = false;
      for (std::size_t ei : to.in_edges(v)) {
        if (!image[to.edges()[ei].source]) fed_by_added = true;
      }
      if (!fed_by_added) delta.added_root = to.node(v).var;
    }
    if (!delta.added_root && !delta.added_nodes.empty()) {
      delta.added_root = delta.added_nodes.front().var;
    }
  }
  return delta;
}

AmrGraph apply_delta(const AmrGraph& from, const GraphDelta& delta) {
  std::set<NodeId> removed;
  for (const auto& n : delta.removed_nodes) removed.insert(n.var);
  std::map<NodeId, NodeId> aligned(delta.alignment.begin(), delta.alignment.end());

  AmrGraph out;
  for (const Node& n : from.nodes()) {
    if (removed.contains(n.var)) continue;
    out.add_node(aligned.at(n.var), n.instance);
  }
  for (const auto& n : delta.added_nodes) out.add_node(n.var, n.instance);

  auto add = [&](const DeltaEdge& d, auto&& var_of) {
    const NodeIndex src = out.index_of(var_of(d.source));
    if (d.target_is_constant) {
      out.add_edge(src, d.role, Constant{d.target, d.constant_quoted});
    } else {
      out.add_edge(src, d.role, out.index_of(var_of(d.target)));
    }
  };
  for (const Edge& e : from.edges()) {
    DeltaEdge d = to_delta_edge(from, e);
    if (std::find(delta.removed_edges.begin(), delta.removed_edges.end(), d) !=
        delta.removed_edges.end()) {
      continue;
    }
    add(d, [&](const NodeId& v) { return aligned.at(v); });
  }
  for (const DeltaEdge& d : delta.added_edges) {
    add(d, [](const NodeId& v) { return v; });
  }
  out.set_root(out.index_of(delta.to_root));
  out.validate();
  return canonicalize_variables(out);
}

std::vector<NodeIndex> dominated_nodes(const AmrGraph& g, NodeIndex at) {
  std::vector<bool> in(g.size(), false);
  for (NodeIndex n : forward_closure(g, at)) in[n] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : g.edges()) {
      if (!e.targets_node()) continue;
      NodeIndex t = e.target_node();
      if (t != at && in[t] && !in[e.source]) {
        in[t] = false;
        changed = true;
      }
    }
    if (!changed) break;
    // Drop whatever is no longer reachable from `at` inside the set.
    std::vector<bool> reach(g.size(), false);
    std::vector<NodeIndex> stack{at};
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      if (reach[v]) continue;
      reach[v] = true;
      for (std::size_t ei : g.out_edges(v)) {
        const Edge& e = g.edges()[ei];
        if (e.targets_node() && in[e.target_node()]) stack.push_back(e.target_node());
      }
    }
    in = reach;
  }
  std::vector<NodeIndex> out;
  for (NodeIndex n : forward_closure(g, at)) {
    if (in[n]) out.push_back(n);
  }
  return out;
}

AmrGraph detach_branch(const AmrGraph& g, std::size_t ei) {
  if (ei >= g.edges().size() || !g.edges()[ei].targets_node()) {
    throw std::out_of_range("detach_branch: not a node edge");
  }
  std::vector<bool> drop(g.size(), false);
  for (NodeIndex n : dominated_nodes(g, g.edges()[ei].target_node())) drop[n] = true;
  std::vector<std::vector<NodeIndex>> adj(g.size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (i == ei || !e.targets_node()) continue;
    if (drop[e.source] || drop[e.target_node()]) continue;
    adj[e.source].push_back(e.target_node());
    adj[e.target_node()].push_back(e.source);
  }
  std::vector<bool> keep(g.size(), false);
  std::vector<NodeIndex> stack{g.root()};
  keep[g.root()] = true;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    for (NodeIndex w : adj[v]) {
      if (!keep[w]) {
        keep[w] = true;
        stack.push_back(w);
      }
    }
  }
  AmrGraph out;
  std::vector<NodeIndex> remap(g.size());
  for (NodeIndex n = 0; n < g.size(); ++n) {
    if (keep[n]) remap[n] = out.add_node(g.node(n).var, g.concept_of(n));
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (i == ei || !keep[e.source]) continue;
    if (e.targets_node()) {
      if (!keep[e.target_node()]) continue;
      out.add_edge(remap[e.source], e.role, remap[e.target_node()]);
    } else {
      out.add_edge(remap[e.source], e.role, e.target_constant());
    }
  }
  out.set_root(remap[g.root()]);
  return out;
}

AmrGraph substitute_subgraph(const AmrGraph& g, NodeIndex at,
                             const AmrGraph& replacement) {
  if (at >= g.size()) throw InvalidSite("substitution site is not a node of the graph");
  replacement.validate();

  const bool predicate_swap = replacement.size() == 1 &&
                              replacement.edges().empty() &&
                              replacement.root_node().instance.is_predicate() &&
                              g.concept_of(at).is_predicate();
  Composer c;
  if (predicate_swap) {
    auto remap = c.add_nodes(g);
    c.add_edges(g, remap);
    AmrGraph& out = c.graph();
    AmrGraph swapped;
    for (NodeIndex i = 0; i < out.size(); ++i) {
      swapped.add_node(out.node(i).var,
                       i == remap[at] ? replacement.root_node().instance
                                      : out.concept_of(i));
    }
    for (const Edge& e : out.edges()) swapped.add_edge(e);
    swapped.set_root(remap[g.root()]);
    swapped.validate();
    return canonicalize_variables(swapped);
  }

  if (at == g.root()) {
    throw InvalidSite("cannot substitute the root '" + g.node(at).var +
                      "'; use the replacement graph directly");
  }
  std::vector<bool> skip(g.size(), false);
  for (NodeIndex n : dominated_nodes(g, at)) skip[n] = true;

  auto remap = c.add_nodes(g, &skip);
  auto rep = c.add_nodes(replacement);
  const NodeIndex new_root = rep[replacement.root()];
  for (const Edge& e : g.edges()) {
    if (skip[e.source]) continue;
    Edge copy = e;
    copy.source = remap[e.source];
    if (e.targets_node()) {
      const NodeIndex t = e.target_node();
      if (t == at) {
        copy.target = new_root;
      } else if (skip[t]) {
        continue;
      } else {
        copy.target = remap[t];
      }
    }
    c.graph().add_edge(std::move(copy));
  }
  c.add_edges(replacement, rep);
  c.graph().set_root(remap[g.root()]);
  if (auto err = c.graph().check()) {
    throw InvalidSite("substitution at '" + g.node(at).var +
                      "' leaves a malformed graph: " + *err);
  }
  return c.finish(remap[g.root()]);
}

AmrGraph insert_argument(const AmrGraph& g, NodeIndex frame_head,
                         const AmrGraph& arg, const std::string& role) {
  if (frame_head >= g.size()) {
    throw InvalidSite("insertion site is not a node of the graph");
  }
  arg.validate();
  const bool inverse = is_inverse_role(role);
  const RoleLabel label(inverse ? role.substr(0, role.size() - 3) : role);

  for (const Edge& e : g.edges()) {
    if (!e.targets_node() || !(e.role == label)) continue;
    if (!inverse && e.source == frame_head &&
        relaxed_isomorphic(subgraph_at(g, e.target_node()), arg)) {
      throw DuplicateRole(g.node(frame_head).var + " already has " +
                          label.name() + " with an equivalent target");
    }
    if (inverse && e.target_node() == frame_head &&
        g.concept_of(e.source) == arg.root_node().instance &&
        relaxed_subset(arg, subgraph_at(g, e.source))) {
      throw DuplicateRole(g.node(frame_head).var + " is already " + label.name() +
                          " of an equivalent frame");
    }
  }

  Composer c;
  auto base = c.add_nodes(g);
  auto added = c.add_nodes(arg);
  c.add_edges(g, base);
  c.add_edges(arg, added);
  if (inverse) {
    c.graph().add_edge(added[arg.root()], label, base[frame_head]);
  } else {
    c.graph().add_edge(base[frame_head], label, added[arg.root()]);
  }
  return c.finish(base[g.root()]);
}

AmrGraph conjoin_graphs(const AmrGraph& a, const AmrGraph& b,
                        const Concept& connective) {
  if (connective.label() != "and" && connective.label() != "or") {
    throw std::invalid_argument("connective must be 'and' or 'or', got '" +
                                connective.label() + "'");
  }
  a.validate();
  b.validate();
  Composer c;
  const NodeIndex root = c.add_node(connective);
  auto ra = c.add_nodes(a);
  auto rb = c.add_nodes(b);
  c.add_edges(a, ra);
  c.add_edges(b, rb);
  c.graph().add_edge(root, RoleLabel(":op1"), ra[a.root()]);
  c.graph().add_edge(root, RoleLabel(":op2"), rb[b.root()]);
  return c.finish(root);
}

}  // namespace amrinfer
