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

#include "amrinfer/transform.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "amrinfer/algebra.h"

namespace amrinfer {

namespace {

// A bridge resolved to node indices, seen from one side: `a` is the premise
// the pattern is looked for in, `b` the other one.
struct Side {
  const AmrGraph* a;
  NodeIndex at_a;
  const AmrGraph* b;
  NodeIndex at_b;
};

std::optional<NodeIndex> child_by_role(const AmrGraph& g, NodeIndex n,
                                       std::string_view role) {
  for (std::size_t ei : g.out_edges(n)) {
    const Edge& e = g.edges()[ei];
    if (e.role.name() == role && e.targets_node()) return e.target_node();
  }
  return std::nullopt;
}

// Predicate nodes that take n as an argument, in edge order.
std::vector<NodeIndex> frame_parents(const AmrGraph& g, NodeIndex n) {
  std::vector<NodeIndex> out;
  for (std::size_t ei : g.in_edges(n)) {
    const Edge& e = g.edges()[ei];
    if (e.role.is_argument() && g.concept_of(e.source).is_predicate()) {
      out.push_back(e.source);
    }
  }
  return out;
}

AmrGraph single_node(const Concept& c) {
  AmrGraph g;
  g.add_node("x", c);
  g.set_root(0);
  return g;
}

// Copies of whole graphs or parts of them under throwaway variables.
class Builder {
 public:
  // Adds the nodes of g with keep[i] set; returns old -> new.
  std::map<NodeIndex, NodeIndex> add_nodes(const AmrGraph& g,
                                           const std::vector<bool>& keep) {
    std::map<NodeIndex, NodeIndex> remap;
    for (NodeIndex i = 0; i < g.size(); ++i) {
      if (keep[i]) remap[i] = out_.add_node("n" + std::to_string(out_.size()),
                                            g.concept_of(i));
    }
    return remap;
  }

  // Adds the edges of g whose endpoints resolve through remap; others are
  // skipped. Duplicates of edges already present are dropped.
  void add_edges(const AmrGraph& g, const std::map<NodeIndex, NodeIndex>& remap,
                 const std::vector<bool>* skip_edge = nullptr) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (skip_edge && (*skip_edge)[i]) continue;
      const Edge& e = g.edges()[i];
      auto s = remap.find(e.source);
      if (s == remap.end()) continue;
      Edge copy = e;
      copy.source = s->second;
      if (e.targets_node()) {
        auto t = remap.find(e.target_node());
        if (t == remap.end()) continue;
        copy.target = t->second;
      }
      if (std::find(out_.edges().begin(), out_.edges().end(), copy) ==
          out_.edges().end()) {
        out_.add_edge(std::move(copy));
      }
    }
  }

  AmrGraph finish(NodeIndex root) {
    out_.set_root(root);
    out_.validate();
    return canonicalize_variables(out_);
  }

 private:
  AmrGraph out_;
};

std::vector<bool> all_of(const AmrGraph& g) { return std::vector<bool>(g.size(), true); }

class Transformer {
 public:
  explicit Transformer(const TransformRequest& req) : req_(req) {
    auto bridges = bridge_candidates(req.p1, req.p2);
    if (req.site_hint) {
      std::erase_if(bridges, [&](const Bridge& b) {
        return b.p1_var != req.site_hint->first || b.p2_var != req.site_hint->second;
      });
      if (bridges.empty()) {
        throw NoBridge("site " + req.site_hint->first + "/" + req.site_hint->second +
                       " is not a pair of nodes with a shared concept");
      }
    }
    for (const Bridge& b : bridges) {
      bridges_.emplace_back(req.p1.index_of(b.p1_var), req.p2.index_of(b.p2_var));
    }
  }

  TransformResult run() {
    switch (req_.type) {
      case InferenceType::kArgSub: return {arg_sub()};
      case InferenceType::kPredSub: return {pred_sub()};
      case InferenceType::kFrameSub: return {frame_sub()};
      case InferenceType::kCondFrame: return {cond_frame()};
      case InferenceType::kArgIns: return {arg_ins()};
      case InferenceType::kFrameConj:
        return {conjoin_graphs(req_.p1, req_.p2, Concept("and"))};
      case InferenceType::kArgPredGen: return {generalise()};
      case InferenceType::kArgSubProp: return {arg_sub_prop()};
      case InferenceType::kIfThen:
        return {insert_argument(req_.p1, req_.p1.root(), req_.p2, ":condition"), true};
      case InferenceType::kExample:
      case InferenceType::kUnknown:
      case InferenceType::kPremiseCopy:
        break;
    }
    throw UnsupportedType("inference type " + std::string(abbreviation(req_.type)) +
                          " has no graph transformation");
  }

 private:
  // Both orientations of every bridge: p1 as `a` first.
  std::vector<Side> sides() const {
    std::vector<Side> out;
    for (const auto& [i1, i2] : bridges_) {
      out.push_back(Side{&req_.p1, i1, &req_.p2, i2});
      out.push_back(Side{&req_.p2, i2, &req_.p1, i1});
    }
    return out;
  }

  [[noreturn]] void no_bridge(std::string_view what) const {
    if (bridges_.empty()) {
      throw NoBridge("premises share no concept");
    }
    throw NoBridge("no shared concept fits the " + std::string(what) + " pattern");
  }

  // a holds (bridge :domain counterpart); the counterpart replaces the
  // bridge's twin in b.
  AmrGraph arg_sub() const {
    for (const Side& s : sides()) {
      auto cp = child_by_role(*s.a, s.at_a, ":domain");
      if (!cp || s.at_b == s.b->root()) continue;
      return substitute_subgraph(*s.b, s.at_b, subgraph_at(*s.a, *cp));
    }
    no_bridge("ARG-SUB");
  }

  // a holds (f :ARGi bridge :ARGj other) with both arguments predicates.
  AmrGraph pred_sub() const {
    for (const Side& s : sides()) {
      const AmrGraph& a = *s.a;
      if (!a.concept_of(s.at_a).is_predicate()) continue;
      for (NodeIndex f : frame_parents(a, s.at_a)) {
        for (std::size_t ei : a.out_edges(f)) {
          const Edge& e = a.edges()[ei];
          if (!e.role.is_argument() || !e.targets_node()) continue;
          const NodeIndex q = e.target_node();
          if (q == s.at_a || !a.concept_of(q).is_predicate() ||
              a.concept_of(q) == a.concept_of(s.at_a)) {
            continue;
          }
          return substitute_subgraph(*s.b, s.at_b, single_node(a.concept_of(q)));
        }
      }
    }
    no_bridge("PRED-SUB");
  }

  // The frame taking the bridge in a (not its root) is replaced by the
  // frame taking the bridge in b.
  AmrGraph frame_sub() const {
    for (const Side& s : sides()) {
      for (NodeIndex h_a : frame_parents(*s.a, s.at_a)) {
        if (h_a == s.a->root()) continue;
        for (NodeIndex h_b : frame_parents(*s.b, s.at_b)) {
          if (s.b->concept_of(h_b) == s.a->concept_of(h_a)) continue;
          return substitute_subgraph(*s.a, h_a, subgraph_at(*s.b, h_b));
        }
      }
    }
    no_bridge("FRAME-SUB");
  }

  AmrGraph cond_frame() const {
    const AmrGraph* rule = nullptr;
    const AmrGraph* other = nullptr;
    std::optional<std::size_t> cond_edge;
    for (auto [r, o] : {std::pair{&req_.p1, &req_.p2}, std::pair{&req_.p2, &req_.p1}}) {
      for (std::size_t ei : r->out_edges(r->root())) {
        const Edge& e = r->edges()[ei];
        if (e.role.name() == ":condition" && e.targets_node()) {
          rule = r;
          other = o;
          cond_edge = ei;
          break;
        }
      }
      if (rule) break;
    }
    if (!rule) throw NoConditional("neither premise root has a :condition edge");

    const NodeIndex cond = rule->edges()[*cond_edge].target_node();
    AmrGraph antecedent = subgraph_at(*rule, cond);
    MatchOptions opts;
    opts.placeholders = true;
    auto witness = find_embedding(antecedent, *other, opts);
    if (!witness) {
      throw NoBridge("the :condition antecedent does not match the other premise");
    }
    // Placeholders bind to the matched node, or to what it describes when
    // it is a (class :domain instance) statement.
    std::map<NodeId, NodeIndex> binding;
    for (NodeIndex i = 0; i < antecedent.size(); ++i) {
      if (!is_placeholder_concept(antecedent.concept_of(i))) continue;
      NodeIndex bound = (*witness)[i];
      if (auto d = child_by_role(*other, bound, ":domain")) bound = *d;
      binding[antecedent.node(i).var] = bound;
    }

    AmrGraph consequent = detach_branch(*rule, *cond_edge);
    std::vector<bool> keep_c = all_of(consequent);
    std::vector<bool> keep_o(other->size(), false);
    for (NodeIndex i = 0; i < consequent.size(); ++i) {
      auto it = binding.find(consequent.node(i).var);
      if (it == binding.end()) continue;
      keep_c[i] = false;
      for (NodeIndex n : forward_closure(*other, it->second)) keep_o[n] = true;
    }
    Builder b;
    auto rc = b.add_nodes(consequent, keep_c);
    auto ro = b.add_nodes(*other, keep_o);
    for (NodeIndex i = 0; i < consequent.size(); ++i) {
      if (!keep_c[i]) rc[i] = ro.at(binding.at(consequent.node(i).var));
    }
    b.add_edges(consequent, rc);
    b.add_edges(*other, ro);
    return b.finish(rc.at(consequent.root()));
  }

  // Glues material of a onto the bridge twin in b. When the bridge is a's
  // root its outgoing branches move across, skipping ones b already has;
  // otherwise everything in a except the bridge's own subtree moves.
  AmrGraph arg_ins() const {
    for (const Side& s : sides()) {
      const AmrGraph& src = *s.a;
      const AmrGraph& dst = *s.b;
      std::vector<bool> keep = all_of(src);
      std::vector<bool> skip_edge(src.edges().size(), false);
      keep[s.at_a] = false;
      if (s.at_a == src.root()) {
        for (std::size_t ei : src.out_edges(s.at_a)) {
          if (duplicates_branch(src, ei, dst, s.at_b)) {
            skip_edge[ei] = true;
            const Edge& e = src.edges()[ei];
            if (e.targets_node()) {
              for (NodeIndex n : dominated_nodes(src, e.target_node())) keep[n] = false;
            }
          }
        }
      } else {
        for (NodeIndex n : dominated_nodes(src, s.at_a)) keep[n] = false;
      }
      bool adds = std::any_of(keep.begin(), keep.end(), [](bool k) { return k; });
      for (std::size_t ei : src.out_edges(s.at_a)) adds |= !skip_edge[ei];
      if (!adds) continue;
      Builder b;
      auto rd = b.add_nodes(dst, all_of(dst));
      auto rs = b.add_nodes(src, keep);
      rs[s.at_a] = rd.at(s.at_b);
      b.add_edges(dst, rd);
      b.add_edges(src, rs, &skip_edge);
      return b.finish(rd.at(dst.root()));
    }
    no_bridge("ARG-INS");
  }

  // Whether edge ei of `src` (leaving the bridge) already has a counterpart
  // on node n of `dst`.
  static bool duplicates_branch(const AmrGraph& src, std::size_t ei,
                                const AmrGraph& dst, NodeIndex n) {
    const Edge& e = src.edges()[ei];
    for (std::size_t fi : dst.out_edges(n)) {
      const Edge& f = dst.edges()[fi];
      if (!(f.role == e.role)) continue;
      if (!e.targets_node()) {
        if (!f.targets_node() && f.target_constant() == e.target_constant()) return true;
      } else if (f.targets_node() &&
                 relaxed_isomorphic(subgraph_at(src, e.target_node()),
                                    subgraph_at(dst, f.target_node()))) {
        return true;
      }
    }
    return false;
  }

  AmrGraph generalise() const {
    GraphDelta d = graph_difference(req_.p1, req_.p2);
    if (d.removed_nodes.size() != 1 || d.added_nodes.size() != 1) {
      throw NotSingleDifference(
          "premises differ by " + std::to_string(d.removed_nodes.size()) +
          " removed and " + std::to_string(d.added_nodes.size()) +
          " added nodes, expected exactly one each");
    }
    AmrGraph g;
    g.add_node("x", d.removed_nodes[0].instance);
    g.add_node("y", d.added_nodes[0].instance);
    g.add_edge(0, RoleLabel(":domain"), 1);
    g.set_root(0);
    return canonicalize_variables(g);
  }

  // In (make-01 :ARG1 x :ARG2 y), x is made of y: x replaces the bridge
  // (inside y's material) in the other premise.
  AmrGraph arg_sub_prop() const {
    for (const Side& s : sides()) {
      const AmrGraph& m = *s.a;
      if (m.root_node().instance.label() != "make-01") continue;
      auto made = child_by_role(m, m.root(), ":ARG1");
      if (!made || s.at_a == m.root() || s.at_b == s.b->root()) continue;
      const auto made_closure = forward_closure(m, *made);
      if (std::find(made_closure.begin(), made_closure.end(), s.at_a) !=
          made_closure.end()) {
        continue;
      }
      return substitute_subgraph(*s.b, s.at_b, subgraph_at(m, *made));
    }
    no_bridge("ARG-SUB-PROP");
  }

  const TransformRequest& req_;
  std::vector<std::pair<NodeIndex, NodeIndex>> bridges_;
};

}  // namespace

std::vector<Bridge> bridge_candidates(const AmrGraph& p1, const AmrGraph& p2) {
  struct Ranked {
    std::size_t size;
    Bridge bridge;
  };
  std::vector<Ranked> ranked;
  for (NodeIndex i = 0; i < p1.size(); ++i) {
    for (NodeIndex j = 0; j < p2.size(); ++j) {
      if (!(p1.concept_of(i) == p2.concept_of(j))) continue;
      ranked.push_back({forward_closure(p1, i).size() + forward_closure(p2, j).size(),
                        Bridge{p1.node(i).var, p2.node(j).var, p1.concept_of(i)}});
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return std::tuple(b.size, a.bridge.shared.label(), a.bridge.p1_var, a.bridge.p2_var) <
           std::tuple(a.size, b.bridge.shared.label(), b.bridge.p1_var, b.bridge.p2_var);
  });
  std::vector<Bridge> out;
  for (auto& r : ranked) out.push_back(std::move(r.bridge));
  return out;
}

TransformResult transform(const TransformRequest& req) {
  if (!is_transformable(req.type)) {
    throw UnsupportedType("inference type " + std::string(abbreviation(req.type)) +
                          " has no graph transformation");
  }
  req.p1.validate();
  req.p2.validate();
  return Transformer(req).run();
}

}  // namespace amrinfer
