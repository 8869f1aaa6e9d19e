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

#include "amrinfer/classifier.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "amrinfer/algebra.h"

namespace amrinfer {

namespace {

constexpr std::string_view kStripChars = ".,;:!?\"()";

bool is_determiner(const std::string& w) {
  return w == "a" || w == "an" || w == "the";
}

std::set<std::string> token_set(std::string_view text) {
  auto toks = tokenize(text);
  return {toks.begin(), toks.end()};
}

bool has_token(std::string_view text, std::string_view word) {
  auto toks = tokenize(text);
  return std::find(toks.begin(), toks.end(), word) != toks.end();
}

std::string var_ref(std::string_view graph, const AmrGraph& g, NodeIndex n) {
  return std::string(graph) + ":" + g.node(n).var;
}

bool has_concept_label(const AmrGraph& g, const std::string& label) {
  return g.contains_concept(label);
}

bool has_condition_edge(const AmrGraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) {
    return e.role.name() == ":condition";
  });
}

bool mentions_example(const Statement& s) {
  return s.graph.contains_concept("example") || has_token(s.text, "example");
}

bool mentions_conditional(const Statement& s) {
  return has_condition_edge(s.graph) ||
         (has_token(s.text, "if") && has_token(s.text, "then"));
}

// Target of the :condition edge leaving the root, if any.
std::optional<std::size_t> root_condition_edge(const AmrGraph& g) {
  for (std::size_t ei : g.out_edges(g.root())) {
    const Edge& e = g.edges()[ei];
    if (e.role.name() == ":condition" && e.targets_node()) return ei;
  }
  return std::nullopt;
}

// Argument-class targets of the conclusion, largest closure first.
std::vector<NodeIndex> argument_targets(const AmrGraph& c) {
  std::vector<NodeIndex> targets;
  for (const Edge& e : c.edges()) {
    if (!e.role.is_argument() || !e.targets_node()) continue;
    if (std::find(targets.begin(), targets.end(), e.target_node()) == targets.end()) {
      targets.push_back(e.target_node());
    }
  }
  std::vector<std::size_t> size(c.size(), 0);
  for (NodeIndex n : targets) size[n] = forward_closure(c, n).size();
  std::stable_sort(targets.begin(), targets.end(),
                   [&](NodeIndex a, NodeIndex b) { return size[a] > size[b]; });
  return targets;
}

// Whether the make-01 root of `g` has an argument node with this concept.
bool made_of_argument(const AmrGraph& g, const std::string& label) {
  if (g.root_node().instance.label() != "make-01") return false;
  for (std::size_t ei : g.out_edges(g.root())) {
    const Edge& e = g.edges()[ei];
    if (e.role.is_argument() && e.targets_node() &&
        g.concept_of(e.target_node()).label() == label) {
      return true;
    }
  }
  return false;
}

std::optional<NodeIndex> domain_child(const AmrGraph& g, NodeIndex n) {
  for (std::size_t ei : g.out_edges(n)) {
    const Edge& e = g.edges()[ei];
    if (e.role.name() == ":domain" && e.targets_node()) return e.target_node();
  }
  return std::nullopt;
}

class Classifier {
 public:
  explicit Classifier(const EntailmentTriple& t)
      : t_(t), pivot_(most_similar_premise(t)),
        px_(pivot_ == 1 ? t.p1 : t.p2), pxb_(pivot_ == 1 ? t.p2 : t.p1),
        gx_(px_.graph), gxb_(pxb_.graph), gc_(t.conclusion.graph) {
    x_name_ = pivot_ == 1 ? "p1" : "p2";
    xb_name_ = pivot_ == 1 ? "p2" : "p1";
  }

  ClassificationResult run() {
    result_.pivot = pivot_;
    if (premise_copy() || lexical() || single_word() || conditional_path() ||
        substitution() || conjunction() || insertion() || generalisation()) {
      return result_;
    }
    set(InferenceType::kUnknown, Rule::kNoRule);
    return result_;
  }

 private:
  bool set(InferenceType type, Rule rule, std::vector<std::string> witnesses = {}) {
    result_.type = type;
    result_.evidence.rule = rule;
    result_.evidence.witnesses = std::move(witnesses);
    return true;
  }

  bool premise_copy() {
    if (relaxed_isomorphic(gx_, gc_)) {
      return set(InferenceType::kPremiseCopy, Rule::kPremiseCopy, {x_name_});
    }
    if (relaxed_isomorphic(gxb_, gc_)) {
      return set(InferenceType::kPremiseCopy, Rule::kPremiseCopy, {xb_name_});
    }
    return false;
  }

  bool lexical() {
    auto signal = lexical_signal(t_);
    if (!signal) return false;
    return set(*signal, *signal == InferenceType::kExample
                            ? Rule::kExampleKeyword
                            : Rule::kConditionalConclusion);
  }

  bool single_word() {
    auto diff = single_token_diff(px_.text, t_.conclusion.text);
    if (!diff) return false;
    const auto& [from, to] = *diff;
    std::vector<std::string> w{"word:" + from + "/" + to};
    if (is_verb(from, gx_) || is_verb(to, gc_)) {
      return set(InferenceType::kPredSub, Rule::kSingleWordVerb, std::move(w));
    }
    for (const std::string& lemma : lemma_candidates(to)) {
      if (made_of_argument(gxb_, lemma)) {
        w.push_back(var_ref(xb_name_, gxb_, gxb_.root()));
        return set(InferenceType::kArgSubProp, Rule::kSingleWordMadeOf, std::move(w));
      }
    }
    return set(InferenceType::kArgSub, Rule::kSingleWordArgument, std::move(w));
  }

  // A premise whose root carries a :condition branch: the antecedent binds
  // into the other premise and the rest of the rule lands in the conclusion.
  bool conditional_path() {
    const std::pair<const AmrGraph*, const char*> order[] = {
        {&gx_, x_name_}, {&gxb_, xb_name_}};
    for (int k = 0; k < 2; ++k) {
      const AmrGraph& rule = *order[k].first;
      const AmrGraph& other = *order[1 - k].first;
      auto ei = root_condition_edge(rule);
      if (!ei) continue;
      MatchOptions opts;
      opts.placeholders = true;
      const NodeIndex cond = rule.edges()[*ei].target_node();
      AmrGraph antecedent = subgraph_at(rule, cond);
      if (!find_embedding(antecedent, other, opts)) continue;
      AmrGraph consequent = detach_branch(rule, *ei);
      if (!find_embedding(consequent, gc_, opts)) continue;
      return set(InferenceType::kCondFrame, Rule::kConditionalPath,
                 {var_ref(order[k].second, rule, cond)});
    }
    return false;
  }

  // Some argument of the conclusion comes from the non-pivot premise, which
  // is not itself carried over whole.
  bool substitution() {
    if (relaxed_subset(gxb_, gc_)) return false;
    const auto targets = argument_targets(gc_);
    std::optional<NodeIndex> site;
    for (NodeIndex a : targets) {
      AmrGraph sub = subgraph_at(gc_, a);
      if (relaxed_subset(sub, gxb_) && !relaxed_subset(sub, gx_)) {
        site = a;
        break;
      }
    }
    if (!site) {
      for (NodeIndex a : targets) {
        for (NodeIndex n : forward_closure(gc_, a)) {
          const std::string& label = gc_.concept_of(n).label();
          if (has_concept_label(gxb_, label) && !has_concept_label(gx_, label)) {
            site = a;
            break;
          }
        }
        if (site) break;
      }
    }
    if (!site) return false;
    std::vector<std::string> w{var_ref("c", gc_, *site)};
    const Concept& c = gc_.concept_of(*site);
    if (c.is_predicate()) {
      return set(InferenceType::kFrameSub, Rule::kSubstitutedFrame, std::move(w));
    }
    if (made_of_argument(gxb_, c.label())) {
      return set(InferenceType::kArgSubProp, Rule::kSubstitutedMadeOf, std::move(w));
    }
    return set(InferenceType::kArgSub, Rule::kSubstitutedArgument, std::move(w));
  }

  bool conjunction() {
    const Concept& root = gc_.root_node().instance;
    if (relaxed_subset(gx_, gc_) && relaxed_subset(gxb_, gc_) &&
        !(root == gx_.root_node().instance) && !(root == gxb_.root_node().instance)) {
      return set(InferenceType::kFrameConj, Rule::kBothPremisesEmbedded,
                 {var_ref("c", gc_, gc_.root())});
    }
    auto x = domain_child(gx_, gx_.root());
    auto y = domain_child(gxb_, gxb_.root());
    if (!x || !y) return false;
    const Concept& cx = gx_.concept_of(*x);
    const Concept& cy = gxb_.concept_of(*y);
    for (NodeIndex n = 0; n < gc_.size(); ++n) {
      if (gc_.concept_of(n).label() != "and") continue;
      std::optional<NodeIndex> hit_x, hit_y;
      for (std::size_t ei : gc_.out_edges(n)) {
        const Edge& e = gc_.edges()[ei];
        if (!e.targets_node() || !e.role.name().starts_with(":op")) continue;
        const Concept& tc = gc_.concept_of(e.target_node());
        if (!hit_x && tc == cx) {
          hit_x = e.target_node();
        } else if (!hit_y && tc == cy) {
          hit_y = e.target_node();
        }
      }
      if (hit_x && hit_y) {
        return set(InferenceType::kFrameConj, Rule::kDomainCoordination,
                   {var_ref("c", gc_, n)});
      }
    }
    return false;
  }

  bool insertion() {
    if (!relaxed_subset(gx_, gc_)) return false;
    GraphDelta d = graph_difference(gx_, gc_);
    result_.delta_approximate = d.approximate;
    std::vector<std::string> w;
    if (d.added_root) {
      w.push_back("c:" + *d.added_root);
      result_.frame_insertion = gc_.concept_of(gc_.index_of(*d.added_root)).is_predicate();
    }
    return set(InferenceType::kArgIns, Rule::kPivotEmbedded, std::move(w));
  }

  bool generalisation() {
    auto y = domain_child(gc_, gc_.root());
    if (!y) return false;
    const std::string& r = gc_.root_node().instance.label();
    const std::string& l = gc_.concept_of(*y).label();
    if ((gx_.contains_concept(r) && gxb_.contains_concept(l)) ||
        (gxb_.contains_concept(r) && gx_.contains_concept(l))) {
      return set(InferenceType::kArgPredGen, Rule::kDomainAcrossPremises,
                 {var_ref("c", gc_, gc_.root()), var_ref("c", gc_, *y)});
    }
    return false;
  }

  const EntailmentTriple& t_;
  int pivot_;
  const Statement& px_;
  const Statement& pxb_;
  const AmrGraph& gx_;
  const AmrGraph& gxb_;
  const AmrGraph& gc_;
  const char* x_name_;
  const char* xb_name_;
  ClassificationResult result_;
};

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kPremiseCopy: return "premise-copy";
    case Rule::kExampleKeyword: return "example-keyword";
    case Rule::kConditionalConclusion: return "conditional-conclusion";
    case Rule::kSingleWordVerb: return "single-word-verb";
    case Rule::kSingleWordArgument: return "single-word-argument";
    case Rule::kSingleWordMadeOf: return "single-word-made-of";
    case Rule::kConditionalPath: return "conditional-path";
    case Rule::kSubstitutedArgument: return "substituted-argument";
    case Rule::kSubstitutedMadeOf: return "substituted-made-of";
    case Rule::kSubstitutedFrame: return "substituted-frame";
    case Rule::kBothPremisesEmbedded: return "both-premises-embedded";
    case Rule::kDomainCoordination: return "domain-coordination";
    case Rule::kPivotEmbedded: return "pivot-embedded";
    case Rule::kDomainAcrossPremises: return "domain-across-premises";
    case Rule::kNoRule: return "no-rule";
  }
  return "no-rule";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Rule::kNoRule); ++i) {
    if (rule_name(static_cast<Rule>(i)) == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string word(text.substr(i, j - i));
    i = j;
    const auto b = word.find_first_not_of(kStripChars);
    if (b == std::string::npos) continue;
    word = word.substr(b, word.find_last_not_of(kStripChars) - b + 1);
    for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!is_determiner(word)) out.push_back(std::move(word));
  }
  return out;
}

double token_jaccard(std::string_view a, std::string_view b) {
  const auto sa = token_set(a);
  const auto sb = token_set(b);
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& w : sa) common += sb.count(w);
  return static_cast<double>(common) /
         static_cast<double>(sa.size() + sb.size() - common);
}

int most_similar_premise(const EntailmentTriple& t) {
  return token_jaccard(t.p2.text, t.conclusion.text) >
                 token_jaccard(t.p1.text, t.conclusion.text)
             ? 2
             : 1;
}

std::optional<std::pair<std::string, std::string>> single_token_diff(
    std::string_view a, std::string_view b) {
  const auto ta = tokenize(a);
  const auto tb = tokenize(b);
  if (ta.size() != tb.size()) return std::nullopt;
  std::optional<std::pair<std::string, std::string>> diff;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i] == tb[i]) continue;
    if (diff) return std::nullopt;
    diff.emplace(ta[i], tb[i]);
  }
  return diff;
}

std::vector<std::string> lemma_candidates(std::string_view word) {
  std::string w(word);
  for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::vector<std::string> out{w};
  auto add = [&](std::string s) {
    if (s.size() >= 2 && std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(std::move(s));
    }
  };
  auto strip = [&](std::string_view suffix) -> std::optional<std::string> {
    if (w.size() > suffix.size() && w.ends_with(suffix)) {
      return w.substr(0, w.size() - suffix.size());
    }
    return std::nullopt;
  };
  if (auto s = strip("ies")) add(*s + "y");
  if (auto s = strip("es")) add(*s);
  if (auto s = strip("s")) add(*s);
  if (auto s = strip("ied")) add(*s + "y");
  if (auto s = strip("ed")) {
    add(*s);
    add(*s + "e");
    if (s->size() >= 2 && s->back() == (*s)[s->size() - 2]) add(s->substr(0, s->size() - 1));
  }
  if (auto s = strip("ing")) {
    add(*s);
    add(*s + "e");
    if (s->size() >= 2 && s->back() == (*s)[s->size() - 2]) add(s->substr(0, s->size() - 1));
  }
  return out;
}

bool is_verb(std::string_view word, const AmrGraph& g) {
  const auto lemmas = lemma_candidates(word);
  for (const Node& n : g.nodes()) {
    if (!n.instance.is_predicate()) continue;
    if (std::find(lemmas.begin(), lemmas.end(), n.instance.stem()) != lemmas.end()) {
      return true;
    }
  }
  return false;
}

std::optional<InferenceType> lexical_signal(const EntailmentTriple& t) {
  if (mentions_example(t.conclusion) && !mentions_example(t.p1) &&
      !mentions_example(t.p2)) {
    return InferenceType::kExample;
  }
  if (mentions_conditional(t.conclusion) && !mentions_conditional(t.p1) &&
      !mentions_conditional(t.p2)) {
    return InferenceType::kIfThen;
  }
  return std::nullopt;
}

ClassificationResult classify(const EntailmentTriple& t) {
  const std::pair<const Statement*, const char*> parts[] = {
      {&t.p1, "p1"}, {&t.p2, "p2"}, {&t.conclusion, "conclusion"}};
  for (const auto& [s, name] : parts) {
    if (s->text.find_first_not_of(" \t\r\n") == std::string::npos) {
      throw MalformedTriple(std::string(name) + " text is empty");
    }
    if (auto err = s->graph.check()) {
      throw MalformedTriple(std::string(name) + " graph: " + *err);
    }
  }
  return Classifier(t).run();
}

std::string linearize(const AmrGraph& g) {
  if (g.empty()) return "";
  std::vector<std::vector<NodeIndex>> adj(g.size());
  for (const Edge& e : g.edges()) {
    if (!e.targets_node()) continue;
    adj[e.source].push_back(e.target_node());
    adj[e.target_node()].push_back(e.source);
  }
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeIndex> stack{g.root()};
  std::string out;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    if (!out.empty()) out += ' ';
    out += g.concept_of(v).stem();
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (!seen[*it]) stack.push_back(*it);
    }
  }
  return out;
}

}  // namespace amrinfer
