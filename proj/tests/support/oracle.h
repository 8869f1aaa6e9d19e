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

// Brute-force reference implementations used only by tests. They enumerate
// every concept-preserving node assignment in index order and check edges at
// the leaves, sharing no code with the library's matcher.

#ifndef AMRINFER_TESTS_SUPPORT_ORACLE_H_
#define AMRINFER_TESTS_SUPPORT_ORACLE_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "amrinfer/graph.h"

namespace amrinfer::testing {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

inline bool has_edge_image(const AmrGraph& outer, const Edge& e,
                           const std::vector<std::size_t>& map) {
  for (const Edge& o : outer.edges()) {
    if (o.source != map[e.source] || o.role.name() != e.role.name()) continue;
    if (e.targets_node()) {
      if (o.targets_node() && o.target_node() == map[e.target_node()]) return true;
    } else if (!o.targets_node() && o.target_constant() == e.target_constant()) {
      return true;
    }
  }
  return false;
}

// Calls visit(map) for every injective map of inner nodes into outer nodes
// that preserves concepts; stops early when visit returns true.
inline bool enumerate_injections(
    const AmrGraph& inner, const AmrGraph& outer,
    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> map(inner.size(), kNone);
  std::vector<bool> used(outer.size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == inner.size()) return visit(map);
    for (std::size_t j = 0; j < outer.size(); ++j) {
      if (used[j] || !(inner.concept_of(i) == outer.concept_of(j))) continue;
      used[j] = true;
      map[i] = j;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    map[i] = kNone;
    return false;
  };
  return rec(0);
}

inline bool arg_edges_preserved(const AmrGraph& inner, const AmrGraph& outer,
                                const std::vector<std::size_t>& map) {
  for (const Edge& e : inner.edges()) {
    if (e.role.is_argument() && !has_edge_image(outer, e, map)) return false;
  }
  return true;
}

inline bool oracle_relaxed_subset(const AmrGraph& inner, const AmrGraph& outer) {
  if (inner.size() > outer.size()) return false;
  return enumerate_injections(inner, outer, [&](const auto& map) {
    return arg_edges_preserved(inner, outer, map);
  });
}

// A bijection under which argument edges correspond in both directions.
inline bool oracle_relaxed_isomorphic(const AmrGraph& a, const AmrGraph& b) {
  if (a.size() != b.size()) return false;
  return enumerate_injections(a, b, [&](const auto& map) {
    if (!arg_edges_preserved(a, b, map)) return false;
    std::vector<std::size_t> inverse(b.size(), kNone);
    for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = i;
    return arg_edges_preserved(b, a, inverse);
  });
}

// Best (nodes, argument edges, other edges) score over every partial
// concept-preserving injection of `from` into `to`.
inline std::array<int, 3> oracle_alignment_score(const AmrGraph& from,
                                                 const AmrGraph& to) {
  std::array<int, 3> best{-1, -1, -1};
  std::vector<std::size_t> map(from.size(), kNone);
  std::vector<bool> used(to.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == from.size()) {
      std::array<int, 3> s{0, 0, 0};
      for (std::size_t k : map) s[0] += k != kNone;
      for (const Edge& e : from.edges()) {
        if (map[e.source] == kNone) continue;
        if (e.targets_node() && map[e.target_node()] == kNone) continue;
        if (has_edge_image(to, e, map)) s[e.role.is_argument() ? 1 : 2] += 1;
      }
      best = std::max(best, s);
      return;
    }
    rec(i + 1);
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j] || !(from.concept_of(i) == to.concept_of(j))) continue;
      used[j] = true;
      map[i] = j;
      rec(i + 1);
      used[j] = false;
      map[i] = kNone;
    }
  };
  rec(0);
  return best;
}

}  // namespace amrinfer::testing

#endif  // AMRINFER_TESTS_SUPPORT_ORACLE_H_
