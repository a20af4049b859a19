// Copyright 2026 The pstruct Authors.
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

#pragma once

#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "pstruct/graph.hpp"
#include "pstruct/view.hpp"

namespace pstruct {

/// No component of the working graph minus y meets every target.
struct Blocker {
  VertexSet y;
  std::vector<int> bag_ids;  // empty when no decomposition is involved
};

/// Pairwise disjoint connected sets, each meeting every target.
struct Connectors {
  std::vector<VertexSet> trees;
};

using HitOutcome = std::variant<Blocker, Connectors>;

/// True iff no component of g - u - y meets every target. Targets are
/// limited to 64 sets.
bool blocks(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets, const VertexSet& y);

/// Components of g - avoid that meet every target, ordered by smallest vertex.
std::vector<VertexSet> meeting_components(const Graph& g, const VertexSet& avoid,
                                          const std::vector<VertexSet>& targets);

/// Smallest node x such that W_x \ u blocks the targets in g - u.
std::optional<int> helly_bag(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                             const TDView& view);

struct SplitEdge {
  int x = -1;
  int y = -1;
  VertexSet f1;  // exclusive to the x side
  VertexSet f2;  // exclusive to the y side
};

/// First tree edge (by sorted endpoint pair) whose two sides both hold a
/// connected set of vertices exclusive to that side, outside u, meeting every
/// target. Throws kNotFound when none exists.
SplitEdge find_split_edge(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                          const TDView& view);

/// Inclusion-minimal subset of `candidates` separating a from b in
/// g - avoid, by removal attempts in increasing id. Throws kNotSeparating
/// when `candidates` does not separate or meets a or b.
VertexSet minimal_separator_within(const Graph& g, const VertexSet& candidates, const VertexSet& a,
                                   const VertexSet& b, const VertexSet& avoid = {});

/// Deepest-first greedy on the view's tree rooted at node 0. Either t
/// disjoint connected sets of g - u meeting every target, or a blocker
/// made of fewer than t bags.
HitOutcome implicit_tree_hit(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                             const TDView& view, int t);

struct SteinerResult {
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int size = kInfinite;
  VertexSet tree;
};

/// Fewest vertices of a connected subgraph meeting every group. At most 8
/// groups (kTooManyGroups). Dreyfus-Wagner over (vertex, group subset).
SteinerResult group_steiner_min(const Graph& g, const std::vector<VertexSet>& groups);

/// Size bound of the blocker produced by find_tree on an n-vertex graph.
double find_tree_blocker_bound(int n, int k, double x);

/// Size bound of the blocker produced by find_trees.
double find_trees_blocker_bound(int n, int k, double x, int l);

/// One connected set of at most x vertices meeting every group, or a
/// distance-layer blocker (see find_tree_blocker_bound).
HitOutcome find_tree(const Graph& g, const std::vector<VertexSet>& groups, double x);

/// l disjoint such sets, or a blocker made of the sets found so far plus the
/// final find_tree blocker.
HitOutcome find_trees(const Graph& g, const std::vector<VertexSet>& groups, double x, int l);

enum class TerminalPolicy {
  /// Paths may share endpoints in a and b; the cut avoids a and b. A direct
  /// a-b edge counts as a path that no vertex cut can break.
  kInternallyDisjoint,
  /// Paths are fully vertex-disjoint (a vertex of a ∩ b is a path by
  /// itself); the cut may use any vertex.
  kFullyDisjoint,
};

/// t disjoint a-b paths (as vertex sequences) or a vertex cut of size < t.
HitOutcome menger_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b, int t,
                             TerminalPolicy policy = TerminalPolicy::kInternallyDisjoint);

/// Up to t disjoint paths in walk order. When fewer than t exist, `cut`
/// (if given) receives a minimum cut.
std::vector<std::vector<Vertex>> menger_paths(const Graph& g, const VertexSet& a, const VertexSet& b, int t,
                                              TerminalPolicy policy, VertexSet* cut);

}  // namespace pstruct
