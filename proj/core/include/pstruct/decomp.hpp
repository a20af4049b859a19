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

#include <string>
#include <utility>
#include <vector>

#include "pstruct/graph.hpp"

namespace pstruct {

/// Tree of bags. Node ids are 0..num_nodes()-1; `edges` must form a tree.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  /// Max bag size minus one (-1 for a decomposition without bags).
  int width() const;
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct TdReport {
  bool ok = true;
  std::string axiom;   // "bag", "tree", "vertex", "edge" or "trace"
  std::string detail;  // first witness of the violation
};

/// Checks, in order: bag entries in range, tree shape, every vertex covered,
/// every edge covered, every vertex trace connected.
TdReport validate_td(const Graph& g, const TreeDecomposition& td);

/// Decomposition from an elimination ordering. Bags that are subsets of a
/// neighbouring bag are merged away.
TreeDecomposition td_from_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Min-fill elimination (ties: min degree, then smallest id).
TreeDecomposition heuristic_td(const Graph& g);

struct ExactTreewidth {
  int width = -1;
  TreeDecomposition td;
};

/// Subset dynamic programme over elimination prefixes. Throws kTooLarge
/// when the graph has more than `cap` vertices.
ExactTreewidth exact_treewidth_small(const Graph& g, int cap = 20);

/// Ordered layers V_0, V_1, ...
using Layering = std::vector<VertexSet>;

/// Layer i holds the vertices at distance i from root. Throws kNotConnected.
Layering bfs_layering(const Graph& g, Vertex root);

/// Per-vertex layer index of a layering (-1 when absent).
std::vector<int> layer_index(int n, const Layering& layering);

/// max |bag ∩ layer| over all pairs.
int layered_width(const TreeDecomposition& td, const Layering& layering, int n);

/// Smallest node whose bag contains `clique`. Throws kNotFound.
int find_clique_bag(const TreeDecomposition& td, const VertexSet& clique);

}  // namespace pstruct
