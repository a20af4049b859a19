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

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pstruct {

using Vertex = int;

/// Strictly increasing list of vertex indices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense indices 0..n-1 with sorted adjacency.
///
/// Immutable once built; every mutation (deletion, contraction) returns a new
/// graph together with the vertex map that produced it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Builds from an arbitrary edge list. Self-loops and duplicate edges are
  /// dropped; `dropped` (if given) receives how many were ignored.
  static Graph from_edges(int n, std::span<const Edge> edges, std::size_t* dropped = nullptr);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Stored label, or the decimal 0-based index when the graph is unlabelled.
  std::string label(Vertex v) const;
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

/// Branch sets U_1..U_r of a clique model, in order.
using Model = std::vector<VertexSet>;

// ---------------------------------------------------------------------------
// Set helpers (all inputs and outputs strictly increasing).

VertexSet make_set(std::vector<Vertex> v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
bool is_subset(const VertexSet& sub, const VertexSet& super);
bool intersects(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(int n);
VertexSet complement(int n, const VertexSet& s);
/// Indicator vector of length n.
std::vector<char> mask_of(int n, const VertexSet& s);

// ---------------------------------------------------------------------------
// Operations.

/// Connected classes of g[restrict], each sorted, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& restrict);
/// Components of g itself.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

/// Old-to-new index map used by every contraction of z in an n-vertex graph:
/// vertices outside z keep their relative order and are packed into
/// 0..n-|z|-1; every vertex of z goes to n-|z|.
std::vector<Vertex> contraction_map(int n, const VertexSet& z);

struct Contraction {
  Graph graph;
  std::vector<Vertex> vertex_map;  // old index -> new index
  Vertex merged = -1;              // index of the vertex that replaced z
};

/// Replaces the connected set z by one vertex adjacent to N(z).
/// Throws kNotConnected if g[z] is disconnected (or z is empty).
Contraction contract_set(const Graph& g, const VertexSet& z);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_local;  // -1 when the vertex was dropped
  VertexSet to_global;          // local index -> host index
};

/// g[keep], re-indexed by rank within keep. Labels are carried over.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Partition of V(g) into connected classes Q_i with seeds[i] ⊆ Q_i, grown by
/// one multi-source BFS whose queue starts with the seeds in order.
/// Throws kInvalidSeeds for empty, overlapping or disconnected seeds and
/// kNotConnected when g is disconnected.
std::vector<VertexSet> grow_connected_partition(const Graph& g, const std::vector<VertexSet>& seeds);

/// Multi-source BFS distances inside g[allowed]; -1 for unreached vertices.
/// An empty `allowed` means every vertex is allowed.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const std::vector<char>& allowed);

/// Shortest path (as a vertex sequence, source first) from `source` to any
/// vertex of `targets` using only vertices with allowed[v] != 0. Empty when
/// no such path exists. BFS scans neighbours in increasing id.
std::vector<Vertex> shortest_path_to_set(const Graph& g, Vertex source, const std::vector<char>& is_target,
                                         const std::vector<char>& allowed);

}  // namespace pstruct
