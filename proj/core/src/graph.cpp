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

#include "pstruct/graph.hpp"

#include <algorithm>
#include <deque>

#include "pstruct/error.hpp"

namespace pstruct {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kInvalidSeeds: return "InvalidSeeds";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kNotFound: return "NotFound";
    case ErrorKind::kNotSeparating: return "NotSeparating";
    case ErrorKind::kTooManyGroups: return "TooManyGroups";
    case ErrorKind::kNotTriangulation: return "NotTriangulation";
    case ErrorKind::kBadEmbedding: return "BadEmbedding";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kBadParams: return "BadParams";
    case ErrorKind::kInternal: return "InternalAssertion";
  }
  return "Unknown";
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::size_t* dropped) {
  require(n >= 0, ErrorKind::kInvalidInput, "negative vertex count");
  Graph g(n);
  std::size_t bad = 0;
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0 && u < n && v < n, ErrorKind::kInvalidInput,
            "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) {
      ++bad;
      continue;
    }
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t total = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    auto before = nb.size();
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    bad += before - nb.size();  // each duplicate edge is seen from both ends
    total += nb.size();
  }
  g.num_edges_ = total / 2;
  if (dropped) {
    // Loops were counted once; duplicates twice.
    std::size_t loops = 0;
    for (auto [u, v] : edges) loops += (u == v);
    *dropped = loops + (bad - loops) / 2;
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

void Graph::set_labels(std::vector<std::string> labels) {
  require(labels.empty() || labels.size() == adj_.size(), ErrorKind::kInvalidInput,
          "label count does not match vertex count");
  labels_ = std::move(labels);
}

// ---------------------------------------------------------------------------

VertexSet make_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

VertexSet all_vertices(int n) {
  VertexSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

VertexSet complement(int n, const VertexSet& s) { return set_difference(all_vertices(n), s); }

std::vector<char> mask_of(int n, const VertexSet& s) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) m[static_cast<std::size_t>(v)] = 1;
  return m;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> components(const Graph& g, const VertexSet& restrict) {
  const int n = g.num_vertices();
  std::vector<char> allowed = mask_of(n, restrict);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start : restrict) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    VertexSet comp;
    stack.assign(1, start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (allowed[wi] && !seen[wi]) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, all_vertices(g.num_vertices())); }

bool is_connected(const Graph& g, const VertexSet& s) { return components(g, s).size() <= 1; }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<Vertex> contraction_map(int n, const VertexSet& z) {
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<char> in_z = mask_of(n, z);
  const Vertex merged = n - static_cast<int>(z.size());
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) map[static_cast<std::size_t>(v)] = in_z[static_cast<std::size_t>(v)] ? merged : next++;
  return map;
}

Contraction contract_set(const Graph& g, const VertexSet& z) {
  require(!z.empty(), ErrorKind::kNotConnected, "cannot contract an empty set");
  require(is_connected(g, z), ErrorKind::kNotConnected, "contracted set is not connected");
  const int n = g.num_vertices();
  Contraction out;
  out.vertex_map = contraction_map(n, z);
  out.merged = n - static_cast<int>(z.size());
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = out.vertex_map[static_cast<std::size_t>(u)];
    Vertex b = out.vertex_map[static_cast<std::size_t>(v)];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph::from_edges(out.merged + 1, edges);
  if (g.has_labels()) {
    std::vector<std::string> labels(static_cast<std::size_t>(out.merged + 1));
    std::string merged_label;
    for (Vertex v = 0; v < n; ++v) {
      Vertex m = out.vertex_map[static_cast<std::size_t>(v)];
      if (m == out.merged) {
        if (!merged_label.empty()) merged_label += '+';
        merged_label += g.label(v);
      } else {
        labels[static_cast<std::size_t>(m)] = g.label(v);
      }
    }
    labels[static_cast<std::size_t>(out.merged)] = merged_label;
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.to_local.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  out.to_global = keep;
  for (std::size_t i = 0; i < keep.size(); ++i) out.to_local[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      Vertex lw = out.to_local[static_cast<std::size_t>(w)];
      if (lw > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), lw);
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(keep.size()), edges);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (Vertex v : keep) labels.push_back(g.label(v));
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

std::vector<VertexSet> grow_connected_partition(const Graph& g, const std::vector<VertexSet>& seeds) {
  const int n = g.num_vertices();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    require(!seeds[i].empty(), ErrorKind::kInvalidSeeds, "empty seed " + std::to_string(i));
    require(is_connected(g, seeds[i]), ErrorKind::kInvalidSeeds, "seed " + std::to_string(i) + " is not connected");
    for (Vertex v : seeds[i]) {
      require(v >= 0 && v < n, ErrorKind::kInvalidSeeds, "seed vertex out of range");
      require(cls[static_cast<std::size_t>(v)] < 0, ErrorKind::kInvalidSeeds, "seeds overlap at vertex " + std::to_string(v));
      cls[static_cast<std::size_t>(v)] = static_cast<int>(i);
      queue.push_back(v);
    }
  }
  require(is_connected(g), ErrorKind::kNotConnected, "graph is disconnected");
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (cls[wi] < 0) {
        cls[wi] = cls[static_cast<std::size_t>(v)];
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexSet> out(seeds.size());
  for (Vertex v = 0; v < n; ++v) {
    int c = cls[static_cast<std::size_t>(v)];
    if (c >= 0) out[static_cast<std::size_t>(c)].push_back(v);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const std::vector<char>& allowed) {
  const int n = g.num_vertices();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue;
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[static_cast<std::size_t>(v)]; };
  for (Vertex s : sources) {
    if (!ok(s) || dist[static_cast<std::size_t>(s)] == 0) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (dist[wi] < 0 && ok(w)) {
        dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> shortest_path_to_set(const Graph& g, Vertex source, const std::vector<char>& is_target,
                                         const std::vector<char>& allowed) {
  const int n = g.num_vertices();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  std::deque<Vertex> queue{source};
  parent[static_cast<std::size_t>(source)] = -1;
  Vertex hit = -1;
  while (!queue.empty() && hit < 0) {
    Vertex v = queue.front();
    queue.pop_front();
    if (is_target[static_cast<std::size_t>(v)]) {
      hit = v;
      break;
    }
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (parent[wi] == -2 && allowed[wi]) {
        parent[wi] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = hit; v >= 0; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace pstruct
