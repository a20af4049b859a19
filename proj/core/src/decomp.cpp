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

#include "pstruct/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "pstruct/error.hpp"

namespace pstruct {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

namespace {

TdReport violation(std::string axiom, std::string detail) {
  return TdReport{false, std::move(axiom), std::move(detail)};
}

}  // namespace

TdReport validate_td(const Graph& g, const TreeDecomposition& td) {
  const int n = g.num_vertices();
  const int nodes = td.num_nodes();

  for (int x = 0; x < nodes; ++x) {
    const auto& bag = td.bags[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] < 0 || bag[i] >= n)
        return violation("bag", "node " + std::to_string(x) + " holds out-of-range vertex " + std::to_string(bag[i]));
      if (i > 0 && bag[i - 1] >= bag[i])
        return violation("bag", "node " + std::to_string(x) + " is not strictly increasing");
    }
  }

  if (nodes == 0) {
    if (n == 0) return {};
    return violation("tree", "decomposition has no nodes");
  }
  if (td.edges.size() != static_cast<std::size_t>(nodes - 1))
    return violation("tree", std::to_string(td.edges.size()) + " edges on " + std::to_string(nodes) + " nodes");
  std::vector<int> uf(static_cast<std::size_t>(nodes));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int a) {
    while (uf[static_cast<std::size_t>(a)] != a) a = uf[static_cast<std::size_t>(a)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(a)])];
    return a;
  };
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
      return violation("tree", "bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
    int ra = find(a), rb = find(b);
    if (ra == rb) return violation("tree", "cycle through edge " + std::to_string(a) + "-" + std::to_string(b));
    uf[static_cast<std::size_t>(ra)] = rb;
  }

  std::vector<std::vector<int>> trace(static_cast<std::size_t>(n));
  for (int x = 0; x < nodes; ++x)
    for (Vertex v : td.bags[static_cast<std::size_t>(x)]) trace[static_cast<std::size_t>(v)].push_back(x);
  for (Vertex v = 0; v < n; ++v)
    if (trace[static_cast<std::size_t>(v)].empty()) return violation("vertex", "vertex " + std::to_string(v) + " is in no bag");

  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x : trace[static_cast<std::size_t>(u)]) {
      if (set_contains(td.bags[static_cast<std::size_t>(x)], v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return violation("edge", "edge " + std::to_string(u) + "-" + std::to_string(v) + " is uncovered");
  }

  // A vertex's nodes induce a forest; it is a tree iff it has |nodes|-1 edges.
  std::vector<int> inner(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : td.edges)
    for (Vertex v : set_intersection(td.bags[static_cast<std::size_t>(a)], td.bags[static_cast<std::size_t>(b)]))
      ++inner[static_cast<std::size_t>(v)];
  for (Vertex v = 0; v < n; ++v) {
    if (inner[static_cast<std::size_t>(v)] + 1 != static_cast<int>(trace[static_cast<std::size_t>(v)].size()))
      return violation("trace", "vertex " + std::to_string(v) + " has a disconnected trace");
  }
  return {};
}

TreeDecomposition td_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  require(static_cast<int>(order.size()) == n, ErrorKind::kInvalidInput, "ordering length differs from vertex count");
  if (n == 0) return TreeDecomposition{{VertexSet{}}, {}};
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    require(v >= 0 && v < n && pos[static_cast<std::size_t>(v)] < 0, ErrorKind::kInvalidInput, "ordering is not a permutation");
    pos[static_cast<std::size_t>(v)] = i;
  }

  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());

  // Node i is the bag created when order[i] is eliminated.
  std::vector<VertexSet> bags(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[static_cast<std::size_t>(i)];
    VertexSet higher;
    for (Vertex w : adj[static_cast<std::size_t>(v)])
      if (pos[static_cast<std::size_t>(w)] > i) higher.push_back(w);
    for (std::size_t a = 0; a < higher.size(); ++a) {
      for (std::size_t b = a + 1; b < higher.size(); ++b) {
        auto& la = adj[static_cast<std::size_t>(higher[a])];
        auto it = std::lower_bound(la.begin(), la.end(), higher[b]);
        if (it == la.end() || *it != higher[b]) {
          la.insert(it, higher[b]);
          auto& lb = adj[static_cast<std::size_t>(higher[b])];
          lb.insert(std::lower_bound(lb.begin(), lb.end(), higher[a]), higher[a]);
        }
      }
    }
    int best = -1;
    for (Vertex w : higher)
      if (best < 0 || pos[static_cast<std::size_t>(w)] < best) best = pos[static_cast<std::size_t>(w)];
    parent[static_cast<std::size_t>(i)] = best;
    higher.push_back(v);
    bags[static_cast<std::size_t>(i)] = make_set(std::move(higher));
  }

  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  int prev_root = -1;
  for (int i = 0; i < n; ++i) {
    int p = parent[static_cast<std::size_t>(i)];
    if (p < 0) {
      // Roots of different components are chained so the result is one tree.
      if (prev_root >= 0) p = prev_root;
      prev_root = i;
    }
    if (p >= 0) {
      nbr[static_cast<std::size_t>(i)].push_back(p);
      nbr[static_cast<std::size_t>(p)].push_back(i);
    }
  }

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (!alive[static_cast<std::size_t>(a)]) continue;
      for (int b : nbr[static_cast<std::size_t>(a)]) {
        if (!is_subset(bags[static_cast<std::size_t>(a)], bags[static_cast<std::size_t>(b)])) continue;
        alive[static_cast<std::size_t>(a)] = 0;
        for (int c : nbr[static_cast<std::size_t>(a)]) {
          auto& lc = nbr[static_cast<std::size_t>(c)];
          lc.erase(std::remove(lc.begin(), lc.end(), a), lc.end());
          if (c != b) {
            lc.push_back(b);
            nbr[static_cast<std::size_t>(b)].push_back(c);
          }
        }
        nbr[static_cast<std::size_t>(a)].clear();
        changed = true;
        break;
      }
    }
  }

  TreeDecomposition td;
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (!alive[static_cast<std::size_t>(a)]) continue;
    id[static_cast<std::size_t>(a)] = td.num_nodes();
    td.bags.push_back(bags[static_cast<std::size_t>(a)]);
  }
  for (int a = 0; a < n; ++a)
    for (int b : nbr[static_cast<std::size_t>(a)])
      if (a < b) td.edges.emplace_back(id[static_cast<std::size_t>(a)], id[static_cast<std::size_t>(b)]);
  std::sort(td.edges.begin(), td.edges.end());
  return td;
}

Layering bfs_layering(const Graph& g, Vertex root) {
  require(root >= 0 && root < g.num_vertices(), ErrorKind::kInvalidInput, "layering root out of range");
  require(is_connected(g), ErrorKind::kNotConnected, "layering needs a connected graph");
  std::vector<int> dist = bfs_distances(g, {root}, {});
  Layering layers;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto d = static_cast<std::size_t>(dist[static_cast<std::size_t>(v)]);
    if (layers.size() <= d) layers.resize(d + 1);
    layers[d].push_back(v);
  }
  return layers;
}

std::vector<int> layer_index(int n, const Layering& layering) {
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < layering.size(); ++i)
    for (Vertex v : layering[i])
      if (v >= 0 && v < n) idx[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return idx;
}

int layered_width(const TreeDecomposition& td, const Layering& layering, int n) {
  std::vector<int> idx = layer_index(n, layering);
  std::vector<int> count(layering.size(), 0);
  int best = 0;
  for (const auto& bag : td.bags) {
    for (Vertex v : bag) {
      int l = idx[static_cast<std::size_t>(v)];
      if (l >= 0) best = std::max(best, ++count[static_cast<std::size_t>(l)]);
    }
    for (Vertex v : bag) {
      int l = idx[static_cast<std::size_t>(v)];
      if (l >= 0) count[static_cast<std::size_t>(l)] = 0;
    }
  }
  return best;
}

int find_clique_bag(const TreeDecomposition& td, const VertexSet& clique) {
  for (int x = 0; x < td.num_nodes(); ++x)
    if (is_subset(clique, td.bags[static_cast<std::size_t>(x)])) return x;
  fail(ErrorKind::kNotFound, "no bag contains the requested clique");
}

}  // namespace pstruct
