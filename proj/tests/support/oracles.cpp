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

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pstruct::testing {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

bool connected_mask(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) return false;
  Mask reach = set & (~set + 1), frontier = reach;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask nxt = adj[static_cast<std::size_t>(v)] & set & ~reach;
    reach |= nxt;
    frontier |= nxt;
  }
  return reach == set;
}

// Index of the pair i < j; independent of n so smaller codes stay valid.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct Canon {
  int n;
  std::vector<Mask> adj;
  std::uint64_t best = ~std::uint64_t{0};

  using Cells = std::vector<std::vector<int>>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        Mask splitter = 0;
        for (int v : cells[si]) splitter |= Mask{1} << v;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
          if (cells[ci].size() < 2) continue;
          std::map<int, std::vector<int>> by_count;
          for (int v : cells[ci]) by_count[std::popcount(adj[static_cast<std::size_t>(v)] & splitter)].push_back(v);
          if (by_count.size() < 2) continue;
          Cells pieces;
          for (auto& [count, vs] : by_count) pieces.push_back(std::move(vs));
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  bool twins(int u, int v) const {
    const Mask strip = ~((Mask{1} << u) | (Mask{1} << v));
    return (adj[static_cast<std::size_t>(u)] & strip) == (adj[static_cast<std::size_t>(v)] & strip);
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::uint64_t code = 0;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if (adj[static_cast<std::size_t>(cells[static_cast<std::size_t>(i)][0])] &
              (Mask{1} << cells[static_cast<std::size_t>(j)][0]))
            code |= std::uint64_t{1} << pair_index(i, j);
      best = std::min(best, code);
      return;
    }
    const auto at = target - cells.begin();
    const std::vector<int> cell = *target;
    bool all_twins = true;
    for (std::size_t a = 0; a < cell.size() && all_twins; ++a)
      for (std::size_t b = a + 1; b < cell.size() && all_twins; ++b) all_twins = twins(cell[a], cell[b]);
    for (std::size_t pick = 0; pick < (all_twins ? 1 : cell.size()); ++pick) {
      Cells next = cells;
      std::vector<int> rest;
      for (std::size_t k = 0; k < cell.size(); ++k)
        if (k != pick) rest.push_back(cell[k]);
      next[static_cast<std::size_t>(at)] = {cell[pick]};
      next.insert(next.begin() + at + 1, rest);
      search(std::move(next));
    }
  }
};

Graph decode(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code & (std::uint64_t{1} << pair_index(i, j))) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace

int brute_treewidth(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 9) throw std::invalid_argument("brute_treewidth: n too large");
  if (n == 0) return -1;
  const std::vector<Mask> base = masks_of(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  int best = n - 1;
  do {
    std::vector<Mask> adj = base;
    Mask alive = (Mask{1} << n) - 1;
    int width = 0;
    for (int v : order) {
      const Mask nb = adj[static_cast<std::size_t>(v)] & alive & ~(Mask{1} << v);
      width = std::max(width, std::popcount(nb));
      if (width >= best) break;
      for (Mask m = nb; m; m &= m - 1) adj[static_cast<std::size_t>(std::countr_zero(m))] |= nb;
      alive &= ~(Mask{1} << v);
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int brute_steiner(const Graph& g, const std::vector<VertexSet>& groups) {
  const int n = g.num_vertices();
  if (n > 16) throw std::invalid_argument("brute_steiner: n too large");
  const std::vector<Mask> adj = masks_of(g);
  std::vector<Mask> gm;
  for (const auto& grp : groups) {
    Mask m = 0;
    for (Vertex v : grp) m |= Mask{1} << v;
    gm.push_back(m);
  }
  int best = INT_MAX;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best) continue;
    bool meets = true;
    for (Mask m : gm) meets = meets && (m & s);
    if (meets && connected_mask(adj, s)) best = size;
  }
  return best;
}

int max_disjoint_subfamily(const std::vector<std::vector<int>>& family) {
  const int m = static_cast<int>(family.size());
  if (m > 20) throw std::invalid_argument("max_disjoint_subfamily: family too large");
  std::vector<std::uint64_t> fm;
  for (const auto& f : family) {
    std::uint64_t b = 0;
    for (int x : f) b |= std::uint64_t{1} << x;
    fm.push_back(b);
  }
  int best = 0;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
    const int size = std::popcount(pick);
    if (size <= best) continue;
    std::uint64_t used = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (pick & (std::uint32_t{1} << i)) {
        ok = (used & fm[static_cast<std::size_t>(i)]) == 0;
        used |= fm[static_cast<std::size_t>(i)];
      }
    if (ok) best = size;
  }
  return best;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 11) throw std::invalid_argument("canonical_code: n too large");
  if (n == 0) return 0;
  Canon c{n, masks_of(g)};
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  c.search({all});
  return c.best;
}

const std::vector<Graph>& connected_graphs(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("connected_graphs: n out of range");
  static std::mutex mu;
  static std::map<int, std::vector<std::uint64_t>> all_codes;  // every class, connected or not
  static std::map<int, std::vector<Graph>> connected;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = connected.find(n); it != connected.end()) return it->second;
  if (all_codes.empty()) all_codes[1] = {0};
  for (int k = 2; k <= n; ++k) {
    if (all_codes.count(k)) continue;
    std::set<std::uint64_t> codes;
    for (std::uint64_t prev : all_codes[k - 1]) {
      const Graph base = decode(k - 1, prev);
      const std::vector<Edge> edges = base.edges();
      for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
        std::vector<Edge> e = edges;
        for (int v = 0; v < k - 1; ++v)
          if (nb & (Mask{1} << v)) e.emplace_back(v, k - 1);
        codes.insert(canonical_code(Graph::from_edges(k, e)));
      }
    }
    all_codes[k] = {codes.begin(), codes.end()};
  }
  std::vector<Graph>& out = connected[n];
  for (std::uint64_t code : all_codes[n]) {
    Graph g = decode(n, code);
    if (connected_mask(masks_of(g), (Mask{1} << n) - 1)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges = random_tree(n, rng).edges();
  const std::vector<Edge> extra = random_graph(n, p, rng).edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  // Shuffle labels so the tree is not always rooted at 0.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[static_cast<std::size_t>(u)];
    v = perm[static_cast<std::size_t>(v)];
  }
  return Graph::from_edges(n, edges);
}

}  // namespace pstruct::testing
