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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <tuple>

#include "pstruct/decomp.hpp"
#include "pstruct/error.hpp"

namespace pstruct {

namespace {

bool has(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

void insert_sorted(VertexSet& s, Vertex v) { s.insert(std::lower_bound(s.begin(), s.end(), v), v); }

void erase_sorted(VertexSet& s, Vertex v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

long long fill_of(const std::vector<VertexSet>& adj, Vertex v) {
  const auto& nb = adj[static_cast<std::size_t>(v)];
  long long missing = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!has(adj[static_cast<std::size_t>(nb[i])], nb[j])) ++missing;
  return missing;
}

}  // namespace

TreeDecomposition heuristic_td(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());

  using Key = std::tuple<long long, int, Vertex>;  // fill, degree, id
  std::set<Key> queue;
  std::vector<Key> key(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    key[static_cast<std::size_t>(v)] = {fill_of(adj, v), g.degree(v), v};
    queue.insert(key[static_cast<std::size_t>(v)]);
  }

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  while (!queue.empty()) {
    Vertex x = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    order.push_back(x);
    VertexSet nb = std::move(adj[static_cast<std::size_t>(x)]);
    adj[static_cast<std::size_t>(x)].clear();
    for (Vertex w : nb) erase_sorted(adj[static_cast<std::size_t>(w)], x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!has(adj[static_cast<std::size_t>(nb[i])], nb[j])) {
          insert_sorted(adj[static_cast<std::size_t>(nb[i])], nb[j]);
          insert_sorted(adj[static_cast<std::size_t>(nb[j])], nb[i]);
        }
      }
    }
    // Fill values can only change within distance two of x.
    VertexSet affected;
    for (Vertex w : nb) {
      if (!touched[static_cast<std::size_t>(w)]) {
        touched[static_cast<std::size_t>(w)] = 1;
        affected.push_back(w);
      }
      for (Vertex z : adj[static_cast<std::size_t>(w)]) {
        if (!touched[static_cast<std::size_t>(z)]) {
          touched[static_cast<std::size_t>(z)] = 1;
          affected.push_back(z);
        }
      }
    }
    for (Vertex w : affected) {
      touched[static_cast<std::size_t>(w)] = 0;
      queue.erase(key[static_cast<std::size_t>(w)]);
      key[static_cast<std::size_t>(w)] = {fill_of(adj, w), static_cast<int>(adj[static_cast<std::size_t>(w)].size()), w};
      queue.insert(key[static_cast<std::size_t>(w)]);
    }
  }
  return td_from_ordering(g, order);
}

ExactTreewidth exact_treewidth_small(const Graph& g, int cap) {
  const int n = g.num_vertices();
  require(n <= cap && n <= 24, ErrorKind::kTooLarge,
          "exact treewidth limited to " + std::to_string(std::min(cap, 24)) + " vertices, got " + std::to_string(n));
  if (n == 0) return ExactTreewidth{-1, TreeDecomposition{{VertexSet{}}, {}}};

  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    nbr[static_cast<std::size_t>(u)] |= 1u << v;
    nbr[static_cast<std::size_t>(v)] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // best[S]: smallest possible max back-degree when S is eliminated first.
  std::vector<std::int8_t> best(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  best[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int value = 127;
    int pick = -1;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prefix = s & ~(1u << v);
      int sub = best[prefix];
      if (sub >= value) continue;
      // Vertices outside s reachable from v through prefix.
      std::uint32_t reach = 1u << v;
      std::uint32_t frontier = reach;
      std::uint32_t boundary = 0;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
        boundary |= next;
        frontier = next & prefix & ~reach;
        reach |= frontier;
      }
      int q = std::popcount(boundary & ~s);
      int cand = std::max(sub, q);
      if (cand < value) {
        value = cand;
        pick = v;
      }
    }
    best[s] = static_cast<std::int8_t>(value);
    last[s] = static_cast<std::int8_t>(pick);
  }

  std::vector<Vertex> order;
  for (std::uint32_t s = full; s; s &= ~(1u << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  ExactTreewidth out;
  out.width = best[full];
  out.td = td_from_ordering(g, order);
  PSTRUCT_ASSERT(out.td.width() == out.width, "witness ordering does not realise the optimum");
  return out;
}

}  // namespace pstruct
