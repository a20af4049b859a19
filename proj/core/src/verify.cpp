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

#include "pstruct/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace pstruct {

namespace {

std::string str(int v) { return std::to_string(v); }

// Plain union-find; the engines never see it.
struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(static_cast<std::size_t>(n)) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[static_cast<std::size_t>(x)] != x) x = up[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Is the set `s` (owner[v] == id) connected in g? Checked with union-find
// over the edges, independent of the graph-core traversals.
bool set_connected(const Graph& g, const std::vector<int>& owner, int id, const VertexSet& s) {
  if (s.empty()) return false;
  Dsu d(g.num_vertices());
  int joins = 0;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (v < w && owner[static_cast<std::size_t>(w)] == id && d.unite(v, w)) ++joins;
  return joins == static_cast<int>(s.size()) - 1;
}

}  // namespace

Verdict check_td(const Graph& g, const TreeDecomposition& td) {
  const int n = g.num_vertices();
  const int nodes = td.num_nodes();
  if (nodes == 0) return n == 0 ? Verdict::pass() : Verdict::fail("decomposition has no bags");
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (int x = 0; x < nodes; ++x) {
    std::set<Vertex> seen;
    for (Vertex v : td.bags[static_cast<std::size_t>(x)]) {
      if (v < 0 || v >= n) return Verdict::fail("bag " + str(x) + " holds unknown vertex " + str(v));
      if (!seen.insert(v).second) return Verdict::fail("bag " + str(x) + " repeats vertex " + str(v));
      holders[static_cast<std::size_t>(v)].push_back(x);
    }
  }
  if (static_cast<int>(td.edges.size()) != nodes - 1)
    return Verdict::fail("tree has " + str(static_cast<int>(td.edges.size())) + " edges for " + str(nodes) + " nodes");
  Dsu tree(nodes);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) return Verdict::fail("tree edge to unknown node");
    if (!tree.unite(a, b)) return Verdict::fail("tree has a cycle through " + str(a) + "-" + str(b));
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& h = holders[static_cast<std::size_t>(v)];
    if (h.empty()) return Verdict::fail("vertex " + str(v) + " is in no bag");
    std::vector<char> mark(static_cast<std::size_t>(nodes), 0);
    for (int x : h) mark[static_cast<std::size_t>(x)] = 1;
    int inside = 0;
    for (auto [a, b] : td.edges)
      if (mark[static_cast<std::size_t>(a)] && mark[static_cast<std::size_t>(b)]) ++inside;
    if (inside != static_cast<int>(h.size()) - 1)
      return Verdict::fail("bags holding vertex " + str(v) + " are not connected in the tree");
  }
  for (auto [u, v] : g.edges()) {
    const auto& hu = holders[static_cast<std::size_t>(u)];
    const auto& hv = holders[static_cast<std::size_t>(v)];
    bool covered = false;
    for (int x : hu)
      if (std::find(hv.begin(), hv.end(), x) != hv.end()) {
        covered = true;
        break;
      }
    if (!covered) return Verdict::fail("edge " + str(u) + "-" + str(v) + " is in no bag");
  }
  return Verdict::pass();
}

Verdict check_layering(const Graph& g, const Layering& layering) {
  const int n = g.num_vertices();
  std::vector<int> at(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < layering.size(); ++i)
    for (Vertex v : layering[i]) {
      if (v < 0 || v >= n) return Verdict::fail("layer " + str(static_cast<int>(i)) + " holds unknown vertex " + str(v));
      if (at[static_cast<std::size_t>(v)] >= 0) return Verdict::fail("vertex " + str(v) + " is in two layers");
      at[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  for (Vertex v = 0; v < n; ++v)
    if (at[static_cast<std::size_t>(v)] < 0) return Verdict::fail("vertex " + str(v) + " is in no layer");
  for (auto [u, v] : g.edges())
    if (std::abs(at[static_cast<std::size_t>(u)] - at[static_cast<std::size_t>(v)]) > 1)
      return Verdict::fail("edge " + str(u) + "-" + str(v) + " skips a layer");
  return Verdict::pass();
}

Verdict check_simple(const TreeDecomposition& td, int k) {
  if (k < 1) return Verdict::fail("simplicity needs k >= 1");
  std::map<std::vector<int>, int> count;
  for (int x = 0; x < td.num_nodes(); ++x) {
    std::vector<int> bag = td.bags[static_cast<std::size_t>(x)];
    std::sort(bag.begin(), bag.end());
    const int b = static_cast<int>(bag.size());
    if (b > k + 1) return Verdict::fail("bag " + str(x) + " has " + str(b) + " nodes, width above " + str(k));
    if (b < k) continue;
    // Enumerate k-subsets with a selection mask.
    std::vector<char> pick(static_cast<std::size_t>(b), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
      std::vector<int> sub;
      for (int i = 0; i < b; ++i)
        if (pick[static_cast<std::size_t>(i)]) sub.push_back(bag[static_cast<std::size_t>(i)]);
      if (++count[sub] > 2) {
        std::string names;
        for (int v : sub) names += (names.empty() ? "" : ",") + str(v);
        return Verdict::fail("set {" + names + "} lies in more than two bags");
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return Verdict::pass();
}

Verdict check_unique_full_bag(const TreeDecomposition& td, const std::vector<int>& members) {
  int full = 0;
  for (const auto& bag : td.bags) {
    bool all = true;
    for (int m : members)
      if (std::find(bag.begin(), bag.end(), m) == bag.end()) {
        all = false;
        break;
      }
    full += all ? 1 : 0;
  }
  if (full != 1) return Verdict::fail(str(full) + " bags contain all roots, expected exactly one");
  return Verdict::pass();
}

Verdict check_partition_result(const Graph& g, const TreeDecomposition* original_td, const PartitionResult& r,
                               int s, int t, const PartitionCheck& extra) {
  const int n = g.num_vertices();
  const int np = static_cast<int>(r.parts.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < np; ++p) {
    const auto& part = r.parts[static_cast<std::size_t>(p)];
    if (part.empty()) return Verdict::fail("part " + str(p) + " is empty");
    for (Vertex v : part) {
      if (v < 0 || v >= n) return Verdict::fail("part " + str(p) + " holds unknown vertex " + str(v));
      if (owner[static_cast<std::size_t>(v)] >= 0)
        return Verdict::fail("vertex " + str(v) + " is in parts " + str(owner[static_cast<std::size_t>(v)]) + " and " + str(p));
      owner[static_cast<std::size_t>(v)] = p;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[static_cast<std::size_t>(v)] < 0) return Verdict::fail("vertex " + str(v) + " is in no part");

  if (r.quotient.num_vertices() != np)
    return Verdict::fail("quotient has " + str(r.quotient.num_vertices()) + " vertices for " + str(np) + " parts");
  for (auto [u, v] : g.edges()) {
    const int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
    if (a != b && !r.quotient.adjacent(a, b))
      return Verdict::fail("edge " + str(u) + "-" + str(v) + " joins parts " + str(a) + " and " + str(b) +
                           " which are not adjacent in the quotient");
  }

  std::set<int> root_seen;
  for (int root : r.roots) {
    if (root < 0 || root >= np) return Verdict::fail("root index " + str(root) + " is not a part");
    if (!root_seen.insert(root).second) return Verdict::fail("root index " + str(root) + " repeats");
  }

  if (Verdict h = check_td(r.quotient, r.h_cert); !h) return Verdict::fail("quotient decomposition: " + h.violation);
  if (r.h_cert.width() > s)
    return Verdict::fail("quotient decomposition has width " + str(r.h_cert.width()) + " above " + str(s));

  if (original_td) {
    if (!r.cover_certs) return Verdict::fail("cover certificates are missing");
    if (static_cast<int>(r.cover_certs->size()) != np) return Verdict::fail("cover certificate count differs from part count");
    const int nodes = original_td->num_nodes();
    for (int p = 0; p < np; ++p) {
      const auto& cert = (*r.cover_certs)[static_cast<std::size_t>(p)];
      if (static_cast<int>(cert.size()) > t - 1)
        return Verdict::fail("cert too wide: part " + str(p) + " lists " + str(static_cast<int>(cert.size())) +
                             " bags, at most " + str(t - 1) + " allowed");
      std::vector<char> in(static_cast<std::size_t>(n), 0);
      for (int x : cert) {
        if (x < 0 || x >= nodes) return Verdict::fail("part " + str(p) + " cites unknown bag " + str(x));
        for (Vertex v : original_td->bags[static_cast<std::size_t>(x)])
          if (v >= 0 && v < n) in[static_cast<std::size_t>(v)] = 1;
      }
      for (Vertex v : r.parts[static_cast<std::size_t>(p)])
        if (!in[static_cast<std::size_t>(v)])
          return Verdict::fail("part " + str(p) + " vertex " + str(v) + " is outside its certified bags");
    }
  }

  if (extra.m_bound) {
    const long long cap = static_cast<long long>(std::floor(*extra.m_bound + 1e-9));
    for (int p = 0; p < np; ++p)
      if (static_cast<long long>(r.parts[static_cast<std::size_t>(p)].size()) > cap)
        return Verdict::fail("part " + str(p) + " has " + str(static_cast<int>(r.parts[static_cast<std::size_t>(p)].size())) +
                             " vertices, above " + std::to_string(cap));
  }

  if (r.simple) {
    if (Verdict v = check_simple(r.h_cert, s); !v) return Verdict::fail("simplicity: " + v.violation);
    if (extra.unique_full_bag && static_cast<int>(r.roots.size()) == s)
      if (Verdict v = check_unique_full_bag(r.h_cert, r.roots); !v) return v;
  }
  return Verdict::pass();
}

Verdict check_product_embedding(const Graph& g, const Graph& h, const ProductEmbedding& emb, bool layered) {
  const int n = g.num_vertices();
  if (static_cast<int>(emb.image.size()) != n) return Verdict::fail("embedding does not cover every vertex");
  if (layered && !emb.layered) return Verdict::fail("embedding carries no layers");
  std::set<std::tuple<int, int, int>> used;
  for (Vertex v = 0; v < n; ++v) {
    const auto& im = emb.image[static_cast<std::size_t>(v)];
    if (im.part < 0 || im.part >= h.num_vertices()) return Verdict::fail("vertex " + str(v) + " maps to unknown part");
    if (im.slot < 1 || im.slot > emb.m)
      return Verdict::fail("vertex " + str(v) + " uses slot " + str(im.slot) + " outside 1.." + str(emb.m));
    if (layered && im.layer < 0) return Verdict::fail("vertex " + str(v) + " has no layer");
    const int layer = layered ? im.layer : -1;
    if (!used.emplace(im.part, layer, im.slot).second) return Verdict::fail("embedding is not injective at vertex " + str(v));
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = emb.image[static_cast<std::size_t>(u)];
    const auto& b = emb.image[static_cast<std::size_t>(v)];
    if (a.part != b.part && !h.adjacent(a.part, b.part))
      return Verdict::fail("edge " + str(u) + "-" + str(v) + " maps to non-adjacent parts " + str(a.part) + ", " + str(b.part));
    if (layered && std::abs(a.layer - b.layer) > 1)
      return Verdict::fail("edge " + str(u) + "-" + str(v) + " jumps from layer " + str(a.layer) + " to " + str(b.layer));
  }
  return Verdict::pass();
}

Verdict check_witness(const Graph& g, const MinorWitness& w, int s, int t) {
  const int n = g.num_vertices();
  const int na = static_cast<int>(w.a_sets.size()), nb = static_cast<int>(w.b_sets.size());
  if (s >= 0 && na != s) return Verdict::fail("expected " + str(s) + " clique-side sets, got " + str(na));
  if (w.flavor == MinorWitness::Flavor::kKt) {
    if (nb != 0) return Verdict::fail("a clique witness has no second side");
  } else if (t >= 0 && nb != t) {
    return Verdict::fail("expected " + str(t) + " second-side sets, got " + str(nb));
  }
  const int k = na + nb;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  auto set_at = [&](int i) -> const VertexSet& {
    return i < na ? w.a_sets[static_cast<std::size_t>(i)] : w.b_sets[static_cast<std::size_t>(i - na)];
  };
  auto name = [&](int i) { return i < na ? "A" + str(i) : "B" + str(i - na); };
  for (int i = 0; i < k; ++i)
    for (Vertex v : set_at(i)) {
      if (v < 0 || v >= n) return Verdict::fail("set " + name(i) + " holds unknown vertex " + str(v));
      if (owner[static_cast<std::size_t>(v)] >= 0)
        return Verdict::fail("vertex " + str(v) + " is in " + name(owner[static_cast<std::size_t>(v)]) + " and " + name(i));
      owner[static_cast<std::size_t>(v)] = i;
    }
  for (int i = 0; i < k; ++i)
    if (!set_connected(g, owner, i, set_at(i))) return Verdict::fail("set " + name(i) + " is empty or disconnected");
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(k), std::vector<char>(static_cast<std::size_t>(k), 0));
  for (auto [u, v] : g.edges()) {
    const int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0 && a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        return Verdict::fail("no edge between " + name(i) + " and " + name(j));
  if (w.flavor == MinorWitness::Flavor::kJ && nb > 0) {
    Dsu d(nb);
    int joins = 0;
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j)
        if (adj[static_cast<std::size_t>(na + i)][static_cast<std::size_t>(na + j)] && d.unite(i, j)) ++joins;
    if (joins != nb - 1) return Verdict::fail("second-side sets are not connected to each other");
  }
  return Verdict::pass();
}

}  // namespace pstruct
