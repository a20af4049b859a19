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

#include <cstdint>
#include <functional>

#include "pstruct/error.hpp"
#include "pstruct/verify.hpp"

// Brute force over partitions of one component into exactly k connected
// blocks. For a connected target every model extends to such a partition:
// leftover vertices can always be absorbed by a neighbouring branch set,
// which only adds adjacencies. So the search is complete.

namespace pstruct {

namespace {

using Mask = std::uint32_t;

struct Search {
  const Graph& g;
  std::vector<Vertex> verts;  // the component, in increasing order
  std::vector<int> local;     // host vertex -> position in verts, or -1
  int k;
  int s;
  MinorWitness::Flavor flavor;
  std::vector<int> block;     // block of verts[i]
  std::optional<MinorWitness> found;

  bool blocks_connected(std::vector<Mask>& members) const {
    const int nc = static_cast<int>(verts.size());
    members.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < nc; ++i) members[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])] |= Mask{1} << i;
    for (int b = 0; b < k; ++b) {
      const Mask want = members[static_cast<std::size_t>(b)];
      Mask reach = want & (~want + 1);  // lowest member
      Mask frontier = reach;
      while (frontier) {
        const int i = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        for (Vertex w : g.neighbors(verts[static_cast<std::size_t>(i)])) {
          const int j = local[static_cast<std::size_t>(w)];
          const Mask bit = Mask{1} << j;
          if ((want & bit) && !(reach & bit)) {
            reach |= bit;
            frontier |= bit;
          }
        }
      }
      if (reach != want) return false;
    }
    return true;
  }

  // Chooses which blocks form the clique side. Returns the chosen mask or 0.
  Mask pick_clique_side(const std::vector<Mask>& adj) const {
    const Mask all = (k == 32) ? ~Mask{0} : ((Mask{1} << k) - 1);
    Mask universal = 0;
    for (int b = 0; b < k; ++b)
      if ((adj[static_cast<std::size_t>(b)] | (Mask{1} << b)) == all) universal |= Mask{1} << b;
    if (__builtin_popcount(universal) < s) return 0;
    if (flavor != MinorWitness::Flavor::kJ) {
      Mask pick = 0;
      for (Mask u = universal; u && __builtin_popcount(pick) < s; u &= u - 1) pick |= u & (~u + 1);
      return pick;
    }
    // J: the rest must be connected through its own adjacencies.
    for (Mask sub = universal;; sub = (sub - 1) & universal) {
      if (__builtin_popcount(sub) == s) {
        const Mask rest = all & ~sub;
        if (rest == 0) return sub;
        Mask reach = rest & (~rest + 1), frontier = reach;
        while (frontier) {
          const int b = __builtin_ctz(frontier);
          frontier &= frontier - 1;
          const Mask nxt = adj[static_cast<std::size_t>(b)] & rest & ~reach;
          reach |= nxt;
          frontier |= nxt;
        }
        if (reach == rest) return sub;
      }
      if (sub == 0) break;
    }
    return 0;
  }

  void leaf() {
    std::vector<Mask> members;
    if (!blocks_connected(members)) return;
    std::vector<Mask> adj(static_cast<std::size_t>(k), 0);
    const int nc = static_cast<int>(verts.size());
    for (int i = 0; i < nc; ++i)
      for (Vertex w : g.neighbors(verts[static_cast<std::size_t>(i)])) {
        const int a = block[static_cast<std::size_t>(i)];
        const int b = block[static_cast<std::size_t>(local[static_cast<std::size_t>(w)])];
        if (a != b) adj[static_cast<std::size_t>(a)] |= Mask{1} << b;
      }
    const Mask side = pick_clique_side(adj);
    if (side == 0 && s > 0) return;
    MinorWitness w;
    w.flavor = flavor;
    auto as_set = [&](int b) {
      VertexSet out;
      for (int i = 0; i < nc; ++i)
        if (block[static_cast<std::size_t>(i)] == b) out.push_back(verts[static_cast<std::size_t>(i)]);
      return out;
    };
    for (int b = 0; b < k; ++b) {
      if (side & (Mask{1} << b)) w.a_sets.push_back(as_set(b));
      else w.b_sets.push_back(as_set(b));
    }
    found = std::move(w);
  }

  // Restricted growth strings: vertex i joins an existing block or opens
  // the next one.
  void assign(int i, int used) {
    if (found) return;
    const int nc = static_cast<int>(verts.size());
    if (i == nc) {
      if (used == k) leaf();
      return;
    }
    if (k - used > nc - i) return;
    for (int b = 0; b < used && !found; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      assign(i + 1, used);
    }
    if (used < k && !found) {
      block[static_cast<std::size_t>(i)] = used;
      assign(i + 1, used + 1);
    }
  }
};

}  // namespace

std::optional<MinorWitness> find_minor_model(const Graph& g, const MinorTarget& target, int cap) {
  const int n = g.num_vertices();
  require(n <= cap && cap <= 31, ErrorKind::kTooLarge,
          "minor search is limited to " + std::to_string(std::min(cap, 31)) + " vertices");
  require(target.s >= 0 && target.t >= 0, ErrorKind::kBadParams, "negative minor size");
  const bool clique = target.flavor == MinorWitness::Flavor::kKt;
  const int s = target.s;
  const int t = clique ? 0 : target.t;
  const int k = s + t;
  if (k == 0) return MinorWitness{target.flavor, {}, {}};
  if (target.flavor == MinorWitness::Flavor::kKst && s == 0) {
    // t isolated vertices: any t vertices will do.
    if (n < t) return std::nullopt;
    MinorWitness w{target.flavor, {}, {}};
    for (Vertex v = 0; v < t; ++v) w.b_sets.push_back({v});
    return w;
  }
  const long long need_edges = static_cast<long long>(s) * (s - 1) / 2 + static_cast<long long>(s) * t +
                               (target.flavor == MinorWitness::Flavor::kJ && t > 0 ? t - 1 : 0);

  for (const auto& comp : components(g)) {
    const int nc = static_cast<int>(comp.size());
    if (nc < k) continue;
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < nc; ++i) local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
    long long comp_edges = 0;
    for (Vertex v : comp) comp_edges += g.degree(v);
    if (comp_edges / 2 < need_edges) continue;
    Search search{g, comp, local, k, s, target.flavor, std::vector<int>(static_cast<std::size_t>(nc), 0), std::nullopt};
    search.assign(0, 0);
    if (search.found) {
      Verdict v = check_witness(g, *search.found, s, clique ? -1 : t);
      PSTRUCT_ASSERT(v.ok, "minor search produced a bad witness: " + v.violation);
      return search.found;
    }
  }
  return std::nullopt;
}

}  // namespace pstruct
