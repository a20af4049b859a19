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
#include <cmath>
#include <cstdint>
#include <queue>

#include "pstruct/error.hpp"
#include "pstruct/hitting.hpp"

namespace pstruct {

namespace {

constexpr int kInf = 1 << 29;

enum class Step : std::uint8_t { kLeaf, kAbsorb, kMerge, kGrow };

struct Back {
  Step step = Step::kLeaf;
  int arg = -1;  // kMerge: one half of the subset; kGrow: previous vertex
};

}  // namespace

SteinerResult group_steiner_min(const Graph& g, const std::vector<VertexSet>& groups) {
  require(!groups.empty(), ErrorKind::kInvalidInput, "group Steiner needs at least one group");
  require(groups.size() <= 8, ErrorKind::kTooManyGroups,
          "group Steiner supports at most 8 groups, got " + std::to_string(groups.size()));
  const int n = g.num_vertices();
  const int k = static_cast<int>(groups.size());
  const int subsets = 1 << k;
  const int full = subsets - 1;
  for (const auto& grp : groups)
    if (grp.empty()) return {};

  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i)
    for (Vertex v : groups[static_cast<std::size_t>(i)]) mask[static_cast<std::size_t>(v)] |= 1 << i;

  auto at = [n](int s, Vertex v) { return static_cast<std::size_t>(s) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v); };
  std::vector<int> dp(static_cast<std::size_t>(subsets) * static_cast<std::size_t>(n), kInf);
  std::vector<Back> back(dp.size());
  for (Vertex v = 0; v < n; ++v) dp[at(0, v)] = 1;

  using Item = std::pair<int, Vertex>;
  for (int s = 1; s < subsets; ++s) {
    for (Vertex v = 0; v < n; ++v) {
      int& best = dp[at(s, v)];
      Back& b = back[at(s, v)];
      if (s & mask[static_cast<std::size_t>(v)]) {
        best = dp[at(s & ~mask[static_cast<std::size_t>(v)], v)];
        b = {Step::kAbsorb, -1};
      }
      // Proper splits containing the lowest bit of s, to skip mirrored pairs.
      const int low = s & -s;
      for (int part = (s - 1) & s; part > 0; part = (part - 1) & s) {
        if (!(part & low)) continue;
        int a = dp[at(part, v)], c = dp[at(s ^ part, v)];
        if (a >= kInf || c >= kInf) continue;
        if (a + c - 1 < best) {
          best = a + c - 1;
          b = {Step::kMerge, part};
        }
      }
    }
    // Unit-cost relaxation along edges.
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Vertex v = 0; v < n; ++v)
      if (dp[at(s, v)] < kInf) pq.emplace(dp[at(s, v)], v);
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dp[at(s, v)]) continue;
      for (Vertex w : g.neighbors(v)) {
        if (d + 1 < dp[at(s, w)]) {
          dp[at(s, w)] = d + 1;
          back[at(s, w)] = {Step::kGrow, v};
          pq.emplace(d + 1, w);
        }
      }
    }
  }

  Vertex root = -1;
  for (Vertex v = 0; v < n; ++v)
    if (dp[at(full, v)] < kInf && (root < 0 || dp[at(full, v)] < dp[at(full, root)])) root = v;
  if (root < 0) return {};

  std::vector<Vertex> collected;
  std::vector<std::pair<int, Vertex>> work{{full, root}};
  while (!work.empty()) {
    auto [s, v] = work.back();
    work.pop_back();
    collected.push_back(v);
    if (s == 0) continue;
    const Back& b = back[at(s, v)];
    switch (b.step) {
      case Step::kLeaf: break;
      case Step::kAbsorb: work.emplace_back(s & ~mask[static_cast<std::size_t>(v)], v); break;
      case Step::kMerge:
        work.emplace_back(b.arg, v);
        work.emplace_back(s ^ b.arg, v);
        break;
      case Step::kGrow: work.emplace_back(s, b.arg); break;
    }
  }
  SteinerResult out;
  out.tree = make_set(std::move(collected));
  out.size = static_cast<int>(out.tree.size());
  PSTRUCT_ASSERT(out.size == dp[at(full, root)], "Steiner reconstruction lost optimality");
  return out;
}

double find_tree_blocker_bound(int n, int k, double x) {
  if (k <= 1) return 0;
  const long long budget = static_cast<long long>(std::floor(x));
  if (budget <= k - 1) return n;
  const long long parts = k - 1;
  double total = 0;
  for (long long i = 0; i < parts; ++i) {
    long long b = budget / parts + (i < budget % parts ? 1 : 0);
    total += static_cast<double>(n / b);
  }
  return total;
}

double find_trees_blocker_bound(int n, int k, double x, int l) {
  return static_cast<double>(l - 1) * std::floor(x) + find_tree_blocker_bound(n, k, x);
}

HitOutcome find_tree(const Graph& g, const std::vector<VertexSet>& groups, double x) {
  require(!groups.empty(), ErrorKind::kInvalidInput, "find_tree needs at least one group");
  require(x >= 1, ErrorKind::kBadParams, "find_tree needs x >= 1");
  const int n = g.num_vertices();
  const int k = static_cast<int>(groups.size());
  SteinerResult st = group_steiner_min(g, groups);
  if (st.size != SteinerResult::kInfinite && st.size <= x) return Connectors{{std::move(st.tree)}};

  const long long budget = static_cast<long long>(std::floor(x));
  if (budget <= k - 1) return Blocker{all_vertices(n), {}};

  // Every connector is too large, so any surviving component containing all
  // groups would have some vertex far from one A_i; cutting one thin BFS
  // layer per group within its budget stops that.
  const long long parts = k - 1;
  std::vector<Vertex> y;
  for (int i = 1; i < k; ++i) {
    long long b = budget / parts + (i - 1 < budget % parts ? 1 : 0);
    std::vector<int> dist = bfs_distances(g, groups[static_cast<std::size_t>(i)], {});
    std::vector<int> count(static_cast<std::size_t>(b) + 1, 0);
    for (int d : dist)
      if (d >= 1 && d <= b) ++count[static_cast<std::size_t>(d)];
    int pick = 1;
    for (int j = 2; j <= b; ++j)
      if (count[static_cast<std::size_t>(j)] < count[static_cast<std::size_t>(pick)]) pick = j;
    for (Vertex v = 0; v < n; ++v)
      if (dist[static_cast<std::size_t>(v)] == pick) y.push_back(v);
  }
  return Blocker{make_set(std::move(y)), {}};
}

HitOutcome find_trees(const Graph& g, const std::vector<VertexSet>& groups, double x, int l) {
  require(l >= 1, ErrorKind::kBadParams, "find_trees needs l >= 1");
  const int n = g.num_vertices();
  std::vector<VertexSet> trees;
  VertexSet used;
  for (int j = 0; j < l; ++j) {
    VertexSet rest = complement(n, used);
    InducedSubgraph sub = induced_subgraph(g, rest);
    std::vector<VertexSet> local(groups.size());
    bool exhausted = false;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (Vertex v : groups[i]) {
        Vertex lv = sub.to_local[static_cast<std::size_t>(v)];
        if (lv >= 0) local[i].push_back(lv);
      }
      exhausted = exhausted || local[i].empty();
    }
    // A group swallowed by earlier trees: nothing left can meet all groups.
    if (exhausted) return Blocker{used, {}};
    HitOutcome step = find_tree(sub.graph, local, x);
    if (auto* blk = std::get_if<Blocker>(&step)) {
      VertexSet y;
      for (Vertex v : blk->y) y.push_back(sub.to_global[static_cast<std::size_t>(v)]);
      return Blocker{set_union(used, make_set(std::move(y))), {}};
    }
    VertexSet tree;
    for (Vertex v : std::get<Connectors>(step).trees.front()) tree.push_back(sub.to_global[static_cast<std::size_t>(v)]);
    tree = make_set(std::move(tree));
    used = set_union(used, tree);
    trees.push_back(std::move(tree));
  }
  return Connectors{std::move(trees)};
}

}  // namespace pstruct
