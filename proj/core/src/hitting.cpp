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

#include "pstruct/hitting.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "pstruct/error.hpp"

namespace pstruct {

namespace {

struct TargetMasks {
  std::vector<std::uint64_t> of;  // per vertex
  std::uint64_t full = 0;
};

TargetMasks target_masks(int n, const std::vector<VertexSet>& targets) {
  require(targets.size() <= 64, ErrorKind::kInvalidInput, "at most 64 target sets are supported");
  TargetMasks m;
  m.of.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    m.full |= std::uint64_t{1} << i;
    for (Vertex v : targets[i]) m.of[static_cast<std::size_t>(v)] |= std::uint64_t{1} << i;
  }
  return m;
}

// Components of g[allowed] whose target mask is full, by smallest vertex.
// Stops after the first one when first_only is set.
std::vector<VertexSet> full_components(const Graph& g, const std::vector<char>& allowed, const TargetMasks& masks,
                                       bool first_only) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!allowed[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    std::uint64_t mask = 0;
    stack.assign(1, s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      mask |= masks.of[static_cast<std::size_t>(v)];
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (allowed[wi] && !seen[wi]) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    if (mask == masks.full) {
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
      if (first_only) break;
    }
  }
  return out;
}

std::vector<char> allowed_outside(int n, const VertexSet& a, const VertexSet& b) {
  std::vector<char> allowed(static_cast<std::size_t>(n), 1);
  for (Vertex v : a) allowed[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : b) allowed[static_cast<std::size_t>(v)] = 0;
  return allowed;
}

// Rooted view of the decomposition tree: depth, Euler interval, order.
struct RootedTree {
  std::vector<int> depth, tin, tout;
};

RootedTree root_tree(const TreeDecomposition& td, int root) {
  const int nodes = td.num_nodes();
  auto adj = td.adjacency();
  RootedTree rt;
  rt.depth.assign(static_cast<std::size_t>(nodes), -1);
  rt.tin.assign(static_cast<std::size_t>(nodes), 0);
  rt.tout.assign(static_cast<std::size_t>(nodes), 0);
  int clock = 0;
  // Iterative DFS; children visited in increasing id.
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  rt.depth[static_cast<std::size_t>(root)] = 0;
  rt.tin[static_cast<std::size_t>(root)] = clock++;
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    const auto& nb = adj[static_cast<std::size_t>(x)];
    if (i < nb.size()) {
      int y = nb[i++];
      if (rt.depth[static_cast<std::size_t>(y)] < 0) {
        rt.depth[static_cast<std::size_t>(y)] = rt.depth[static_cast<std::size_t>(x)] + 1;
        rt.tin[static_cast<std::size_t>(y)] = clock++;
        stack.emplace_back(y, 0);
      }
    } else {
      rt.tout[static_cast<std::size_t>(x)] = clock;
      stack.pop_back();
    }
  }
  return rt;
}

}  // namespace

bool blocks(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets, const VertexSet& y) {
  TargetMasks masks = target_masks(g.num_vertices(), targets);
  return full_components(g, allowed_outside(g.num_vertices(), u, y), masks, true).empty();
}

std::vector<VertexSet> meeting_components(const Graph& g, const VertexSet& avoid,
                                          const std::vector<VertexSet>& targets) {
  TargetMasks masks = target_masks(g.num_vertices(), targets);
  return full_components(g, allowed_outside(g.num_vertices(), avoid, {}), masks, false);
}

std::optional<int> helly_bag(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                             const TDView& view) {
  const int n = g.num_vertices();
  TargetMasks masks = target_masks(n, targets);
  std::vector<char> allowed = allowed_outside(n, u, {});
  for (int x = 0; x < static_cast<int>(view.bags.size()); ++x) {
    const auto& bag = view.bags[static_cast<std::size_t>(x)];
    for (Vertex v : bag) allowed[static_cast<std::size_t>(v)] = 0;
    bool ok = full_components(g, allowed, masks, true).empty();
    for (Vertex v : bag) allowed[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : u) allowed[static_cast<std::size_t>(v)] = 0;
    if (ok) return x;
  }
  return std::nullopt;
}

SplitEdge find_split_edge(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                          const TDView& view) {
  require(view.has_decomposition(), ErrorKind::kInvalidInput, "split-edge search needs a decomposition");
  const int n = g.num_vertices();
  const int nodes = static_cast<int>(view.bags.size());
  TargetMasks masks = target_masks(n, targets);
  auto adj = view_as_td(view).adjacency();

  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : view.base->edges) edges.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(edges.begin(), edges.end());

  std::vector<int> total(static_cast<std::size_t>(n), 0);
  for (const auto& bag : view.bags)
    for (Vertex v : bag) ++total[static_cast<std::size_t>(v)];
  std::vector<char> u_mask = mask_of(n, u);

  for (auto [x, y] : edges) {
    // Nodes on the x side of the edge.
    std::vector<char> side(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{x};
    side[static_cast<std::size_t>(x)] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[static_cast<std::size_t>(a)]) {
        if ((a == x && b == y) || side[static_cast<std::size_t>(b)]) continue;
        side[static_cast<std::size_t>(b)] = 1;
        stack.push_back(b);
      }
    }
    std::vector<int> on_x(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < nodes; ++a)
      if (side[static_cast<std::size_t>(a)])
        for (Vertex v : view.bags[static_cast<std::size_t>(a)]) ++on_x[static_cast<std::size_t>(v)];
    std::vector<char> excl_x(static_cast<std::size_t>(n), 0), excl_y(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (u_mask[vi] || total[vi] == 0) continue;
      if (on_x[vi] == total[vi]) excl_x[vi] = 1;
      else if (on_x[vi] == 0) excl_y[vi] = 1;
    }
    auto fx = full_components(g, excl_x, masks, true);
    if (fx.empty()) continue;
    auto fy = full_components(g, excl_y, masks, true);
    if (fy.empty()) continue;
    return SplitEdge{x, y, std::move(fx.front()), std::move(fy.front())};
  }
  fail(ErrorKind::kNotFound, "no split edge exists");
}

namespace {

bool separates(const Graph& g, const std::vector<char>& blocked, const VertexSet& a, const std::vector<char>& in_b) {
  std::vector<char> seen(blocked);
  std::deque<Vertex> queue;
  for (Vertex v : a) {
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (in_b[static_cast<std::size_t>(v)]) return false;
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace

VertexSet minimal_separator_within(const Graph& g, const VertexSet& candidates, const VertexSet& a,
                                   const VertexSet& b, const VertexSet& avoid) {
  const int n = g.num_vertices();
  require(!intersects(candidates, a) && !intersects(candidates, b) && !intersects(a, b), ErrorKind::kNotSeparating,
          "separator candidates must avoid both sides");
  std::vector<char> blocked = mask_of(n, avoid);
  for (Vertex v : candidates) blocked[static_cast<std::size_t>(v)] = 1;
  std::vector<char> in_b = mask_of(n, b);
  require(separates(g, blocked, a, in_b), ErrorKind::kNotSeparating, "candidates do not separate the two sides");
  VertexSet kept;
  for (Vertex v : candidates) {
    blocked[static_cast<std::size_t>(v)] = 0;
    if (!separates(g, blocked, a, in_b)) {
      blocked[static_cast<std::size_t>(v)] = 1;
      kept.push_back(v);
    }
  }
  return kept;
}

HitOutcome implicit_tree_hit(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                             const TDView& view, int t) {
  require(view.has_decomposition(), ErrorKind::kInvalidInput, "tree hitting needs a decomposition");
  require(t >= 1, ErrorKind::kBadParams, "t must be positive");
  const int n = g.num_vertices();
  const int nodes = static_cast<int>(view.bags.size());
  TargetMasks masks = target_masks(n, targets);
  RootedTree rt = root_tree(view_as_td(view), 0);

  // The top node of each vertex decides which subtrees it is exclusive to.
  std::vector<int> top(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < nodes; ++x) {
    for (Vertex v : view.bags[static_cast<std::size_t>(x)]) {
      int& tv = top[static_cast<std::size_t>(v)];
      if (tv < 0 || rt.depth[static_cast<std::size_t>(x)] < rt.depth[static_cast<std::size_t>(tv)]) tv = x;
    }
  }
  std::vector<int> order(static_cast<std::size_t>(nodes));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return rt.depth[static_cast<std::size_t>(a)] > rt.depth[static_cast<std::size_t>(b)];
  });

  std::vector<char> removed = mask_of(n, u);
  std::vector<VertexSet> members;
  std::vector<int> picks;
  std::vector<char> allowed(static_cast<std::size_t>(n));
  // A single pass suffices: removal only shrinks the candidate sets, so a
  // node that fails once fails for the rest of the run.
  for (int x : order) {
    const int lo = rt.tin[static_cast<std::size_t>(x)];
    const int hi = rt.tout[static_cast<std::size_t>(x)];
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      int tv = top[static_cast<std::size_t>(v)];
      bool in = tv >= 0 && !removed[static_cast<std::size_t>(v)] && rt.tin[static_cast<std::size_t>(tv)] >= lo &&
                rt.tin[static_cast<std::size_t>(tv)] < hi;
      allowed[static_cast<std::size_t>(v)] = in;
      any = any || in;
    }
    if (!any) continue;
    auto found = full_components(g, allowed, masks, true);
    if (found.empty()) continue;
    members.push_back(std::move(found.front()));
    picks.push_back(x);
    for (Vertex v : view.bags[static_cast<std::size_t>(x)]) removed[static_cast<std::size_t>(v)] = 1;
    if (static_cast<int>(members.size()) == t) return Connectors{std::move(members)};
  }

  Blocker out;
  std::vector<char> in_u = mask_of(n, u);
  for (int x : picks)
    for (Vertex v : view.bags[static_cast<std::size_t>(x)])
      if (!in_u[static_cast<std::size_t>(v)]) out.y.push_back(v);
  out.y = make_set(std::move(out.y));
  out.bag_ids = std::move(picks);
  std::sort(out.bag_ids.begin(), out.bag_ids.end());
  return out;
}

}  // namespace pstruct
