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
#include <deque>

#include "pstruct/error.hpp"
#include "pstruct/hitting.hpp"

namespace pstruct {

namespace {

constexpr int kBig = 1 << 29;

// Unit-capacity flow network over split vertices: v_in = 2v, v_out = 2v+1.
class FlowNet {
 public:
  explicit FlowNet(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void add(int from, int to, int cap) {
    adj_[static_cast<std::size_t>(from)].push_back(arcs_.size());
    arcs_.push_back({to, cap, cap});
    adj_[static_cast<std::size_t>(to)].push_back(arcs_.size());
    arcs_.push_back({from, 0, 0});
  }

  // One BFS augmentation of a single unit; false when none exists.
  bool augment(int s, int t) {
    std::vector<std::size_t> via(adj_.size(), kNone);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t e : adj_[static_cast<std::size_t>(x)]) {
        int y = arcs_[e].to;
        if (arcs_[e].cap > 0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          via[static_cast<std::size_t>(y)] = e;
          queue.push_back(y);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) return false;
    for (int y = t; y != s;) {
      std::size_t e = via[static_cast<std::size_t>(y)];
      arcs_[e].cap -= 1;
      arcs_[e ^ 1].cap += 1;
      y = arcs_[e ^ 1].to;
    }
    return true;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t e : adj_[static_cast<std::size_t>(x)]) {
        if (arcs_[e].cap > 0 && !seen[static_cast<std::size_t>(arcs_[e].to)]) {
          seen[static_cast<std::size_t>(arcs_[e].to)] = 1;
          queue.push_back(arcs_[e].to);
        }
      }
    }
    return seen;
  }

  // Follows one unit of flow from s to t, consuming it. Returns node walk.
  std::vector<int> take_unit(int s, int t) {
    std::vector<int> walk{s};
    int x = s;
    while (x != t) {
      bool moved = false;
      for (std::size_t e : adj_[static_cast<std::size_t>(x)]) {
        if ((e & 1) == 0 && arcs_[e].orig - arcs_[e].cap > 0) {
          arcs_[e].orig -= 1;  // consumed
          x = arcs_[e].to;
          walk.push_back(x);
          moved = true;
          break;
        }
      }
      PSTRUCT_ASSERT(moved, "flow decomposition got stuck");
    }
    return walk;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Arc {
    int to;
    int cap;
    int orig;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::vector<std::vector<Vertex>> menger_paths(const Graph& g, const VertexSet& a, const VertexSet& b, int t,
                                              TerminalPolicy policy, VertexSet* cut) {
  require(!a.empty() && !b.empty(), ErrorKind::kInvalidInput, "Menger needs non-empty terminal sets");
  require(t >= 1, ErrorKind::kBadParams, "t must be positive");
  const bool full = policy == TerminalPolicy::kFullyDisjoint;
  require(full || !intersects(a, b), ErrorKind::kInvalidInput, "terminal sets must be disjoint");
  const int n = g.num_vertices();
  std::vector<char> in_a = mask_of(n, a), in_b = mask_of(n, b);
  const int src = 2 * n, snk = 2 * n + 1;
  FlowNet net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    bool terminal = in_a[static_cast<std::size_t>(v)] || in_b[static_cast<std::size_t>(v)];
    net.add(2 * v, 2 * v + 1, (!full && terminal) ? kBig : 1);
  }
  for (Vertex v : a) net.add(src, 2 * v, kBig);
  for (Vertex v : b) net.add(2 * v + 1, snk, kBig);
  for (auto [u, v] : g.edges()) {
    // Only a direct terminal-to-terminal edge is finite; everything else
    // must be cut at a vertex.
    bool direct = !full && ((in_a[static_cast<std::size_t>(u)] && in_b[static_cast<std::size_t>(v)]) ||
                            (in_b[static_cast<std::size_t>(u)] && in_a[static_cast<std::size_t>(v)]));
    int cap = direct ? 1 : kBig;
    net.add(2 * u + 1, 2 * v, cap);
    net.add(2 * v + 1, 2 * u, cap);
  }

  int flow = 0;
  while (flow < t && net.augment(src, snk)) ++flow;

  std::vector<std::vector<Vertex>> paths;
  if (flow < t && cut) {
    std::vector<char> reach = net.reachable(src);
    cut->clear();
    for (Vertex v = 0; v < n; ++v)
      if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) cut->push_back(v);
  }
  for (int i = 0; i < flow; ++i) {
    std::vector<int> walk = net.take_unit(src, snk);
    std::vector<Vertex> verts;
    for (std::size_t j = 1; j + 1 < walk.size(); j += 2) verts.push_back(walk[j] / 2);
    // Trim to the last a-vertex and the first b-vertex after it.
    std::size_t lo = 0;
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (in_a[static_cast<std::size_t>(verts[j])]) lo = j;
    std::size_t hi = lo;
    while (!in_b[static_cast<std::size_t>(verts[hi])]) ++hi;
    paths.emplace_back(verts.begin() + static_cast<std::ptrdiff_t>(lo), verts.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  }
  return paths;
}

HitOutcome menger_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b, int t, TerminalPolicy policy) {
  VertexSet cut;
  auto paths = menger_paths(g, a, b, t, policy, &cut);
  if (static_cast<int>(paths.size()) >= t) {
    Connectors out;
    for (auto& p : paths) out.trees.push_back(make_set(std::move(p)));
    return out;
  }
  return Blocker{std::move(cut), {}};
}

}  // namespace pstruct
