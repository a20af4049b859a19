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

#include "pstruct/planar.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <tuple>

#include "pstruct/error.hpp"

namespace pstruct {

namespace {

using Rot = std::vector<std::vector<Vertex>>;

// Position of each neighbour inside rot[v], searchable by neighbour id.
class RotIndex {
 public:
  explicit RotIndex(const Rot& rot) : rot_(rot), sorted_(rot.size()), offset_(rot.size() + 1, 0) {
    for (std::size_t v = 0; v < rot.size(); ++v) {
      for (std::size_t p = 0; p < rot[v].size(); ++p) sorted_[v].emplace_back(rot[v][p], static_cast<int>(p));
      std::sort(sorted_[v].begin(), sorted_[v].end());
      offset_[v + 1] = offset_[v] + rot[v].size();
    }
  }

  int pos(Vertex v, Vertex w) const {
    const auto& s = sorted_[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(w, -1));
    PSTRUCT_ASSERT(it != s.end() && it->first == w, "dart missing from rotation");
    return it->second;
  }
  std::size_t dart(Vertex v, int p) const { return offset_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(p); }
  std::size_t num_darts() const { return offset_.back(); }

  // Dart that follows u->w on its face, as (w, position in rot[w]).
  std::pair<Vertex, int> next(Vertex u, Vertex w) const {
    const auto& rw = rot_[static_cast<std::size_t>(w)];
    int p = (pos(w, u) + 1) % static_cast<int>(rw.size());
    return {w, p};
  }

 private:
  const Rot& rot_;
  std::vector<std::vector<std::pair<Vertex, int>>> sorted_;
  std::vector<std::size_t> offset_;
};

struct Faces {
  std::vector<std::vector<Vertex>> walks;
  std::vector<int> face_of_dart;
};

Faces faces_of(const Rot& rot) {
  RotIndex idx(rot);
  Faces out;
  out.face_of_dart.assign(idx.num_darts(), -1);
  for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v) {
    for (int p = 0; p < static_cast<int>(rot[static_cast<std::size_t>(v)].size()); ++p) {
      if (out.face_of_dart[idx.dart(v, p)] >= 0) continue;
      const int id = static_cast<int>(out.walks.size());
      std::vector<Vertex> walk;
      Vertex u = v;
      int q = p;
      while (out.face_of_dart[idx.dart(u, q)] < 0) {
        out.face_of_dart[idx.dart(u, q)] = id;
        walk.push_back(u);
        Vertex w = rot[static_cast<std::size_t>(u)][static_cast<std::size_t>(q)];
        std::tie(u, q) = idx.next(u, w);
      }
      PSTRUCT_ASSERT(u == v && q == p, "facial walk did not close");
      out.walks.push_back(std::move(walk));
    }
  }
  return out;
}

bool is_cyclic_shift(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.size(); ++s) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[i] == b[(i + s) % b.size()];
    if (same) return true;
  }
  return a.empty();
}

struct Chord {
  std::size_t i, j;  // positions in the face walk
};

}  // namespace

void validate_rotation(const Graph& g, const RotationSystem& rot) {
  const int n = g.num_vertices();
  require(static_cast<int>(rot.rot.size()) == n, ErrorKind::kBadEmbedding, "rotation has the wrong vertex count");
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rot.rot[static_cast<std::size_t>(v)];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    require(std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end()), ErrorKind::kBadEmbedding,
            "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
  }
  Faces faces = faces_of(rot.rot);
  auto comps = components(g);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  std::vector<long long> euler(comps.size(), 0);
  std::vector<long long> edges(comps.size(), 0), face_count(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) euler[c] = static_cast<long long>(comps[c].size());
  for (auto [u, v] : g.edges()) ++edges[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(u)])];
  for (const auto& w : faces.walks) ++face_count[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(w.front())])];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long long f = edges[c] == 0 ? 1 : face_count[c];
    require(euler[c] - edges[c] + f == 2, ErrorKind::kBadEmbedding,
            "rotation is not planar (Euler characteristic " + std::to_string(euler[c] - edges[c] + f) + ")");
  }
  if (!rot.outer_face.empty()) {
    bool found = std::any_of(faces.walks.begin(), faces.walks.end(),
                             [&](const std::vector<Vertex>& w) { return is_cyclic_shift(rot.outer_face, w); });
    require(found, ErrorKind::kBadEmbedding, "outer face is not a face of the rotation");
  }
}

std::vector<std::vector<Vertex>> trace_faces(const Graph& g, const RotationSystem& rot) {
  require(static_cast<int>(rot.rot.size()) == g.num_vertices(), ErrorKind::kBadEmbedding,
          "rotation has the wrong vertex count");
  return faces_of(rot.rot).walks;
}

Triangulated triangulate(const Graph& g, const RotationSystem& rot) {
  const int n = g.num_vertices();
  require(n >= 3, ErrorKind::kBadEmbedding, "triangulation needs at least three vertices");
  require(is_connected(g), ErrorKind::kBadEmbedding, "triangulation needs a connected graph");
  validate_rotation(g, rot);
  Rot r = rot.rot;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  auto adjacent = [&](Vertex a, Vertex b) {
    const auto& s = adj[static_cast<std::size_t>(a)];
    return std::binary_search(s.begin(), s.end(), b);
  };
  auto add_adj = [&](Vertex a, Vertex b) {
    auto& s = adj[static_cast<std::size_t>(a)];
    s.insert(std::lower_bound(s.begin(), s.end(), b), b);
  };

  while (true) {
    Faces faces = faces_of(r);
    auto big = std::find_if(faces.walks.begin(), faces.walks.end(), [](const auto& w) { return w.size() > 3; });
    if (big == faces.walks.end()) break;
    std::vector<Vertex> f = *big;
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    const std::size_t k = f.size();
    auto usable = [&](std::size_t i, std::size_t j) { return f[i] != f[j] && !adjacent(f[i], f[j]); };
    std::optional<Chord> chord;
    for (std::size_t i = 0; i < k && !chord; ++i)
      if (usable(i, (i + 2) % k)) chord = Chord{i, (i + 2) % k};
    for (std::size_t i = 0; i < k && !chord; ++i)
      for (std::size_t d = 3; d + 1 < k && !chord; ++d)
        if (usable(i, (i + d) % k)) chord = Chord{i, (i + d) % k};
    require(chord.has_value(), ErrorKind::kBadEmbedding, "face admits no chord");

    const Vertex a = f[chord->i], b = f[chord->j];
    const Vertex a_prev = f[(chord->i + k - 1) % k], b_prev = f[(chord->j + k - 1) % k];
    auto insert_after = [&](Vertex at, Vertex after, Vertex what) {
      auto& ring = r[static_cast<std::size_t>(at)];
      auto it = std::find(ring.begin(), ring.end(), after);
      PSTRUCT_ASSERT(it != ring.end(), "face predecessor missing from rotation");
      ring.insert(it + 1, what);
    };
    insert_after(a, a_prev, b);
    insert_after(b, b_prev, a);
    add_adj(a, b);
    add_adj(b, a);
  }

  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : adj[static_cast<std::size_t>(v)])
      if (v < w) edges.emplace_back(v, w);
  PSTRUCT_ASSERT(static_cast<int>(edges.size()) == 3 * n - 6, "triangulation has the wrong edge count");
  Triangulated out;
  out.graph = Graph::from_edges(n, edges);
  if (g.has_labels()) out.graph.set_labels(g.labels());
  out.rot.rot = std::move(r);
  out.rot.outer_face = faces_of(out.rot.rot).walks.front();
  return out;
}

LayeredTD eppstein_ltw3(const Graph& g, const RotationSystem& rot, Vertex root) {
  const int n = g.num_vertices();
  require(n >= 3, ErrorKind::kNotTriangulation, "a triangulation has at least three vertices");
  require(root >= 0 && root < n, ErrorKind::kInvalidInput, "root out of range");
  validate_rotation(g, rot);
  require(static_cast<long long>(g.num_edges()) == 3LL * n - 6, ErrorKind::kNotTriangulation,
          "edge count is not 3n-6");
  Faces faces = faces_of(rot.rot);
  for (const auto& w : faces.walks)
    require(w.size() == 3, ErrorKind::kNotTriangulation, "a face is not a triangle");

  // BFS tree, expanding neighbours in rotation order.
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  std::deque<Vertex> queue{root};
  parent[static_cast<std::size_t>(root)] = -1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : rot.rot[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }

  RotIndex idx(rot.rot);
  const int f = static_cast<int>(faces.walks.size());
  std::vector<int> uf(static_cast<std::size_t>(f));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
    return x;
  };
  LayeredTD out;
  for (auto [u, v] : g.edges()) {
    if (parent[static_cast<std::size_t>(v)] == u || parent[static_cast<std::size_t>(u)] == v) continue;
    int a = faces.face_of_dart[idx.dart(u, idx.pos(u, v))];
    int b = faces.face_of_dart[idx.dart(v, idx.pos(v, u))];
    int ra = find(a), rb = find(b);
    PSTRUCT_ASSERT(ra != rb, "dual of the co-tree edges has a cycle");
    uf[static_cast<std::size_t>(ra)] = rb;
    out.td.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  PSTRUCT_ASSERT(static_cast<int>(out.td.edges.size()) == f - 1, "dual of the co-tree edges is not spanning");

  for (const auto& w : faces.walks) {
    std::vector<Vertex> bag;
    for (Vertex v : w)
      for (Vertex x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) bag.push_back(x);
    out.td.bags.push_back(make_set(std::move(bag)));
  }
  std::sort(out.td.edges.begin(), out.td.edges.end());
  out.layering = bfs_layering(g, root);
  out.ltw = layered_width(out.td, out.layering, n);
  TdReport rep = validate_td(g, out.td);
  PSTRUCT_ASSERT(rep.ok, "face decomposition is invalid: " + rep.axiom + " " + rep.detail);
  PSTRUCT_ASSERT(out.ltw <= 3, "a bag meets a layer in more than three vertices");
  return out;
}

LayeredTD planar_layered_td(const Graph& g, const RotationSystem& rot) {
  const int n = g.num_vertices();
  validate_rotation(g, rot);
  LayeredTD out;
  int prev_node = -1;
  for (const auto& comp : components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    LayeredTD part;
    if (comp.size() >= 3) {
      RotationSystem local;
      for (Vertex v : comp) {
        std::vector<Vertex> ring;
        for (Vertex w : rot.rot[static_cast<std::size_t>(v)]) ring.push_back(sub.to_local[static_cast<std::size_t>(w)]);
        local.rot.push_back(std::move(ring));
      }
      Triangulated tri = triangulate(sub.graph, local);
      part = eppstein_ltw3(tri.graph, tri.rot, 0);
    } else {
      part.td.bags.push_back(all_vertices(static_cast<int>(comp.size())));
      part.layering = bfs_layering(sub.graph, 0);
    }
    const int offset = out.td.num_nodes();
    for (const auto& bag : part.td.bags) {
      VertexSet mapped;
      for (Vertex v : bag) mapped.push_back(sub.to_global[static_cast<std::size_t>(v)]);
      out.td.bags.push_back(make_set(std::move(mapped)));
    }
    for (auto [a, b] : part.td.edges) out.td.edges.emplace_back(a + offset, b + offset);
    if (prev_node >= 0) out.td.edges.emplace_back(prev_node, offset);
    prev_node = offset;
    for (const auto& layer : part.layering) {
      VertexSet mapped;
      for (Vertex v : layer) mapped.push_back(sub.to_global[static_cast<std::size_t>(v)]);
      out.layering.push_back(make_set(std::move(mapped)));
    }
  }
  out.ltw = layered_width(out.td, out.layering, n);
  return out;
}

PlanarProduct planar_product_structure(const Graph& g, const RotationSystem& rot) {
  const int n = g.num_vertices();
  require(n >= 1, ErrorKind::kInvalidInput, "graph is empty");
  require(is_connected(g), ErrorKind::kNotConnected, "planar product structure needs a connected graph");
  validate_rotation(g, rot);

  PlanarProduct out;
  Graph host = g;
  if (n >= 3) {
    Triangulated tri = triangulate(g, rot);
    out.layered = eppstein_ltw3(tri.graph, tri.rot, 0);
    host = std::move(tri.graph);
  } else {
    out.layered.td.bags.push_back(all_vertices(n));
    out.layered.layering = bfs_layering(g, 0);
  }
  out.layered.ltw = layered_width(out.layered.td, out.layered.layering, n);

  auto base = std::make_shared<const TreeDecomposition>(out.layered.td);
  out.outcome = partition_rooted_main(host, make_view(base, n), {{0}}, 3, 2);
  if (auto* res = std::get_if<PartitionResult>(&out.outcome)) {
    // Same parts, restricted to the input edges.
    res->quotient = quotient_graph(g, res->parts);
    out.embedding = embed_partition(n, res->parts, &out.layered.layering, 3);
  }
  return out;
}

}  // namespace pstruct
