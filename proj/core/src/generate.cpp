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

#include "pstruct/generate.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "pstruct/error.hpp"

namespace pstruct {

namespace {

// Plain modulo keeps streams identical across standard libraries, unlike
// uniform_int_distribution.
std::size_t pick(std::mt19937_64& rng, std::size_t size) { return static_cast<std::size_t>(rng() % size); }

void insert_after(std::vector<Vertex>& cyc, Vertex after, Vertex v) {
  auto it = std::find(cyc.begin(), cyc.end(), after);
  PSTRUCT_ASSERT(it != cyc.end(), "rotation lost a neighbour");
  cyc.insert(it + 1, v);
}

}  // namespace

Generated grid(int a, int b) {
  require(a >= 1 && b >= 1, ErrorKind::kBadParams, "grid sides must be positive");
  auto id = [b](int i, int j) { return i * b + j; };
  std::vector<Edge> edges;
  RotationSystem rot;
  rot.rot.resize(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (j + 1 < b) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < a) edges.emplace_back(id(i, j), id(i + 1, j));
      // Counter-clockwise with i as the y axis: right, up, left, down.
      auto& r = rot.rot[static_cast<std::size_t>(id(i, j))];
      if (j + 1 < b) r.push_back(id(i, j + 1));
      if (i + 1 < a) r.push_back(id(i + 1, j));
      if (j > 0) r.push_back(id(i, j - 1));
      if (i > 0) r.push_back(id(i - 1, j));
    }
  return {Graph::from_edges(a * b, edges), std::move(rot)};
}

Generated apollonian(int n, std::uint64_t seed) {
  require(n >= 4, ErrorKind::kBadParams, "an Apollonian network needs n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  // A face (a, b, c) is walked a -> b -> c, so c follows a in rot[b].
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  RotationSystem rot;
  rot.rot = {{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}};
  for (Vertex v = 4; v < n; ++v) {
    const std::size_t f = pick(rng, faces.size());
    const auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    insert_after(rot.rot[static_cast<std::size_t>(b)], a, v);
    insert_after(rot.rot[static_cast<std::size_t>(a)], c, v);
    insert_after(rot.rot[static_cast<std::size_t>(c)], b, v);
    rot.rot.push_back({b, a, c});
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  return {Graph::from_edges(n, edges), std::move(rot)};
}

Generated wheel(int k) {
  require(k >= 3, ErrorKind::kBadParams, "a wheel needs a rim of at least 3 vertices");
  std::vector<Edge> edges;
  RotationSystem rot;
  rot.rot.resize(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i < k; ++i) {
    const int nxt = (i + 1) % k, prv = (i + k - 1) % k;
    edges.emplace_back(i, nxt);
    edges.emplace_back(i, k);
    rot.rot[static_cast<std::size_t>(i)] = {nxt, k, prv};
    rot.rot[static_cast<std::size_t>(k)].push_back(i);
  }
  return {Graph::from_edges(k + 1, edges), std::move(rot)};
}

Graph ktree(int n, int k, std::uint64_t seed) {
  require(k >= 1 && n >= k, ErrorKind::kBadParams, "a k-tree needs n >= k >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexSet> cliques;
  VertexSet first;
  for (Vertex v = 0; v < k; ++v) {
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
    first.push_back(v);
  }
  cliques.push_back(first);
  for (Vertex v = k; v < n; ++v) {
    const VertexSet base = cliques[pick(rng, cliques.size())];
    for (Vertex u : base) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      VertexSet c;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (i != drop) c.push_back(base[i]);
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  require(n >= 0, ErrorKind::kBadParams, "negative vertex count");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

}  // namespace pstruct
