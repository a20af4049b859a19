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

#include "pstruct/view.hpp"

#include "pstruct/error.hpp"

namespace pstruct {

VertexSet TDView::expand(const VertexSet& s) const {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    const auto& o = origin[static_cast<std::size_t>(v)];
    out.insert(out.end(), o.begin(), o.end());
  }
  return make_set(std::move(out));
}

TDView make_view(std::shared_ptr<const TreeDecomposition> base, int n) {
  TDView view;
  if (base) {
    for (const auto& bag : base->bags)
      for (Vertex v : bag)
        require(v >= 0 && v < n, ErrorKind::kInvalidInput, "decomposition mentions vertex " + std::to_string(v));
    view.bags = base->bags;
  }
  view.base = std::move(base);
  view.origin.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) view.origin[static_cast<std::size_t>(v)] = {v};
  view.placeholder.assign(static_cast<std::size_t>(n), 0);
  return view;
}

TDView view_keep(const TDView& view, const VertexSet& keep) {
  const int n = view.num_vertices();
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  TDView out;
  out.base = view.base;
  out.bags.resize(view.bags.size());
  for (std::size_t x = 0; x < view.bags.size(); ++x) {
    for (Vertex v : view.bags[x]) {
      Vertex l = local[static_cast<std::size_t>(v)];
      if (l >= 0) out.bags[x].push_back(l);  // ranks preserve order
    }
  }
  out.origin.reserve(keep.size());
  out.placeholder.reserve(keep.size());
  for (Vertex v : keep) {
    out.origin.push_back(view.origin[static_cast<std::size_t>(v)]);
    out.placeholder.push_back(view.placeholder[static_cast<std::size_t>(v)]);
  }
  return out;
}

TDView view_delete(const TDView& view, const VertexSet& dead) {
  return view_keep(view, complement(view.num_vertices(), dead));
}

TDView view_contract(const TDView& view, const Graph& g, const VertexSet& z) {
  require(!z.empty(), ErrorKind::kNotConnected, "cannot contract an empty set");
  require(g.num_vertices() == view.num_vertices(), ErrorKind::kInvalidInput, "view and graph disagree on vertex count");
  require(is_connected(g, z), ErrorKind::kNotConnected, "contracted set is not connected");
  const int n = view.num_vertices();
  std::vector<Vertex> map = contraction_map(n, z);
  const Vertex merged = n - static_cast<int>(z.size());
  TDView out;
  out.base = view.base;
  out.bags.resize(view.bags.size());
  for (std::size_t x = 0; x < view.bags.size(); ++x) {
    bool hit = false;
    for (Vertex v : view.bags[x]) {
      Vertex m = map[static_cast<std::size_t>(v)];
      if (m == merged) hit = true;
      else out.bags[x].push_back(m);
    }
    if (hit) out.bags[x].push_back(merged);  // merged is the largest index
  }
  out.origin.resize(static_cast<std::size_t>(merged) + 1);
  out.placeholder.assign(static_cast<std::size_t>(merged) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex m = map[static_cast<std::size_t>(v)];
    if (m != merged) {
      out.origin[static_cast<std::size_t>(m)] = view.origin[static_cast<std::size_t>(v)];
      out.placeholder[static_cast<std::size_t>(m)] = view.placeholder[static_cast<std::size_t>(v)];
    }
  }
  out.origin[static_cast<std::size_t>(merged)] = view.expand(z);
  out.placeholder[static_cast<std::size_t>(merged)] = 1;
  return out;
}

TreeDecomposition view_as_td(const TDView& view) {
  TreeDecomposition td;
  td.bags = view.bags;
  if (view.base) td.edges = view.base->edges;
  return td;
}

bool lifting_holds(const TDView& view) {
  if (!view.base) return true;
  for (std::size_t x = 0; x < view.bags.size(); ++x) {
    for (Vertex v : view.bags[x]) {
      if (view.placeholder[static_cast<std::size_t>(v)]) continue;
      if (!set_contains(view.base->bags[x], view.original(v))) return false;
    }
  }
  return true;
}

}  // namespace pstruct
