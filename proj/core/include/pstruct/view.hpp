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

#pragma once

#include <memory>
#include <vector>

#include "pstruct/decomp.hpp"
#include "pstruct/graph.hpp"

namespace pstruct {

/// A decomposition of a graph derived from an original graph by deletions
/// and contractions. Node ids (and the tree) are those of `base`; only bag
/// contents change. Every current vertex remembers the original vertices it
/// stands for; placeholders are the vertices created by contraction.
///
/// A view with a null `base` carries lineage only (used where no
/// decomposition is involved).
struct TDView {
  std::shared_ptr<const TreeDecomposition> base;
  std::vector<VertexSet> bags;       // in current vertex ids, indexed like base->bags
  std::vector<VertexSet> origin;     // current vertex -> original vertices
  std::vector<char> placeholder;     // current vertex created by contraction?

  int num_vertices() const { return static_cast<int>(origin.size()); }
  bool has_decomposition() const { return base != nullptr; }
  /// Original vertex of a non-placeholder vertex.
  Vertex original(Vertex v) const { return origin[static_cast<std::size_t>(v)].front(); }
  /// Union of the origins of `s`.
  VertexSet expand(const VertexSet& s) const;
};

/// Identity view of an n-vertex graph over `base` (which may be null).
TDView make_view(std::shared_ptr<const TreeDecomposition> base, int n);

/// Keeps exactly `keep`, re-indexed by rank as in induced_subgraph.
TDView view_keep(const TDView& view, const VertexSet& keep);

/// Removes `dead`; equivalent to view_keep of the complement.
TDView view_delete(const TDView& view, const VertexSet& dead);

/// Replaces z by one placeholder, indexed with contraction_map(n, z).
/// Throws kNotConnected if z is empty or g[z] is disconnected, where g is
/// the current graph of the view.
TDView view_contract(const TDView& view, const Graph& g, const VertexSet& z);

/// The view's bags on its tree, as a plain decomposition of the current graph.
TreeDecomposition view_as_td(const TDView& view);

/// For each node: the non-placeholder vertices of the view bag, mapped to
/// original ids, lie inside the original bag of the same id.
bool lifting_holds(const TDView& view);

}  // namespace pstruct
