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

#include <functional>
#include <span>
#include <vector>

#include "pstruct/engine.hpp"
#include "pstruct/graph.hpp"
#include "pstruct/view.hpp"

namespace pstruct::detail {

/// Current graph of a recursive call plus its view (which maps current
/// vertices to vertices of the top-level graph).
struct Frame {
  Graph g;
  TDView view;
};

struct Reindexed {
  Frame frame;
  std::vector<Vertex> map;  // old index -> new index (-1 when dropped)
};

Reindexed frame_keep(const Frame& f, const VertexSet& keep);
Reindexed frame_contract(const Frame& f, const VertexSet& z);

/// Model mapped through an index map; sets are re-sorted.
Model map_model(const Model& model, const std::vector<Vertex>& map);

VertexSet model_union(const Model& model);

/// A_i = N(U_i) \ U.
std::vector<VertexSet> attachments(const Graph& g, const Model& model, const VertexSet& u);

/// Result of one recursive call. Part indices: 0..num_roots-1 are the roots
/// of that call in model order; extras follow. Extras are in top-level ids.
struct SubResult {
  int num_roots = 0;
  std::vector<VertexSet> extras;
  std::vector<std::vector<int>> certs;  // parallel to extras; empty in width mode
  TreeDecomposition td;
};

/// Builds a SubResult for a call with `roots` roots out of child results.
class Assembler {
 public:
  explicit Assembler(int roots) : roots_(roots) {}

  int add_part(VertexSet part, std::vector<int> cert);
  int add_node(VertexSet bag);
  void add_edge(int a, int b) { td_.edges.emplace_back(a, b); }

  /// Appends child's parts and tree. root_map[k] is this assembler's index
  /// for the child's root k, or -1 to drop it. Returns the node offset.
  int absorb(const SubResult& child, std::span<const int> root_map);

  /// Node (in this assembler) of the smallest child node containing the
  /// child indices `members`.
  static int bag_with(const SubResult& child, int offset, const VertexSet& members);

  SubResult finish() &&;

 private:
  int roots_;
  std::vector<VertexSet> extras_;
  std::vector<std::vector<int>> certs_;
  TreeDecomposition td_;
};

VertexSet first_indices(int k);  // {0, ..., k-1}

/// Thrown inside the recursion when a forbidden minor is found.
struct WitnessFound {
  MinorWitness witness;
};

/// Grows G - U into connected classes around `seeds` (disjoint connected sets
/// of G - U) and throws the resulting witness.
[[noreturn]] void throw_grown_witness(const Frame& f, const Model& model, const VertexSet& u,
                                      const std::vector<VertexSet>& seeds, MinorWitness::Flavor flavor);

[[noreturn]] void throw_witness(const Frame& f, const Model& model, std::vector<VertexSet> b_sets,
                                MinorWitness::Flavor flavor);

using Recurse = std::function<SubResult(const Frame&, const Model&)>;
using Step = std::function<SubResult(const Frame&, const Model&, const Recurse&)>;

SubResult base_clique(int r);

/// A_i empty: solve without U_i and hang U_i on a leaf bag {all roots}.
SubResult drop_root(const Frame& f, const Model& model, int i, const Recurse& recurse);

/// G - U disconnected: solve on U + first component and U + the rest, glued
/// at the bags holding the roots.
SubResult split_components(const Frame& f, const Model& model, const std::vector<VertexSet>& comps,
                           const Recurse& recurse);

/// Z = U_i plus a shortest path from each w in Y next to `comp` to A_i,
/// avoiding U, comp and the rest of Y.
VertexSet contraction_set(const Frame& f, const Model& model, const VertexSet& u, const VertexSet& y,
                          const VertexSet& comp, const VertexSet& target, int i);

/// G[comp + Z + U] with Z contracted into slot i of the model.
SubResult solve_component(const Frame& f, const Model& model, const VertexSet& u, const VertexSet& comp,
                          const VertexSet& z, int i, const Recurse& recurse);

/// Final stage shared by the main and sqrt engines. y must be a minimal
/// blocker; `cert` is its bag cover (empty in width mode).
SubResult final_stage(const Frame& f, const Model& model, const VertexSet& u, const std::vector<VertexSet>& a,
                      const VertexSet& y, std::vector<int> cert, const Recurse& recurse);

/// Checks that `model` is a clique model of g; throws kInvalidInput.
void require_model(const Graph& g, const Model& model);

struct RunSpec {
  bool with_certs = true;
  int t = 2;
  double reported_m = 0;
  bool simple = false;
};

/// Top-level driver: validates, recurses with `step` and packs the result.
EngineOutcome run_engine(const Graph& g, const TDView& view, const Model& model, const Step& step,
                         const EngineOptions& options, const RunSpec& spec);

}  // namespace pstruct::detail
