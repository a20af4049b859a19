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

#include <optional>
#include <vector>

#include "pstruct/decomp.hpp"
#include "pstruct/engine.hpp"
#include "pstruct/graph.hpp"
#include "pstruct/partition.hpp"

namespace pstruct {

/// Combinatorial embedding: rot[v] lists the neighbours of v in clockwise
/// order. Walking a face, the dart u->v is followed by v->w where w comes
/// right after u in rot[v].
struct RotationSystem {
  std::vector<std::vector<Vertex>> rot;
  std::vector<Vertex> outer_face;  // optional; must be a traced face when set
};

/// Throws kBadEmbedding unless every rot[v] is a permutation of N(v) and each
/// component satisfies Euler's formula.
void validate_rotation(const Graph& g, const RotationSystem& rot);

/// Facial walks as vertex sequences; faces are found by scanning darts in
/// (vertex, rotation position) order.
std::vector<std::vector<Vertex>> trace_faces(const Graph& g, const RotationSystem& rot);

struct Triangulated {
  Graph graph;
  RotationSystem rot;
};

/// Adds chords until every face is a triangle. Needs g connected, n >= 3.
Triangulated triangulate(const Graph& g, const RotationSystem& rot);

struct LayeredTD {
  TreeDecomposition td;
  Layering layering;
  int ltw = 0;
};

/// BFS-tree decomposition of a triangulation with one bag per face. Every
/// bag meets every BFS layer in at most three vertices.
LayeredTD eppstein_ltw3(const Graph& g, const RotationSystem& rot, Vertex root = 0);

/// Layered decomposition of any embedded planar graph: per component,
/// triangulate and run eppstein_ltw3 (tiny components get a single bag).
/// Component decompositions are chained and layerings concatenated.
LayeredTD planar_layered_td(const Graph& g, const RotationSystem& rot);

struct PlanarProduct {
  EngineOutcome outcome;  // a witness means the input was not planar
  LayeredTD layered;      // decomposition and layering valid for the input
  std::optional<ProductEmbedding> embedding;
};

/// Partition with quotient treewidth at most 3 whose parts meet each layer in
/// at most three vertices, and the slot map into H ⊠ P ⊠ K_3. g must be
/// connected.
PlanarProduct planar_product_structure(const Graph& g, const RotationSystem& rot);

}  // namespace pstruct
