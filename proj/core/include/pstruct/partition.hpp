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
#include <string_view>
#include <vector>

#include "pstruct/decomp.hpp"
#include "pstruct/graph.hpp"

namespace pstruct {

/// Partition of V(G) with its quotient H and certificates.
struct PartitionResult {
  std::vector<VertexSet> parts;
  Graph quotient;                // one vertex per part
  std::vector<int> roots;        // part indices of the input model, in order
  std::optional<std::vector<std::vector<int>>> cover_certs;  // original bag ids per part
  TreeDecomposition h_cert;      // decomposition of the quotient
  bool simple = false;           // h_cert claimed s-simple
  double reported_m = 0;         // guaranteed bound on part width
};

/// Explicit model of a forbidden minor.
///
/// kJ: a_sets pairwise adjacent, every a-set adjacent to every b-set, and the
/// union of the b-sets connected with each b-set connected. kKst: as kJ
/// without the union condition. kKt: a_sets is a clique model, b_sets empty.
struct MinorWitness {
  enum class Flavor { kJ, kKst, kKt };
  Flavor flavor = Flavor::kJ;
  std::vector<VertexSet> a_sets;
  std::vector<VertexSet> b_sets;
};

std::string_view to_string(MinorWitness::Flavor flavor);

/// Slot assignment into H ⊠ K_m (or H ⊠ P ⊠ K_m when layered).
struct ProductEmbedding {
  struct Image {
    int part = -1;
    int layer = -1;  // -1 when not layered
    int slot = 0;    // 1-based
  };
  std::vector<Image> image;  // per vertex of G
  int m = 0;
  bool layered = false;
};

/// Quotient of g by `parts` (which must partition V(g)); edges come from g.
Graph quotient_graph(const Graph& g, const std::vector<VertexSet>& parts);

/// v -> (part, layer, rank of v in its part [∩ layer]).
ProductEmbedding embed_partition(int n, const std::vector<VertexSet>& parts, const Layering* layering, int m);

}  // namespace pstruct
