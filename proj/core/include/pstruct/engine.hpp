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
#include <variant>
#include <vector>

#include "pstruct/graph.hpp"
#include "pstruct/partition.hpp"
#include "pstruct/view.hpp"

namespace pstruct {

struct EngineOptions {
  /// Invoked once per recursive call with the number of roots of that call
  /// and the decomposition it built (nodes over local part indices, roots
  /// first). Used by tests to check per-step side conditions.
  std::function<void(int roots, const TreeDecomposition& h_td)> observer;
  /// Re-validate every intermediate view against its graph.
  bool check_views = false;
};

using EngineOutcome = std::variant<PartitionResult, MinorWitness>;

/// Rooted partition relative to a decomposition: W-width at most t-1 and
/// quotient treewidth at most s, or a J_{s,t} witness. `view` must be a
/// decomposition of g; single-node roots are certified automatically,
/// larger ones by a greedy bag cover that must use at most t-1 bags.
EngineOutcome partition_rooted_main(const Graph& g, const TDView& view, const Model& model, int s, int t,
                                    const EngineOptions& options = {});

/// As partition_rooted_main, with an s-simple quotient decomposition; the
/// witness flavour is kKst.
EngineOutcome partition_rooted_stw(const Graph& g, const TDView& view, const Model& model, int s, int t,
                                   const EngineOptions& options = {});

/// Rooted partition of width at most m and quotient treewidth at most s, or
/// a J_{s,t} witness. No decomposition is used; m must come from
/// sqrt_width_bound for the same (s, t, n).
EngineOutcome partition_rooted_sqrt(const Graph& g, const Model& model, int s, int t, double m,
                                    const EngineOptions& options = {});

/// Width bound of the sqrt engine and the connector sizes it uses.
struct SqrtBound {
  double m = 0;
  double x_grow = 1;   // connector size when growing the model (r < s)
  double x_final = 1;  // connector size for the t-tree search (r = s)
};

/// Bound achieved with the distance-layer blocker of find_tree.
SqrtBound sqrt_width_bound(int s, int t, int n);

/// The bound attainable with an exact blocker construction, for reporting.
double sqrt_reference_m(int s, int t, int n);

/// Inclusion-minimal subset of y that still blocks, by removal attempts in
/// increasing id.
VertexSet minimize_blocker(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                           const VertexSet& y);

}  // namespace pstruct
