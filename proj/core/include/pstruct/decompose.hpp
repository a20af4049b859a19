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
#include <string>
#include <string_view>

#include "pstruct/decomp.hpp"
#include "pstruct/engine.hpp"
#include "pstruct/graph.hpp"
#include "pstruct/partition.hpp"
#include "pstruct/planar.hpp"

namespace pstruct {

enum class Mode { kTw, kSqrt, kLtw, kStw };

std::string_view to_string(Mode mode);
/// Parses "tw", "sqrt", "ltw" or "stw"; throws kBadParams otherwise.
Mode parse_mode(std::string_view name);

/// Excluded minor to decompose against.
struct Target {
  enum class Kind { kKt, kKst, kJst, kGenus };
  Kind kind = Kind::kKt;
  int a = 5;  // t for kKt, s for kKst/kJst, g for kGenus
  int b = 0;  // t for kKst/kJst

  static Target kt(int t) { return {Kind::kKt, t, 0}; }
  static Target kst(int s, int t) { return {Kind::kKst, s, t}; }
  static Target jst(int s, int t) { return {Kind::kJst, s, t}; }
  static Target genus(int g) { return {Kind::kGenus, g, 0}; }
};

std::string to_string(const Target& target);

struct Params {
  int s = 0;
  int t = 0;
};

/// (s, t) such that every graph excluding `target` excludes J_{s,t} (or
/// K*_{s,t} in stw mode). `clique_variant` selects K_t -> J_{t-1,1} in sqrt
/// mode instead of J_{t-2,2}. Throws kInvalidInput for unsupported pairs.
Params target_params(Mode mode, const Target& target, bool clique_variant = false);

struct DecomposeOptions {
  Mode mode = Mode::kTw;
  Target target;
  bool clique_variant = false;
  /// Decomposition for tw/stw/ltw; computed when absent (heuristic, or the
  /// planar pipeline in ltw mode).
  std::optional<TreeDecomposition> td;
  std::optional<Layering> layering;
  std::optional<RotationSystem> rot;
  /// Requests the exact blocker construction in sqrt mode; not available.
  bool exact_hitting = false;
  EngineOptions engine;
};

struct DecomposeReport {
  int n = 0;
  std::size_t m = 0;
  Params params;
  int max_part = 0;        // achieved largest part
  int max_part_layer = 0;  // largest |part ∩ layer| when layered
  int h_width = -1;        // width of the quotient decomposition
  double reported_m = 0;   // guaranteed bound on part size
  double reference_m = 0;  // sqrt mode: the bound of the exact hitting method
  int input_width = -1;    // width of the decomposition used, if any
  int ltw = -1;            // layered width of (td, layering), if any
  long long tw_bound = -1;   // (h_width + 1) * max_part - 1
  long long rtw_bound = -1;  // (t - 1) * ltw - 1 when layered
};

struct Decomposition {
  EngineOutcome outcome;
  std::optional<TreeDecomposition> td;  // decomposition the certificates refer to
  std::optional<Layering> layering;
  std::optional<ProductEmbedding> embedding;
  DecomposeReport report;
};

/// Runs the engine matching `options.mode` on every component (seeded by its
/// smallest vertex) and merges the results.
Decomposition decompose(const Graph& g, const DecomposeOptions& options);

/// Throws kInvalidInput unless `layering` partitions V(g) with every edge
/// inside a layer or between consecutive layers.
void require_layering(const Graph& g, const Layering& layering);

}  // namespace pstruct
