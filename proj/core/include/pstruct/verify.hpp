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
#include <vector>

#include "pstruct/decomp.hpp"
#include "pstruct/graph.hpp"
#include "pstruct/partition.hpp"

// Checkers in this header deliberately avoid the set and traversal helpers
// the engines use, so a bug there cannot hide itself.

namespace pstruct {

struct Verdict {
  bool ok = true;
  std::string violation;  // first problem found

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Tree-decomposition axioms, checked from scratch.
Verdict check_td(const Graph& g, const TreeDecomposition& td);

Verdict check_layering(const Graph& g, const Layering& layering);

/// Width at most k and every k-subset of a bag lies in at most two bags.
Verdict check_simple(const TreeDecomposition& td, int k);

/// Exactly one bag contains every node in `members`.
Verdict check_unique_full_bag(const TreeDecomposition& td, const std::vector<int>& members);

struct PartitionCheck {
  std::optional<double> m_bound;  // every part has at most floor(m_bound) vertices
  bool unique_full_bag = false;   // with r = s roots, one bag holds all of them
};

/// Checks, in order: parts partition V(g); every edge is inside a part or
/// joins quotient-adjacent parts; roots are parts; h_cert decomposes the
/// quotient with width <= s; with `original_td`, each cover cert names at
/// most t-1 bags whose union holds the part; the m bound; simplicity when
/// the result claims it.
Verdict check_partition_result(const Graph& g, const TreeDecomposition* original_td, const PartitionResult& r,
                               int s, int t, const PartitionCheck& extra = {});

/// Injective, slots in 1..m, every edge maps to equal or adjacent parts and
/// (when layered) layers at distance at most one.
Verdict check_product_embedding(const Graph& g, const Graph& h, const ProductEmbedding& emb, bool layered);

/// Disjoint connected branch sets with the cross edges the flavour needs.
/// s and t, when non-negative, pin the expected set counts.
Verdict check_witness(const Graph& g, const MinorWitness& w, int s = -1, int t = -1);

struct MinorTarget {
  MinorWitness::Flavor flavor = MinorWitness::Flavor::kKt;
  int s = 0;  // clique side (K_t: s = t)
  int t = 0;  // independent side; unused for K_t

  static MinorTarget kt(int t) { return {MinorWitness::Flavor::kKt, t, 0}; }
  static MinorTarget kst(int s, int t) { return {MinorWitness::Flavor::kKst, s, t}; }
  static MinorTarget jst(int s, int t) { return {MinorWitness::Flavor::kJ, s, t}; }
};

/// Exhaustive minor test for small graphs. Returns a checked witness, or
/// nothing when g has no such minor. Throws kTooLarge when n > cap.
std::optional<MinorWitness> find_minor_model(const Graph& g, const MinorTarget& target, int cap = 12);

}  // namespace pstruct
