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

#include <cstdint>
#include <optional>

#include "pstruct/graph.hpp"
#include "pstruct/planar.hpp"

namespace pstruct {

struct Generated {
  Graph graph;
  std::optional<RotationSystem> rot;  // set for planar families
};

/// a x b grid; vertex (i, j) is i * b + j.
Generated grid(int a, int b);

/// Starts from an embedded K_4 and stacks a vertex into a random face until
/// there are n vertices.
Generated apollonian(int n, std::uint64_t seed);

/// Cycle 0..k-1 plus hub k.
Generated wheel(int k);

/// Random k-tree: a k-clique, then each new vertex joins a random existing
/// k-clique. Has k*n - k(k+1)/2 edges.
Graph ktree(int n, int k, std::uint64_t seed);

Graph complete(int n);

/// Outer 5-cycle 0..4, spokes i -- 5+i, inner pentagram 5+i -- 5+(i+2)%5.
Graph petersen();

}  // namespace pstruct
