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

// Sanity checks for the test oracles themselves.

#include <gtest/gtest.h>

#include <algorithm>
#include <climits>
#include <numeric>

#include "oracles.hpp"

namespace pstruct::testing {
namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph clique(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

TEST(Oracles, ConnectedGraphCountsMatchKnownSequence) {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(static_cast<int>(connected_graphs(n).size()), expected[n - 1]) << "n=" << n;
}

TEST(Oracles, CanonicalCodeIgnoresLabels) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, 0.4, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    EXPECT_EQ(canonical_code(g), canonical_code(Graph::from_edges(n, e)));
  }
}

TEST(Oracles, CanonicalCodeSeparatesPathAndStar) {
  const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_NE(canonical_code(path(4)), canonical_code(star));
}

TEST(Oracles, BruteTreewidthKnownValues) {
  EXPECT_EQ(brute_treewidth(path(6)), 1);
  EXPECT_EQ(brute_treewidth(cycle(6)), 2);
  EXPECT_EQ(brute_treewidth(clique(5)), 4);
  EXPECT_EQ(brute_treewidth(Graph(3)), 0);
}

TEST(Oracles, BruteSteinerKnownValues) {
  EXPECT_EQ(brute_steiner(path(5), {{0}, {4}}), 5);
  const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(brute_steiner(star, {{1}, {2}, {3}}), 4);
  EXPECT_EQ(brute_steiner(Graph(2), {{0}, {1}}), INT_MAX);
}

TEST(Oracles, DisjointSubfamily) {
  EXPECT_EQ(max_disjoint_subfamily({{0, 1}, {1, 2}, {2, 3}}), 2);
  EXPECT_EQ(max_disjoint_subfamily({{0}, {0}, {0}}), 1);
  EXPECT_EQ(max_disjoint_subfamily({}), 0);
}

}  // namespace
}  // namespace pstruct::testing
