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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pstruct/decomp.hpp"
#include "pstruct/error.hpp"
#include "pstruct/generate.hpp"
#include "small_graphs.hpp"

namespace pstruct {
namespace {

using testing::path_graph;

TEST(ValidateTd, SingleBagTriangle) {
  const TreeDecomposition td{{{0, 1, 2}}, {}};
  EXPECT_TRUE(validate_td(complete(3), td).ok);
  EXPECT_EQ(td.width(), 2);
}

TEST(ValidateTd, UncoveredEdge) {
  const TreeDecomposition td{{{0}, {1}}, {{0, 1}}};
  const TdReport rep = validate_td(path_graph(2), td);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.axiom, "edge");
}

TEST(ValidateTd, DisconnectedTrace) {
  // Vertex 0 sits in the two ends of a 3-node path but not the middle.
  const TreeDecomposition td{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}};
  const TdReport rep = validate_td(complete(3), td);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.axiom, "trace");
}

TEST(ValidateTd, TreeAndVertexAxioms) {
  const TreeDecomposition cyc{{{0, 1}, {1}, {1}}, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_EQ(validate_td(path_graph(2), cyc).axiom, "tree");
  const TreeDecomposition missing{{{0, 1}}, {}};
  EXPECT_EQ(validate_td(path_graph(3), missing).axiom, "vertex");
  const TreeDecomposition bad_bag{{{0, 7}}, {}};
  EXPECT_EQ(validate_td(path_graph(2), bad_bag).axiom, "bag");
}

TEST(HeuristicTd, KnownWidths) {
  EXPECT_EQ(heuristic_td(path_graph(5)).width(), 1);
  EXPECT_EQ(heuristic_td(complete(5)).width(), 4);
  const Graph g3 = grid(3, 3).graph;
  const TreeDecomposition td = heuristic_td(g3);
  EXPECT_TRUE(validate_td(g3, td).ok);
  EXPECT_EQ(td.width(), 3);
}

TEST(HeuristicTd, RandomTreesHaveWidthOne) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph t = testing::random_tree(2 + static_cast<int>(rng() % 30), rng);
    const TreeDecomposition td = heuristic_td(t);
    EXPECT_TRUE(validate_td(t, td).ok);
    EXPECT_EQ(td.width(), 1);
  }
}

TEST(ExactTreewidth, KnownValues) {
  EXPECT_EQ(exact_treewidth_small(path_graph(5)).width, 1);
  EXPECT_EQ(exact_treewidth_small(complete(4)).width, 3);
  const Graph g3 = grid(3, 3).graph;
  const ExactTreewidth ex = exact_treewidth_small(g3);
  EXPECT_EQ(ex.width, 3);
  EXPECT_EQ(ex.width, testing::brute_treewidth(g3));
  EXPECT_TRUE(validate_td(g3, ex.td).ok);
  EXPECT_EQ(ex.td.width(), 3);
}

TEST(ExactTreewidth, TooLarge) {
  try {
    exact_treewidth_small(path_graph(6), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
}

// Exact never exceeds the heuristic, agrees with brute force, and both are valid.
TEST(ExactTreewidth, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = testing::random_graph(n, 0.2 + 0.1 * static_cast<double>(rep % 6), rng);
    const ExactTreewidth ex = exact_treewidth_small(g);
    const TreeDecomposition h = heuristic_td(g);
    ASSERT_TRUE(validate_td(g, ex.td).ok);
    ASSERT_TRUE(validate_td(g, h).ok);
    EXPECT_EQ(ex.width, testing::brute_treewidth(g));
    EXPECT_EQ(ex.td.width(), ex.width);
    EXPECT_LE(ex.width, h.width());
  }
}

TEST(ExactTreewidth, NotAboveHeuristicUpToTwelve) {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = testing::random_graph(10 + static_cast<int>(rng() % 3), 0.3, rng);
    const ExactTreewidth ex = exact_treewidth_small(g);
    EXPECT_TRUE(validate_td(g, ex.td).ok);
    EXPECT_LE(ex.width, heuristic_td(g).width());
  }
}

TEST(TdFromOrdering, IsValid) {
  const Graph g = grid(3, 4).graph;
  const TreeDecomposition td = td_from_ordering(g, all_vertices(g.num_vertices()));
  EXPECT_TRUE(validate_td(g, td).ok);
}

TEST(Layering, BfsExamples) {
  const Layering p = bfs_layering(path_graph(5), 0);
  EXPECT_EQ(p, (Layering{{0}, {1}, {2}, {3}, {4}}));
  const Layering s = bfs_layering(testing::star_graph(3), 0);
  EXPECT_EQ(s, (Layering{{0}, {1, 2, 3}}));
  const Layering g = bfs_layering(grid(3, 3).graph, 0);
  ASSERT_EQ(g.size(), 5u);
  const std::size_t sizes[] = {1, 2, 3, 2, 1};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(g[i].size(), sizes[i]);
  EXPECT_EQ(g[2], (VertexSet{2, 4, 6}));
}

TEST(Layering, BfsRejectsDisconnected) {
  EXPECT_THROW(bfs_layering(Graph(2), 0), Error);
}

TEST(Layering, LayeredWidthAndIndex) {
  const Graph g = path_graph(4);
  const Layering l{{0}, {1}, {2}, {3}};
  EXPECT_EQ(layer_index(4, l), (std::vector<int>{0, 1, 2, 3}));
  const TreeDecomposition td{{{0, 1, 2, 3}}, {}};
  EXPECT_EQ(layered_width(td, l, 4), 1);
  EXPECT_EQ(layered_width(td, {{0, 1, 2, 3}}, 4), 4);
}

TEST(FindCliqueBag, Examples) {
  const TreeDecomposition one{{{0, 1, 2}}, {}};
  EXPECT_EQ(find_clique_bag(one, {0, 1, 2}), 0);
  const TreeDecomposition path{{{0, 1}, {1, 2}, {1, 3}}, {{0, 1}, {1, 2}}};
  EXPECT_EQ(find_clique_bag(path, {1}), 0);
  EXPECT_EQ(find_clique_bag(path, {1, 3}), 2);
  const TreeDecomposition tri{{{0, 1}, {0, 1, 2}}, {{0, 1}}};
  EXPECT_EQ(find_clique_bag(tri, {0, 1, 2}), 1);
  try {
    find_clique_bag(tri, {2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotFound);
  }
}

}  // namespace
}  // namespace pstruct
