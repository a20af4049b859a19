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

#include <memory>
#include <random>

#include "oracles.hpp"
#include "pstruct/decomp.hpp"
#include "pstruct/error.hpp"
#include "pstruct/generate.hpp"
#include "pstruct/view.hpp"
#include "small_graphs.hpp"

namespace pstruct {
namespace {

using testing::path_graph;

// Path 0-1-2-3-4 with bags {0,1},{1,2,3},{3,4} on a 3-node path.
std::shared_ptr<const TreeDecomposition> three_bag_path() {
  return std::make_shared<const TreeDecomposition>(
      TreeDecomposition{{{0, 1}, {1, 2, 3}, {3, 4}}, {{0, 1}, {1, 2}}});
}

Graph current_graph(const Graph& g, const TDView& v) {
  // Rebuild the current graph from origins: two current vertices are adjacent
  // when some of their originals are.
  std::vector<Edge> e;
  for (Vertex a = 0; a < v.num_vertices(); ++a)
    for (Vertex b = a + 1; b < v.num_vertices(); ++b) {
      bool adj = false;
      for (Vertex x : v.origin[static_cast<std::size_t>(a)])
        for (Vertex y : v.origin[static_cast<std::size_t>(b)]) adj = adj || g.adjacent(x, y);
      if (adj) e.emplace_back(a, b);
    }
  return Graph::from_edges(v.num_vertices(), e);
}

TEST(View, IdentityIsValid) {
  const Graph g = path_graph(5);
  const TDView v = make_view(three_bag_path(), 5);
  EXPECT_TRUE(validate_td(g, view_as_td(v)).ok);
  EXPECT_TRUE(lifting_holds(v));
  EXPECT_EQ(v.original(3), 3);
}

TEST(View, DeleteWholeBagLeavesEmptyBag) {
  const Graph g = path_graph(5);
  const TDView v = view_delete(make_view(three_bag_path(), 5), {3, 4});
  EXPECT_EQ(v.num_vertices(), 3);
  EXPECT_TRUE(v.bags[2].empty());
  EXPECT_EQ(v.bags.size(), 3u);
  EXPECT_TRUE(validate_td(induced_subgraph(g, {0, 1, 2}).graph, view_as_td(v)).ok);
  EXPECT_TRUE(lifting_holds(v));
}

TEST(View, ContractInsideOneBag) {
  const Graph g = path_graph(5);
  const TDView base = make_view(three_bag_path(), 5);
  const TDView v = view_contract(base, g, {1, 2});
  ASSERT_EQ(v.num_vertices(), 4);
  const Vertex p = 3;
  EXPECT_TRUE(v.placeholder[static_cast<std::size_t>(p)]);
  EXPECT_EQ(v.origin[static_cast<std::size_t>(p)], (VertexSet{1, 2}));
  // Bag 2 ({3,4}) never met z.
  EXPECT_FALSE(set_contains(v.bags[2], p));
  EXPECT_TRUE(set_contains(v.bags[1], p));
  EXPECT_TRUE(validate_td(current_graph(g, v), view_as_td(v)).ok);
}

TEST(View, ContractAcrossBagsHitsExactlyThoseNodes) {
  const Graph g = path_graph(5);
  const TDView v = view_contract(make_view(three_bag_path(), 5), g, {2, 3, 4});
  ASSERT_EQ(v.num_vertices(), 3);
  const Vertex p = 2;
  EXPECT_FALSE(set_contains(v.bags[0], p));
  EXPECT_TRUE(set_contains(v.bags[1], p));
  EXPECT_TRUE(set_contains(v.bags[2], p));
  EXPECT_TRUE(validate_td(current_graph(g, v), view_as_td(v)).ok);
  EXPECT_TRUE(lifting_holds(v));
  EXPECT_EQ(v.expand({0, p}), (VertexSet{0, 2, 3, 4}));
}

TEST(View, ContractRejectsDisconnected) {
  const Graph g = path_graph(5);
  try {
    view_contract(make_view(three_bag_path(), 5), g, {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotConnected);
  }
}

TEST(View, KeepReindexesByRank) {
  const TDView v = view_keep(make_view(nullptr, 5), {1, 4});
  EXPECT_FALSE(v.has_decomposition());
  EXPECT_EQ(v.num_vertices(), 2);
  EXPECT_EQ(v.original(1), 4);
}

// Random chains of deletions and contractions keep the view a valid
// decomposition of the current graph and keep the lifting property.
TEST(View, RandomOperationChainsStayValid) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 6 + static_cast<int>(rng() % 10);
    const Graph g = testing::random_connected_graph(n, 0.2, rng);
    TDView v = make_view(std::make_shared<const TreeDecomposition>(heuristic_td(g)), n);
    for (int step = 0; step < 4 && v.num_vertices() > 2; ++step) {
      const Graph cur = current_graph(g, v);
      const Vertex a = static_cast<Vertex>(rng() % static_cast<unsigned>(v.num_vertices()));
      if (rng() % 2 == 0) {
        v = view_delete(v, {a});
      } else if (cur.degree(a) > 0) {
        const auto nb = cur.neighbors(a);
        v = view_contract(v, cur, make_set({a, nb[rng() % nb.size()]}));
      }
      ASSERT_TRUE(validate_td(current_graph(g, v), view_as_td(v)).ok);
      ASSERT_TRUE(lifting_holds(v));
    }
  }
}

}  // namespace
}  // namespace pstruct
