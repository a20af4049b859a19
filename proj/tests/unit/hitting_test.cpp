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
#include "pstruct/hitting.hpp"
#include "small_graphs.hpp"

namespace pstruct {
namespace {

using testing::path_graph;

TDView view_of(TreeDecomposition td, int n) {
  return make_view(std::make_shared<const TreeDecomposition>(std::move(td)), n);
}

// A disjoint union of two components, each meeting both targets.
struct TwoBlocks {
  Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  std::vector<VertexSet> targets{{0, 2}, {1, 3}};
  TDView view = view_of({{{0, 1}, {2, 3}}, {{0, 1}}}, 4);
};

TEST(Blocks, Basic) {
  const Graph g = path_graph(5);
  EXPECT_TRUE(blocks(g, {}, {{0}, {4}}, {2}));
  EXPECT_FALSE(blocks(g, {}, {{0}, {4}}, {}));
  EXPECT_TRUE(blocks(g, {2}, {{0}, {4}}, {}));
  EXPECT_EQ(meeting_components(g, {2}, {{0, 4}}), (std::vector<VertexSet>{{0, 1}, {3, 4}}));
}

TEST(HellyBag, SingleBag) {
  const Graph g = complete(3);
  EXPECT_EQ(helly_bag(g, {}, {{0}, {2}}, view_of({{{0, 1, 2}}, {}}, 3)), 0);
}

TEST(HellyBag, MiddleOfThreeBagPath) {
  const Graph g = path_graph(5);
  const TDView v = view_of({{{0, 1}, {1, 2, 3}, {3, 4}}, {{0, 1}, {1, 2}}}, 5);
  const auto x = helly_bag(g, {}, {{0}, {4}}, v);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, 0);  // {0,1} already separates 0 from 4 in g - {0,1}
  const auto mid = helly_bag(g, {}, {{0, 1}, {3, 4}}, v);
  ASSERT_TRUE(mid.has_value());
  EXPECT_TRUE(blocks(g, {}, {{0, 1}, {3, 4}}, v.bags[static_cast<std::size_t>(*mid)]));
}

TEST(HellyBag, NoneForBagDisjointConnectors) {
  const TwoBlocks tb;
  EXPECT_FALSE(helly_bag(tb.g, {}, tb.targets, tb.view).has_value());
}

TEST(SplitEdge, TwoSidedExample) {
  // a=0 b=1 s=2 c=3 d=4
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {3, 4}, {0, 2}, {2, 3}});
  const TDView v = view_of({{{0, 1, 2}, {2, 3, 4}}, {{0, 1}}}, 5);
  const std::vector<VertexSet> targets{{0, 3}, {1, 4}};
  ASSERT_FALSE(helly_bag(g, {}, targets, v).has_value());
  const SplitEdge e = find_split_edge(g, {}, targets, v);
  EXPECT_EQ(e.x, 0);
  EXPECT_EQ(e.y, 1);
  EXPECT_EQ(e.f1, (VertexSet{0, 1}));
  EXPECT_EQ(e.f2, (VertexSet{3, 4}));
}

TEST(SplitEdge, TwoTriangles) {
  const Graph g =
      Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  const TDView v = view_of({{{0, 1, 2}, {2, 3}, {3, 4, 5}}, {{0, 1}, {1, 2}}}, 6);
  const std::vector<VertexSet> targets{{0, 3}, {1, 4}};
  const SplitEdge e = find_split_edge(g, {}, targets, v);
  EXPECT_EQ(e.f1, (VertexSet{0, 1}));
  EXPECT_EQ(e.f2, (VertexSet{3, 4, 5}));
}

TEST(SplitEdge, NotFoundWhenHellyHolds) {
  const Graph g = complete(3);
  EXPECT_THROW(find_split_edge(g, {}, {{0}, {2}}, view_of({{{0, 1, 2}}, {}}, 3)), Error);
}

TEST(MinimalSeparator, Examples) {
  // a - s - c
  EXPECT_EQ(minimal_separator_within(path_graph(3), {1}, {0}, {2}), (VertexSet{1}));
  // C_4: 0 - 1 - 2 - 3 - 0 with a=0, c=2.
  EXPECT_EQ(minimal_separator_within(testing::cycle_graph(4), {1, 3}, {0}, {2}), (VertexSet{1, 3}));
  // a - s1 - s2 - c: s1 is tried first and dropped.
  EXPECT_EQ(minimal_separator_within(path_graph(4), {1, 2}, {0}, {3}), (VertexSet{2}));
}

TEST(MinimalSeparator, RejectsNonSeparating) {
  try {
    minimal_separator_within(testing::cycle_graph(4), {1}, {0}, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotSeparating);
  }
  EXPECT_THROW(minimal_separator_within(path_graph(3), {0, 1}, {0}, {2}), Error);
}

TEST(ImplicitHit, BlockerWhenTooFewMembers) {
  const TwoBlocks tb;
  const HitOutcome out = implicit_tree_hit(tb.g, {}, tb.targets, tb.view, 3);
  const auto* b = std::get_if<Blocker>(&out);
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->bag_ids.size(), 2u);
  EXPECT_EQ(b->y, (VertexSet{0, 1, 2, 3}));
}

TEST(ImplicitHit, DeepestFirstConnectors) {
  const TwoBlocks tb;
  const HitOutcome out = implicit_tree_hit(tb.g, {}, tb.targets, tb.view, 2);
  const auto* c = std::get_if<Connectors>(&out);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->trees, (std::vector<VertexSet>{{2, 3}, {0, 1}}));
}

TEST(ImplicitHit, UnreachableTargets) {
  const Graph g = path_graph(3);
  const HitOutcome out = implicit_tree_hit(g, {1}, {{0}, {2}}, view_of({{{0, 1, 2}}, {}}, 3), 2);
  const auto* b = std::get_if<Blocker>(&out);
  ASSERT_NE(b, nullptr);
  EXPECT_TRUE(b->y.empty());
  EXPECT_TRUE(b->bag_ids.empty());
}

// Either outcome is checked against its definition on random inputs.
TEST(ImplicitHit, OutcomeProperty) {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 5 + static_cast<int>(rng() % 12);
    const Graph g = testing::random_graph(n, 0.2, rng);
    const TDView v = make_view(std::make_shared<const TreeDecomposition>(heuristic_td(g)), n);
    std::vector<Vertex> order = all_vertices(n);
    std::shuffle(order.begin(), order.end(), rng);
    const VertexSet u = make_set({order[0]});
    std::vector<VertexSet> targets;
    for (int i = 0; i < 2; ++i) targets.push_back(make_set({order[static_cast<std::size_t>(1 + i)],
                                                             order[static_cast<std::size_t>(3 + i)]}));
    const int t = 1 + static_cast<int>(rng() % 3);
    const HitOutcome out = implicit_tree_hit(g, u, targets, v, t);
    if (const auto* b = std::get_if<Blocker>(&out)) {
      EXPECT_LE(static_cast<int>(b->bag_ids.size()), t - 1);
      EXPECT_TRUE(blocks(g, u, targets, b->y));
      VertexSet cover;
      for (int id : b->bag_ids) cover = set_union(cover, v.bags[static_cast<std::size_t>(id)]);
      EXPECT_TRUE(is_subset(b->y, cover));
    } else {
      const auto& trees = std::get<Connectors>(out).trees;
      ASSERT_EQ(static_cast<int>(trees.size()), t);
      for (std::size_t i = 0; i < trees.size(); ++i) {
        EXPECT_TRUE(is_connected(g, trees[i]));
        EXPECT_FALSE(intersects(trees[i], u));
        for (const auto& a : targets) EXPECT_TRUE(intersects(trees[i], a));
        for (std::size_t j = i + 1; j < trees.size(); ++j) EXPECT_FALSE(intersects(trees[i], trees[j]));
      }
    }
  }
}

TEST(Steiner, Examples) {
  const SteinerResult p = group_steiner_min(path_graph(5), {{0}, {4}});
  EXPECT_EQ(p.size, 5);
  EXPECT_EQ(p.tree, (VertexSet{0, 1, 2, 3, 4}));
  const SteinerResult s = group_steiner_min(testing::star_graph(3), {{1}, {2}, {3}});
  EXPECT_EQ(s.size, 4);
  EXPECT_EQ(s.tree, (VertexSet{0, 1, 2, 3}));
  const SteinerResult one = group_steiner_min(path_graph(4), {{2, 3}});
  EXPECT_EQ(one.size, 1);
  EXPECT_EQ(one.tree, (VertexSet{2}));
  EXPECT_EQ(group_steiner_min(Graph(2), {{0}, {1}}).size, SteinerResult::kInfinite);
}

TEST(Steiner, TooManyGroups) {
  std::vector<VertexSet> groups(9, VertexSet{0});
  try {
    group_steiner_min(path_graph(2), groups);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooManyGroups);
  }
}

TEST(Steiner, MatchesBruteForce) {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = testing::random_graph(n, 0.3, rng);
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<VertexSet> groups;
    for (int i = 0; i < k; ++i) {
      std::vector<Vertex> grp{static_cast<Vertex>(rng() % static_cast<unsigned>(n))};
      if (rng() % 2) grp.push_back(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
      groups.push_back(make_set(grp));
    }
    const SteinerResult r = group_steiner_min(g, groups);
    const int want = testing::brute_steiner(g, groups);
    ASSERT_EQ(r.size, want);
    if (want != SteinerResult::kInfinite) {
      EXPECT_EQ(static_cast<int>(r.tree.size()), want);
      EXPECT_TRUE(is_connected(g, r.tree));
      for (const auto& grp : groups) EXPECT_TRUE(intersects(r.tree, grp));
    }
  }
}

TEST(FindTree, PathExamples) {
  const Graph g = path_graph(10);
  const HitOutcome big = find_tree(g, {{0}, {9}}, 10);
  ASSERT_TRUE(std::holds_alternative<Connectors>(big));
  EXPECT_EQ(std::get<Connectors>(big).trees.at(0).size(), 10u);
  const HitOutcome small = find_tree(g, {{0}, {9}}, 3);
  ASSERT_TRUE(std::holds_alternative<Blocker>(small));
  EXPECT_EQ(std::get<Blocker>(small).y, (VertexSet{8}));
  const HitOutcome single = find_tree(g, {{4}}, 1);
  ASSERT_TRUE(std::holds_alternative<Connectors>(single));
  EXPECT_EQ(std::get<Connectors>(single).trees.at(0), (VertexSet{4}));
}

TEST(FindTree, BlockerProperty) {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 20);
    const Graph g = testing::random_connected_graph(n, 0.05, rng);
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<VertexSet> groups;
    for (int i = 0; i < k; ++i) groups.push_back({static_cast<Vertex>(rng() % static_cast<unsigned>(n))});
    const double x = 1.0 + static_cast<double>(rng() % 8);
    const HitOutcome out = find_tree(g, groups, x);
    if (const auto* b = std::get_if<Blocker>(&out)) {
      EXPECT_TRUE(blocks(g, {}, groups, b->y));
      EXPECT_LE(static_cast<double>(b->y.size()), find_tree_blocker_bound(n, k, x) + 1e-9);
    } else {
      const auto& tree = std::get<Connectors>(out).trees.at(0);
      EXPECT_LE(static_cast<double>(tree.size()), x);
      EXPECT_TRUE(is_connected(g, tree));
      for (const auto& grp : groups) EXPECT_TRUE(intersects(tree, grp));
    }
  }
}

TEST(FindTrees, Examples) {
  const Graph two = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  const HitOutcome c = find_trees(two, {{0, 3}, {2, 5}}, 3, 2);
  ASSERT_TRUE(std::holds_alternative<Connectors>(c));
  EXPECT_EQ(std::get<Connectors>(c).trees.size(), 2u);
  const HitOutcome b = find_trees(path_graph(10), {{0}, {9}}, 10, 2);
  ASSERT_TRUE(std::holds_alternative<Blocker>(b));
  EXPECT_EQ(std::get<Blocker>(b).y.size(), 10u);
  const HitOutcome one = find_trees(path_graph(10), {{0}, {9}}, 3, 1);
  const HitOutcome direct = find_tree(path_graph(10), {{0}, {9}}, 3);
  EXPECT_EQ(std::get<Blocker>(one).y, std::get<Blocker>(direct).y);
}

TEST(FindTrees, BlockerWithinBound) {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 6 + static_cast<int>(rng() % 20);
    const Graph g = testing::random_connected_graph(n, 0.1, rng);
    const std::vector<VertexSet> groups{{0}, {static_cast<Vertex>(n - 1)}, {static_cast<Vertex>(n / 2)}};
    const double x = 2.0 + static_cast<double>(rng() % 6);
    const int l = 1 + static_cast<int>(rng() % 3);
    const HitOutcome out = find_trees(g, groups, x, l);
    if (const auto* b = std::get_if<Blocker>(&out)) {
      EXPECT_TRUE(blocks(g, {}, groups, b->y));
      EXPECT_LE(static_cast<double>(b->y.size()), find_trees_blocker_bound(n, 3, x, l) + 1e-9);
    } else {
      const auto& trees = std::get<Connectors>(out).trees;
      ASSERT_EQ(static_cast<int>(trees.size()), l);
      for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = i + 1; j < trees.size(); ++j) EXPECT_FALSE(intersects(trees[i], trees[j]));
    }
  }
}

TEST(Menger, Examples) {
  const HitOutcome c4 = menger_vertex_cut(testing::cycle_graph(4), {0}, {2}, 2);
  ASSERT_TRUE(std::holds_alternative<Connectors>(c4));
  EXPECT_EQ(std::get<Connectors>(c4).trees.size(), 2u);
  const HitOutcome p = menger_vertex_cut(path_graph(3), {0}, {2}, 2);
  ASSERT_TRUE(std::holds_alternative<Blocker>(p));
  EXPECT_EQ(std::get<Blocker>(p).y, (VertexSet{1}));
  // Theta graph: 0 and 1 joined through 2, 3-4 and 5.
  const Graph theta = Graph::from_edges(6, std::vector<Edge>{{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 1}});
  const HitOutcome th = menger_vertex_cut(theta, {0}, {1}, 3);
  ASSERT_TRUE(std::holds_alternative<Connectors>(th));
  EXPECT_EQ(std::get<Connectors>(th).trees.size(), 3u);
}

TEST(Menger, CutSizeMatchesPathCount) {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const Graph g = testing::random_graph(n, 0.3, rng);
    const VertexSet a{0}, b{static_cast<Vertex>(n - 1)};
    if (g.adjacent(0, n - 1)) continue;
    VertexSet cut;
    const auto paths = menger_paths(g, a, b, n, TerminalPolicy::kInternallyDisjoint, &cut);
    EXPECT_EQ(cut.size(), paths.size());
    EXPECT_TRUE(blocks(g, {}, {a, b}, cut));
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    for (const auto& path : paths) {
      EXPECT_EQ(path.front(), 0);
      EXPECT_EQ(path.back(), n - 1);
      for (std::size_t i = 1; i + 1 < path.size(); ++i) ++used[static_cast<std::size_t>(path[i])];
      for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(g.adjacent(path[i], path[i + 1]));
    }
    for (int c : used) EXPECT_LE(c, 1);
  }
}

}  // namespace
}  // namespace pstruct
