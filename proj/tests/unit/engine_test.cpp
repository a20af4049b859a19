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

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "oracles.hpp"
#include "pstruct/decomp.hpp"
#include "pstruct/engine.hpp"
#include "pstruct/error.hpp"
#include "pstruct/generate.hpp"
#include "pstruct/hitting.hpp"
#include "pstruct/verify.hpp"
#include "small_graphs.hpp"

namespace pstruct {
namespace {

using testing::path_graph;

std::shared_ptr<const TreeDecomposition> shared(TreeDecomposition td) {
  return std::make_shared<const TreeDecomposition>(std::move(td));
}

// K_s joined completely to t independent vertices.
Graph kstar(int s, int t) {
  std::vector<Edge> e;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s + t; ++j) e.emplace_back(i, j);
  return Graph::from_edges(s + t, e);
}

TEST(MinimizeBlocker, Examples) {
  const Graph g = path_graph(8);
  const std::vector<VertexSet> targets{{0}, {7}};
  // {4} alone blocks, so 4 is dropped first and {5} remains.
  EXPECT_EQ(minimize_blocker(g, {}, targets, {4, 5}), (VertexSet{5}));
  EXPECT_EQ(minimize_blocker(g, {}, targets, {3}), (VertexSet{3}));
  EXPECT_TRUE(minimize_blocker(g, {2}, targets, {4, 5}).empty());
}

TEST(MainEngine, CliqueModelIsBaseCase) {
  const Graph g = complete(3);
  const auto td = shared({{{0, 1, 2}}, {}});
  const EngineOutcome out = partition_rooted_main(g, make_view(td, 3), {{0}, {1}, {2}}, 3, 2);
  const auto& r = std::get<PartitionResult>(out);
  EXPECT_EQ(r.parts, (std::vector<VertexSet>{{0}, {1}, {2}}));
  EXPECT_EQ(r.quotient.num_edges(), 3u);
  EXPECT_EQ(r.h_cert.num_nodes(), 1);
  EXPECT_TRUE(check_partition_result(g, td.get(), r, 3, 2));
}

TEST(MainEngine, PathWithSingleBag) {
  const Graph g = path_graph(3);
  const auto td = shared({{{0, 1, 2}}, {}});
  const EngineOutcome out = partition_rooted_main(g, make_view(td, 3), {{0}}, 2, 2);
  const auto& r = std::get<PartitionResult>(out);
  const Verdict v = check_partition_result(g, td.get(), r, 2, 2);
  EXPECT_TRUE(v) << v.violation;
  EXPECT_EQ(r.parts.front(), (VertexSet{0}));
  EXPECT_EQ(r.roots, (std::vector<int>{0}));
  ASSERT_TRUE(r.cover_certs.has_value());
  for (const auto& c : *r.cover_certs) EXPECT_EQ(c.size(), 1u);
}

TEST(MainEngine, Grid4x4CoverCertsUseOneBag) {
  const Graph g = grid(4, 4).graph;
  const auto td = shared(heuristic_td(g));
  EngineOptions opt;
  opt.check_views = true;
  const EngineOutcome out = partition_rooted_main(g, make_view(td, 16), {{0}}, 3, 2, opt);
  const auto& r = std::get<PartitionResult>(out);
  const Verdict v = check_partition_result(g, td.get(), r, 3, 2);
  EXPECT_TRUE(v) << v.violation;
  for (const auto& c : *r.cover_certs) EXPECT_EQ(c.size(), 1u);
}

TEST(MainEngine, RejectsSmallParameters) {
  const Graph g = path_graph(3);
  const auto td = shared(heuristic_td(g));
  EXPECT_THROW(partition_rooted_main(g, make_view(td, 3), {{0}}, 1, 3), Error);
  EXPECT_THROW(partition_rooted_main(g, make_view(td, 3), {{0}, {1}, {2}}, 2, 2), Error);
}

TEST(MainEngine, K5SingleBagBlocksWithOneBag) {
  // Rooted at a triangle with one bag holding everything, the greedy hit
  // finds a single member, so the rest becomes one part covered by one bag.
  const Graph g = complete(5);
  const auto td = shared({{{0, 1, 2, 3, 4}}, {}});
  const EngineOutcome out = partition_rooted_main(g, make_view(td, 5), {{0}, {1}, {2}}, 3, 2);
  const auto& r = std::get<PartitionResult>(out);
  EXPECT_EQ(r.parts, (std::vector<VertexSet>{{0}, {1}, {2}, {3, 4}}));
  const Verdict v = check_partition_result(g, td.get(), r, 3, 2);
  EXPECT_TRUE(v) << v.violation;
}

TEST(MainEngine, SplitBagsGiveWitness) {
  // K_3 on {0,1,2} joined to 3 and 4, which meet through 5. The
  // decomposition puts 3 and 4 in different leaves, so the greedy hit finds
  // two members and the result is J_{3,2}.
  const Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4},
                                                         {1, 4}, {2, 4}, {3, 5}, {4, 5}});
  const auto td = shared({{{0, 1, 2, 5}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}}, {{0, 1}, {0, 2}}});
  ASSERT_TRUE(validate_td(g, *td).ok);
  const EngineOutcome out = partition_rooted_main(g, make_view(td, 6), {{0}, {1}, {2}}, 3, 2);
  const auto* w = std::get_if<MinorWitness>(&out);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->flavor, MinorWitness::Flavor::kJ);
  EXPECT_TRUE(check_witness(g, *w, 3, 2));
}

// Every outcome on every small connected graph is certified by the checker.
TEST(MainEngine, AllSmallGraphsCertified) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    const auto td = shared(exact_treewidth_small(g).td);
    for (auto [s, t] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      const EngineOutcome out = partition_rooted_main(g, make_view(td, g.num_vertices()), {{0}}, s, t);
      if (const auto* w = std::get_if<MinorWitness>(&out)) {
        ASSERT_TRUE(check_witness(g, *w, s, t)) << s << "," << t;
      } else {
        const Verdict v = check_partition_result(g, td.get(), std::get<PartitionResult>(out), s, t);
        ASSERT_TRUE(v) << v.violation;
      }
    }
  }
}

TEST(MainEngine, Deterministic) {
  std::mt19937_64 rng(83);
  const Graph g = testing::random_connected_graph(30, 0.08, rng);
  const auto td = shared(heuristic_td(g));
  const auto a = partition_rooted_main(g, make_view(td, 30), {{0}}, 3, 3);
  const auto b = partition_rooted_main(g, make_view(td, 30), {{0}}, 3, 3);
  ASSERT_EQ(a.index(), b.index());
  if (a.index() == 0) {
    EXPECT_EQ(std::get<0>(a).parts, std::get<0>(b).parts);
    EXPECT_EQ(std::get<0>(a).h_cert, std::get<0>(b).h_cert);
  }
}

TEST(StwEngine, ModelOnlyIsSingleBag) {
  const Graph g = complete(3);
  const auto td = shared({{{0, 1, 2}}, {}});
  const auto out = partition_rooted_stw(g, make_view(td, 3), {{0}, {1}, {2}}, 3, 3);
  const auto& r = std::get<PartitionResult>(out);
  EXPECT_EQ(r.h_cert.num_nodes(), 1);
  EXPECT_TRUE(r.simple);
  EXPECT_TRUE(check_simple(r.h_cert, 3));
}

TEST(StwEngine, K4IsSimple) {
  const Graph g = complete(4);
  const auto td = shared(heuristic_td(g));
  const auto out = partition_rooted_stw(g, make_view(td, 4), {{0}}, 3, 3);
  const auto& r = std::get<PartitionResult>(out);
  const Verdict v = check_partition_result(g, td.get(), r, 3, 3);
  EXPECT_TRUE(v) << v.violation;
  EXPECT_TRUE(r.simple);
}

TEST(StwEngine, KStarGivesKstWitness) {
  // Rooted at its own clique side, the graph is its own witness.
  const Graph g = kstar(3, 3);
  const auto td = shared(heuristic_td(g));
  const auto out = partition_rooted_stw(g, make_view(td, 6), {{0}, {1}, {2}}, 3, 3);
  const auto* w = std::get_if<MinorWitness>(&out);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->flavor, MinorWitness::Flavor::kKst);
  EXPECT_TRUE(check_witness(g, *w, 3, 3));
}

TEST(StwEngine, KStarFromSingleRootIsCertified) {
  // From one root the recursion may settle on a valid partition instead.
  const Graph g = kstar(3, 3);
  const auto td = shared(heuristic_td(g));
  const auto out = partition_rooted_stw(g, make_view(td, 6), {{0}}, 3, 3);
  if (const auto* r = std::get_if<PartitionResult>(&out)) {
    const Verdict v = check_partition_result(g, td.get(), *r, 3, 3);
    EXPECT_TRUE(v) << v.violation;
  } else {
    EXPECT_TRUE(check_witness(g, std::get<MinorWitness>(out), 3, 3));
  }
}

TEST(StwEngine, UniqueFullBagWhenAllRootsPresent) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    const auto td = shared(heuristic_td(g));
    EngineOptions opt;
    int bad = 0;
    opt.observer = [&](int roots, const TreeDecomposition& h) {
      if (roots != 3) return;
      std::vector<int> members{0, 1, 2};
      if (!check_unique_full_bag(h, members)) ++bad;
    };
    const auto out = partition_rooted_stw(g, make_view(td, g.num_vertices()), {{0}}, 3, 3, opt);
    EXPECT_EQ(bad, 0);
    if (const auto* r = std::get_if<PartitionResult>(&out)) {
      const Verdict v = check_partition_result(g, td.get(), *r, 3, 3);
      ASSERT_TRUE(v) << v.violation;
    } else {
      ASSERT_TRUE(check_witness(g, std::get<MinorWitness>(out), 3, 3));
    }
  }
}

TEST(SqrtEngine, K6BaseCase) {
  const Graph g = complete(6);
  const double m = sqrt_width_bound(3, 2, 6).m;
  const auto out = partition_rooted_sqrt(g, {{0}}, 3, 2, m);
  ASSERT_TRUE(std::holds_alternative<PartitionResult>(out));
  const auto& r = std::get<PartitionResult>(out);
  EXPECT_EQ(r.parts, (std::vector<VertexSet>{{0}, {1, 2, 3, 4, 5}}));
  EXPECT_EQ(r.quotient.num_edges(), 1u);
  PartitionCheck pc;
  pc.m_bound = m;
  EXPECT_TRUE(check_partition_result(g, nullptr, r, 3, 2, pc));
}

TEST(SqrtEngine, WheelWitness) {
  const Graph g = wheel(5).graph;
  const double m = sqrt_width_bound(1, 3, 6).m;
  const auto out = partition_rooted_sqrt(g, {{5}}, 1, 3, m);
  const auto* w = std::get_if<MinorWitness>(&out);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->flavor, MinorWitness::Flavor::kJ);
  EXPECT_TRUE(check_witness(g, *w, 1, 3));
}

TEST(SqrtEngine, SingleVertex) {
  const auto out = partition_rooted_sqrt(Graph(1), {{0}}, 2, 2, sqrt_width_bound(2, 2, 1).m);
  const auto& r = std::get<PartitionResult>(out);
  EXPECT_EQ(r.parts.size(), 1u);
  EXPECT_EQ(r.quotient.num_vertices(), 1);
}

TEST(SqrtEngine, BoundsDominateReference) {
  for (int n : {10, 100, 1000, 10000})
    for (auto [s, t] : {std::pair{1, 2}, {2, 3}, {3, 2}, {4, 4}}) {
      const SqrtBound b = sqrt_width_bound(s, t, n);
      EXPECT_GE(b.m, std::min(sqrt_reference_m(s, t, n), static_cast<double>(n)) - 1e-9);
      EXPECT_GE(b.x_grow, 1.0);
      EXPECT_GE(b.x_final, 1.0);
    }
}

TEST(SqrtEngine, RandomGraphsCertified) {
  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 5 + static_cast<int>(rng() % 40);
    const Graph g = testing::random_connected_graph(n, 0.06, rng);
    for (auto [s, t] : {std::pair{1, 2}, {2, 2}, {3, 2}, {3, 3}}) {
      const double m = sqrt_width_bound(s, t, n).m;
      const auto out = partition_rooted_sqrt(g, {{0}}, s, t, m);
      if (const auto* w = std::get_if<MinorWitness>(&out)) {
        ASSERT_TRUE(check_witness(g, *w, s, t));
      } else {
        PartitionCheck pc;
        pc.m_bound = m;
        const Verdict v = check_partition_result(g, nullptr, std::get<PartitionResult>(out), s, t, pc);
        ASSERT_TRUE(v) << v.violation;
      }
    }
  }
}

}  // namespace
}  // namespace pstruct
