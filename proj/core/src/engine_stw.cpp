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

#include "engine_internal.hpp"
#include "pstruct/error.hpp"
#include "pstruct/hitting.hpp"

namespace pstruct {

namespace {

using namespace detail;

// Some component Q misses A_i: solve G[U - U_i + Q] and G - Q separately and
// join them by one tree edge.
SubResult split_missing(const Frame& f, const Model& model, const VertexSet& u, const VertexSet& q, int i,
                        const Recurse& recurse) {
  const int r = static_cast<int>(model.size());
  PSTRUCT_ASSERT(r >= 2, "a component avoids the only root, so the graph is disconnected");
  Model others;
  std::vector<int> map1;
  for (int k = 0; k < r; ++k) {
    if (k == i) continue;
    others.push_back(model[static_cast<std::size_t>(k)]);
    map1.push_back(k);
  }
  Assembler as(r);
  Reindexed g1 = frame_keep(f, set_union(set_difference(u, model[static_cast<std::size_t>(i)]), q));
  SubResult c1 = recurse(g1.frame, map_model(others, g1.map));
  int off1 = as.absorb(c1, map1);
  int x = Assembler::bag_with(c1, off1, first_indices(r - 1));

  Reindexed g2 = frame_keep(f, set_difference(all_vertices(f.g.num_vertices()), q));
  SubResult c2 = recurse(g2.frame, map_model(model, g2.map));
  int off2 = as.absorb(c2, first_indices(r));
  int y = Assembler::bag_with(c2, off2, first_indices(r));
  as.add_edge(x, y);
  return std::move(as).finish();
}

// Split case for r < s: keep only the component of G[S + V_j] through S and
// contract it.
SubResult split_at_separator(const Frame& f, const Model& model, const VertexSet& u, const SplitEdge& se,
                             const Recurse& recurse) {
  const Graph& g = f.g;
  const int n = g.num_vertices();
  const int r = static_cast<int>(model.size());
  const VertexSet rest = complement(n, u);
  VertexSet cand = set_difference(
      set_intersection(f.view.bags[static_cast<std::size_t>(se.x)], f.view.bags[static_cast<std::size_t>(se.y)]), u);
  VertexSet sep = minimal_separator_within(g, cand, se.f1, se.f2, u);
  VertexSet v1;
  for (auto& c : components(g, set_difference(rest, sep)))
    if (set_contains(c, se.f1.front())) v1 = c;
  VertexSet v2 = set_difference(set_difference(rest, sep), v1);
  PSTRUCT_ASSERT(is_subset(se.f2, v2), "separator leaves both sides together");

  Assembler as(r);
  std::vector<int> root_map = first_indices(r);
  // An empty separator leaves nothing to stand in for the placeholders.
  root_map.push_back(sep.empty() ? -1 : as.add_part(f.view.expand(sep), {se.x}));
  int link[2];
  const VertexSet sides[2] = {v1, v2};
  const VertexSet* seeds[2] = {&se.f1, &se.f2};
  for (int j = 0; j < 2; ++j) {
    Vertex anchor = sep.empty() ? seeds[j]->front() : sep.front();
    VertexSet q;
    for (auto& c : components(g, set_union(sep, sides[j])))
      if (set_contains(c, anchor)) q = c;
    PSTRUCT_ASSERT(is_subset(sep, q) && is_subset(*seeds[j], q), "separator side is not connected through S");
    Reindexed kept = frame_keep(f, set_difference(all_vertices(n), set_difference(sides[j], q)));
    VertexSet kq;
    for (Vertex v : q) kq.push_back(kept.map[static_cast<std::size_t>(v)]);
    Reindexed c = frame_contract(kept.frame, make_set(std::move(kq)));
    Model grown = map_model(map_model(model, kept.map), c.map);
    grown.push_back({c.frame.g.num_vertices() - 1});
    SubResult child = recurse(c.frame, grown);
    int off = as.absorb(child, root_map);
    link[j] = Assembler::bag_with(child, off, first_indices(r + 1));
  }
  as.add_edge(link[0], link[1]);
  return std::move(as).finish();
}

// Star assembly around the central bag {U_1, ..., U_r, Y}.
SubResult star_stage(const Frame& f, const Model& model, const VertexSet& u, const std::vector<VertexSet>& a,
                     const VertexSet& y, std::vector<int> cert, const Recurse& recurse) {
  const int r = static_cast<int>(model.size());
  Assembler as(r);
  const int yi = as.add_part(f.view.expand(y), std::move(cert));
  VertexSet top = first_indices(r);
  top.push_back(yi);
  const int central = as.add_node(top);

  std::vector<VertexSet> groups(static_cast<std::size_t>(r));
  for (auto& comp : components(f.g, set_difference(complement(f.g.num_vertices(), u), y))) {
    int miss = -1;
    for (int k = 0; k < r && miss < 0; ++k)
      if (!intersects(a[static_cast<std::size_t>(k)], comp)) miss = k;
    PSTRUCT_ASSERT(miss >= 0, "a component meets every attachment set");
    groups[static_cast<std::size_t>(miss)] = set_union(groups[static_cast<std::size_t>(miss)], comp);
  }
  for (int j = 0; j < r; ++j) {
    const VertexSet& grp = groups[static_cast<std::size_t>(j)];
    if (grp.empty()) continue;
    VertexSet z = contraction_set(f, model, u, y, grp, a[static_cast<std::size_t>(j)], j);
    SubResult child = solve_component(f, model, u, grp, z, j, recurse);
    std::vector<int> root_map = first_indices(r);
    root_map[static_cast<std::size_t>(j)] = yi;
    int off = as.absorb(child, root_map);
    as.add_edge(central, Assembler::bag_with(child, off, first_indices(r)));
  }
  return std::move(as).finish();
}

SubResult stw_step(const Frame& f, const Model& model, const Recurse& recurse, int s, int t) {
  const Graph& g = f.g;
  const int n = g.num_vertices();
  const int r = static_cast<int>(model.size());
  const VertexSet u = model_union(model);
  if (static_cast<int>(u.size()) == n) return base_clique(r);

  const std::vector<VertexSet> a = attachments(g, model, u);
  for (int i = 0; i < r; ++i)
    if (a[static_cast<std::size_t>(i)].empty()) return drop_root(f, model, i, recurse);

  for (auto& comp : components(g, complement(n, u)))
    for (int i = 0; i < r; ++i)
      if (!intersects(a[static_cast<std::size_t>(i)], comp)) return split_missing(f, model, u, comp, i, recurse);

  VertexSet y;
  std::vector<int> cert;
  if (r <= s - 1) {
    if (auto x = helly_bag(g, u, a, f.view)) {
      y = set_difference(f.view.bags[static_cast<std::size_t>(*x)], u);
      cert = {*x};
    } else {
      return split_at_separator(f, model, u, find_split_edge(g, u, a, f.view), recurse);
    }
  } else {
    HitOutcome hit = implicit_tree_hit(g, u, a, f.view, t);
    if (auto* conn = std::get_if<Connectors>(&hit)) throw_witness(f, model, conn->trees, MinorWitness::Flavor::kKst);
    auto& blk = std::get<Blocker>(hit);
    y = std::move(blk.y);
    cert = std::move(blk.bag_ids);
  }
  y = minimize_blocker(g, u, a, y);
  return star_stage(f, model, u, a, y, std::move(cert), recurse);
}

}  // namespace

EngineOutcome partition_rooted_stw(const Graph& g, const TDView& view, const Model& model, int s, int t,
                                   const EngineOptions& options) {
  require(s >= 2 && t >= 2, ErrorKind::kBadParams, "the simple engine needs s, t >= 2");
  require(static_cast<int>(model.size()) <= s, ErrorKind::kBadParams, "model has more than s branch sets");
  require(view.has_decomposition(), ErrorKind::kInvalidInput, "the simple engine needs a decomposition");
  require(is_connected(g), ErrorKind::kNotConnected, "the simple engine needs a connected graph");
  detail::RunSpec spec;
  spec.t = t;
  spec.reported_m = static_cast<double>(t - 1) * (view.base->width() + 1);
  spec.simple = true;
  detail::Step step = [s, t](const detail::Frame& f, const Model& m, const detail::Recurse& rec) {
    return stw_step(f, m, rec, s, t);
  };
  return detail::run_engine(g, view, model, step, options, spec);
}

}  // namespace pstruct
