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

#include <cmath>

#include "engine_internal.hpp"
#include "pstruct/error.hpp"
#include "pstruct/hitting.hpp"

namespace pstruct {

namespace {

using namespace detail;

struct SqrtParams {
  int s;
  int t;
  SqrtBound bound;
};

// G - U as its own graph; sets are translated in both directions.
struct Rest {
  InducedSubgraph sub;

  VertexSet local(const VertexSet& s) const {
    VertexSet out;
    for (Vertex v : s) out.push_back(sub.to_local[static_cast<std::size_t>(v)]);
    return make_set(std::move(out));
  }
  VertexSet global(const VertexSet& s) const {
    VertexSet out;
    for (Vertex v : s) out.push_back(sub.to_global[static_cast<std::size_t>(v)]);
    return make_set(std::move(out));
  }
};

// Adds `extra` as root r, solves, and turns it back into an ordinary part.
SubResult grow_model(const Frame& f, const Model& model, VertexSet extra, const Recurse& recurse) {
  const int r = static_cast<int>(model.size());
  Model grown = model;
  grown.push_back(extra);
  SubResult child = recurse(f, grown);
  Assembler as(r);
  std::vector<int> root_map = first_indices(r);
  root_map.push_back(as.add_part(f.view.expand(extra), {}));
  as.absorb(child, root_map);
  return std::move(as).finish();
}

SubResult sqrt_step(const Frame& f, const Model& model, const Recurse& recurse, const SqrtParams& p) {
  const Graph& g = f.g;
  const int n = g.num_vertices();
  const int r = static_cast<int>(model.size());
  const int s = p.s, t = p.t;
  const double m = p.bound.m;
  const VertexSet u = model_union(model);
  const VertexSet rest = complement(n, u);

  if (n <= r + m) {
    if (rest.empty()) return base_clique(r);
    Assembler as(r);
    int part = as.add_part(f.view.expand(rest), {});
    VertexSet bag = first_indices(r);
    bag.push_back(part);
    as.add_node(bag);
    return std::move(as).finish();
  }

  const std::vector<VertexSet> a = attachments(g, model, u);
  for (int i = 0; i < r; ++i)
    if (a[static_cast<std::size_t>(i)].empty()) return drop_root(f, model, i, recurse);
  std::vector<VertexSet> comps = components(g, rest);
  if (comps.size() > 1) return split_components(f, model, comps, recurse);

  const Rest gr{induced_subgraph(g, rest)};
  const int nr = static_cast<int>(rest.size());
  std::vector<VertexSet> local_a;
  for (const auto& ai : a) local_a.push_back(gr.local(ai));

  VertexSet y;
  if (s == 1) {
    const VertexSet& a1 = a.front();
    if (static_cast<int>(a1.size()) >= t) {
      std::vector<VertexSet> seeds;
      for (int i = 0; i < t; ++i) seeds.push_back({a1[static_cast<std::size_t>(i)]});
      throw_grown_witness(f, model, u, seeds, MinorWitness::Flavor::kJ);
    }
    y = a1;
  } else if (s == 2) {
    if (r == 1) return grow_model(f, model, {a.front().front()}, recurse);
    HitOutcome hit = menger_vertex_cut(gr.sub.graph, local_a[0], local_a[1], t, TerminalPolicy::kFullyDisjoint);
    if (auto* conn = std::get_if<Connectors>(&hit)) {
      std::vector<VertexSet> seeds;
      for (const auto& path : conn->trees) seeds.push_back(gr.global(path));
      throw_grown_witness(f, model, u, seeds, MinorWitness::Flavor::kJ);
    }
    y = gr.global(std::get<Blocker>(hit).y);
  } else if (r < s) {
    const double x = p.bound.x_grow;
    if (find_tree_blocker_bound(nr, r, x) >= nr) {
      y = rest;
    } else {
      HitOutcome hit = find_tree(gr.sub.graph, local_a, x);
      if (auto* conn = std::get_if<Connectors>(&hit)) return grow_model(f, model, gr.global(conn->trees.front()), recurse);
      y = gr.global(std::get<Blocker>(hit).y);
    }
  } else if (t == 1) {
    throw_witness(f, model, {rest}, MinorWitness::Flavor::kJ);
  } else {
    const double x = p.bound.x_final;
    if (find_trees_blocker_bound(nr, s, x, t) >= nr) {
      y = rest;
    } else {
      HitOutcome hit = find_trees(gr.sub.graph, local_a, x, t);
      if (auto* conn = std::get_if<Connectors>(&hit)) {
        std::vector<VertexSet> seeds;
        for (const auto& tree : conn->trees) seeds.push_back(gr.global(tree));
        throw_grown_witness(f, model, u, seeds, MinorWitness::Flavor::kJ);
      }
      y = gr.global(std::get<Blocker>(hit).y);
    }
  }
  PSTRUCT_ASSERT(static_cast<double>(y.size()) <= m, "blocker exceeds the width bound");
  y = minimize_blocker(g, u, a, y);
  return final_stage(f, model, u, a, y, {}, recurse);
}

}  // namespace

EngineOutcome partition_rooted_sqrt(const Graph& g, const Model& model, int s, int t, double m,
                                    const EngineOptions& options) {
  require(s >= 1 && t >= 1, ErrorKind::kBadParams, "the sqrt engine needs s, t >= 1");
  require(static_cast<int>(model.size()) <= s, ErrorKind::kBadParams, "model has more than s branch sets");
  SqrtParams params{s, t, sqrt_width_bound(s, t, g.num_vertices())};
  require(m + 1e-9 >= params.bound.m, ErrorKind::kBadParams,
          "m is below the bound the active hitting method guarantees");
  params.bound.m = m;
  for (const auto& part : model)
    require(static_cast<double>(part.size()) <= m, ErrorKind::kBadParams, "a model branch set is larger than m");
  detail::RunSpec spec;
  spec.with_certs = false;
  spec.t = t;
  spec.reported_m = m;
  detail::Step step = [params](const detail::Frame& f, const Model& mm, const detail::Recurse& rec) {
    return sqrt_step(f, mm, rec, params);
  };
  return detail::run_engine(g, make_view(nullptr, g.num_vertices()), model, step, options, spec);
}

}  // namespace pstruct
