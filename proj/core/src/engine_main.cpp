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

// Component of G - U - S that contains `seed`.
VertexSet side_of(const Graph& g, const VertexSet& u, const VertexSet& s, Vertex seed) {
  for (auto& c : components(g, set_difference(complement(g.num_vertices(), u), s)))
    if (set_contains(c, seed)) return c;
  PSTRUCT_ASSERT(false, "seed vertex lies in the separator");
  return {};
}

SubResult main_step(const Frame& f, const Model& model, const Recurse& recurse, int s, int t) {
  const Graph& g = f.g;
  const int n = g.num_vertices();
  const int r = static_cast<int>(model.size());
  const VertexSet u = model_union(model);
  if (static_cast<int>(u.size()) == n) return base_clique(r);

  const std::vector<VertexSet> a = attachments(g, model, u);
  for (int i = 0; i < r; ++i)
    if (a[static_cast<std::size_t>(i)].empty()) return drop_root(f, model, i, recurse);

  const VertexSet rest = complement(n, u);
  std::vector<VertexSet> comps = components(g, rest);
  if (comps.size() > 1) return split_components(f, model, comps, recurse);

  VertexSet y;
  std::vector<int> cert;
  if (r <= s - 1) {
    if (auto x = helly_bag(g, u, a, f.view)) {
      y = set_difference(f.view.bags[static_cast<std::size_t>(*x)], u);
      cert = {*x};
    } else {
      SplitEdge se = find_split_edge(g, u, a, f.view);
      VertexSet cand = set_difference(
          set_intersection(f.view.bags[static_cast<std::size_t>(se.x)], f.view.bags[static_cast<std::size_t>(se.y)]),
          u);
      VertexSet sep = minimal_separator_within(g, cand, se.f1, se.f2, u);
      PSTRUCT_ASSERT(!sep.empty(), "G - U is connected, so the separator is non-empty");
      VertexSet v1 = side_of(g, u, sep, se.f1.front());
      VertexSet v2 = set_difference(set_difference(rest, sep), v1);
      PSTRUCT_ASSERT(is_subset(se.f2, v2), "separator leaves both sides together");

      Assembler as(r);
      const int si = as.add_part(f.view.expand(sep), {se.x});
      std::vector<int> root_map = first_indices(r);
      root_map.push_back(si);
      int link[2];
      const VertexSet sides[2] = {v1, v2};
      for (int j = 0; j < 2; ++j) {
        Reindexed c = frame_contract(f, set_union(sep, sides[j]));
        Model grown = map_model(model, c.map);
        grown.push_back({c.frame.g.num_vertices() - 1});
        SubResult child = recurse(c.frame, grown);
        int off = as.absorb(child, root_map);
        link[j] = Assembler::bag_with(child, off, first_indices(r + 1));
      }
      as.add_edge(link[0], link[1]);
      return std::move(as).finish();
    }
  } else {
    HitOutcome hit = implicit_tree_hit(g, u, a, f.view, t);
    if (auto* conn = std::get_if<Connectors>(&hit)) throw_grown_witness(f, model, u, conn->trees, MinorWitness::Flavor::kJ);
    auto& blk = std::get<Blocker>(hit);
    y = std::move(blk.y);
    cert = std::move(blk.bag_ids);
  }
  y = minimize_blocker(g, u, a, y);
  return final_stage(f, model, u, a, y, std::move(cert), recurse);
}

}  // namespace

EngineOutcome partition_rooted_main(const Graph& g, const TDView& view, const Model& model, int s, int t,
                                    const EngineOptions& options) {
  require(s >= 2 && t >= 2, ErrorKind::kBadParams, "the decomposition engine needs s, t >= 2");
  require(static_cast<int>(model.size()) <= s, ErrorKind::kBadParams, "model has more than s branch sets");
  require(view.has_decomposition(), ErrorKind::kInvalidInput, "the decomposition engine needs a decomposition");
  detail::RunSpec spec;
  spec.t = t;
  spec.reported_m = static_cast<double>(t - 1) * (view.base->width() + 1);
  detail::Step step = [s, t](const detail::Frame& f, const Model& m, const detail::Recurse& rec) {
    return main_step(f, m, rec, s, t);
  };
  return detail::run_engine(g, view, model, step, options, spec);
}

}  // namespace pstruct
