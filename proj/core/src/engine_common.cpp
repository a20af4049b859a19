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

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "engine_internal.hpp"
#include "pstruct/error.hpp"
#include "pstruct/hitting.hpp"

namespace pstruct {

std::string_view to_string(MinorWitness::Flavor flavor) {
  switch (flavor) {
    case MinorWitness::Flavor::kJ: return "J";
    case MinorWitness::Flavor::kKst: return "Kst";
    case MinorWitness::Flavor::kKt: return "Kt";
  }
  return "?";
}

Graph quotient_graph(const Graph& g, const std::vector<VertexSet>& parts) {
  const int n = g.num_vertices();
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (Vertex v : parts[p]) {
      require(v >= 0 && v < n && part_of[static_cast<std::size_t>(v)] < 0, ErrorKind::kInvalidInput,
              "parts do not partition the vertex set");
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = part_of[static_cast<std::size_t>(u)], b = part_of[static_cast<std::size_t>(v)];
    require(a >= 0 && b >= 0, ErrorKind::kInvalidInput, "parts do not cover the vertex set");
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(static_cast<int>(parts.size()), edges);
}

ProductEmbedding embed_partition(int n, const std::vector<VertexSet>& parts, const Layering* layering, int m) {
  ProductEmbedding emb;
  emb.image.resize(static_cast<std::size_t>(n));
  emb.m = m;
  emb.layered = layering != nullptr;
  std::vector<int> layer;
  if (layering) layer = layer_index(n, *layering);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::map<int, int> used;  // layer -> slots handed out
    for (Vertex v : parts[p]) {
      auto& img = emb.image[static_cast<std::size_t>(v)];
      img.part = static_cast<int>(p);
      img.layer = layering ? layer[static_cast<std::size_t>(v)] : -1;
      img.slot = ++used[img.layer];
    }
  }
  return emb;
}

VertexSet minimize_blocker(const Graph& g, const VertexSet& u, const std::vector<VertexSet>& targets,
                           const VertexSet& y) {
  VertexSet cur = y;
  for (Vertex v : y) {
    VertexSet trial = set_difference(cur, {v});
    if (blocks(g, u, targets, trial)) cur = std::move(trial);
  }
  return cur;
}

namespace {

double best_over_x(int n, const std::function<double(double)>& cost, double* arg) {
  double best = cost(1);
  *arg = 1;
  for (int x = 2; x <= std::max(1, n); ++x) {
    double c = cost(x);
    if (c < best) {
      best = c;
      *arg = x;
    }
  }
  return best;
}

}  // namespace

SqrtBound sqrt_width_bound(int s, int t, int n) {
  require(s >= 1 && t >= 1, ErrorKind::kBadParams, "s and t must be positive");
  SqrtBound out;
  if (s <= 2) {
    out.m = std::max(t - 1, 1);
    return out;
  }
  // Growth step: the tree itself and the blocker for every k < s must fit.
  double grow = best_over_x(
      n,
      [&](double x) {
        double c = x;
        for (int k = 2; k <= s - 1; ++k) c = std::max(c, find_tree_blocker_bound(n, k, x));
        return c;
      },
      &out.x_grow);
  out.m = grow;
  if (t >= 2) {
    double fin = best_over_x(
        n, [&](double x) { return find_trees_blocker_bound(n, s, x, t); }, &out.x_final);
    out.m = std::max(out.m, fin);
  }
  out.m = std::max(out.m, 1.0);
  return out;
}

double sqrt_reference_m(int s, int t, int n) {
  if (s <= 2) return std::max(t - 1, 1);
  if (t == 1) return std::sqrt(static_cast<double>(s - 2) * n);
  return 2 * std::sqrt(static_cast<double>(s - 1) * (t - 1) * n);
}

namespace detail {

namespace {

Model normalized(const Model& model) {
  Model out;
  out.reserve(model.size());
  for (const auto& part : model) out.push_back(make_set(part));
  return out;
}

}  // namespace

Reindexed frame_keep(const Frame& f, const VertexSet& keep) {
  InducedSubgraph sub = induced_subgraph(f.g, keep);
  return {{std::move(sub.graph), view_keep(f.view, keep)}, std::move(sub.to_local)};
}

Reindexed frame_contract(const Frame& f, const VertexSet& z) {
  TDView view = view_contract(f.view, f.g, z);
  Contraction c = contract_set(f.g, z);
  return {{std::move(c.graph), std::move(view)}, std::move(c.vertex_map)};
}

Model map_model(const Model& model, const std::vector<Vertex>& map) {
  Model out;
  out.reserve(model.size());
  for (const auto& part : model) {
    VertexSet mapped;
    for (Vertex v : part) {
      Vertex w = map[static_cast<std::size_t>(v)];
      PSTRUCT_ASSERT(w >= 0, "model vertex dropped by a re-indexing");
      mapped.push_back(w);
    }
    out.push_back(make_set(std::move(mapped)));
  }
  return out;
}

VertexSet model_union(const Model& model) {
  VertexSet u;
  for (const auto& part : model) u.insert(u.end(), part.begin(), part.end());
  return make_set(std::move(u));
}

std::vector<VertexSet> attachments(const Graph& g, const Model& model, const VertexSet& u) {
  std::vector<char> in_u = mask_of(g.num_vertices(), u);
  std::vector<VertexSet> a;
  a.reserve(model.size());
  for (const auto& part : model) {
    VertexSet ai;
    for (Vertex v : part)
      for (Vertex w : g.neighbors(v))
        if (!in_u[static_cast<std::size_t>(w)]) ai.push_back(w);
    a.push_back(make_set(std::move(ai)));
  }
  return a;
}

VertexSet first_indices(int k) { return all_vertices(k); }

int Assembler::add_part(VertexSet part, std::vector<int> cert) {
  extras_.push_back(std::move(part));
  certs_.push_back(std::move(cert));
  return roots_ + static_cast<int>(extras_.size()) - 1;
}

int Assembler::add_node(VertexSet bag) {
  td_.bags.push_back(make_set(std::move(bag)));
  return td_.num_nodes() - 1;
}

int Assembler::absorb(const SubResult& child, std::span<const int> root_map) {
  PSTRUCT_ASSERT(static_cast<int>(root_map.size()) == child.num_roots, "root map size mismatch");
  std::vector<int> index(root_map.begin(), root_map.end());
  for (std::size_t e = 0; e < child.extras.size(); ++e)
    index.push_back(add_part(child.extras[e], e < child.certs.size() ? child.certs[e] : std::vector<int>{}));
  const int offset = td_.num_nodes();
  for (const auto& bag : child.td.bags) {
    VertexSet mapped;
    for (int p : bag)
      if (index[static_cast<std::size_t>(p)] >= 0) mapped.push_back(index[static_cast<std::size_t>(p)]);
    td_.bags.push_back(make_set(std::move(mapped)));
  }
  for (auto [a, b] : child.td.edges) td_.edges.emplace_back(a + offset, b + offset);
  return offset;
}

int Assembler::bag_with(const SubResult& child, int offset, const VertexSet& members) {
  for (int x = 0; x < child.td.num_nodes(); ++x)
    if (is_subset(members, child.td.bags[static_cast<std::size_t>(x)])) return x + offset;
  PSTRUCT_ASSERT(false, "sub-result has no bag holding its roots");
  return -1;
}

SubResult Assembler::finish() && {
  return {roots_, std::move(extras_), std::move(certs_), std::move(td_)};
}

void throw_witness(const Frame& f, const Model& model, std::vector<VertexSet> b_sets, MinorWitness::Flavor flavor) {
  MinorWitness w;
  w.flavor = flavor;
  for (const auto& part : model) w.a_sets.push_back(f.view.expand(part));
  for (auto& b : b_sets) w.b_sets.push_back(f.view.expand(b));
  throw WitnessFound{std::move(w)};
}

void throw_grown_witness(const Frame& f, const Model& model, const VertexSet& u, const std::vector<VertexSet>& seeds,
                         MinorWitness::Flavor flavor) {
  InducedSubgraph rest = induced_subgraph(f.g, complement(f.g.num_vertices(), u));
  std::vector<VertexSet> local;
  for (const auto& seed : seeds) {
    VertexSet l;
    for (Vertex v : seed) l.push_back(rest.to_local[static_cast<std::size_t>(v)]);
    local.push_back(make_set(std::move(l)));
  }
  std::vector<VertexSet> classes = grow_connected_partition(rest.graph, local);
  std::vector<VertexSet> b_sets;
  for (const auto& q : classes) {
    VertexSet b;
    for (Vertex v : q) b.push_back(rest.to_global[static_cast<std::size_t>(v)]);
    b_sets.push_back(make_set(std::move(b)));
  }
  throw_witness(f, model, std::move(b_sets), flavor);
}

SubResult base_clique(int r) {
  SubResult out;
  out.num_roots = r;
  out.td.bags.push_back(first_indices(r));
  return out;
}

SubResult drop_root(const Frame& f, const Model& model, int i, const Recurse& recurse) {
  const int r = static_cast<int>(model.size());
  Reindexed sub = frame_keep(f, complement(f.g.num_vertices(), model[static_cast<std::size_t>(i)]));
  Model rest;
  for (int k = 0; k < r; ++k)
    if (k != i) rest.push_back(model[static_cast<std::size_t>(k)]);
  SubResult child = recurse(sub.frame, map_model(rest, sub.map));

  Assembler as(r);
  std::vector<int> root_map;
  for (int k = 0; k < r - 1; ++k) root_map.push_back(k < i ? k : k + 1);
  int off = as.absorb(child, root_map);
  int leaf = as.add_node(first_indices(r));
  as.add_edge(Assembler::bag_with(child, off, first_indices(r - 1)), leaf);
  return std::move(as).finish();
}

SubResult split_components(const Frame& f, const Model& model, const std::vector<VertexSet>& comps,
                           const Recurse& recurse) {
  const int r = static_cast<int>(model.size());
  const VertexSet u = model_union(model);
  VertexSet rest;
  for (std::size_t c = 1; c < comps.size(); ++c) rest.insert(rest.end(), comps[c].begin(), comps[c].end());
  std::vector<int> identity(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) identity[static_cast<std::size_t>(k)] = k;

  Assembler as(r);
  int link[2];
  const VertexSet sides[2] = {comps.front(), make_set(std::move(rest))};
  for (int side = 0; side < 2; ++side) {
    Reindexed sub = frame_keep(f, set_union(u, sides[side]));
    SubResult child = recurse(sub.frame, map_model(model, sub.map));
    int off = as.absorb(child, identity);
    link[side] = Assembler::bag_with(child, off, first_indices(r));
  }
  as.add_edge(link[0], link[1]);
  return std::move(as).finish();
}

VertexSet contraction_set(const Frame& f, const Model& model, const VertexSet& u, const VertexSet& y,
                          const VertexSet& comp, const VertexSet& target, int i) {
  const int n = f.g.num_vertices();
  std::vector<char> in_comp = mask_of(n, comp);
  std::vector<char> is_target = mask_of(n, target);
  std::vector<char> base(static_cast<std::size_t>(n), 1);
  for (Vertex v : u) base[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : y) base[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : comp) base[static_cast<std::size_t>(v)] = 0;

  VertexSet z = model[static_cast<std::size_t>(i)];
  bool any = false;
  for (Vertex w : y) {
    bool touches = false;
    for (Vertex x : f.g.neighbors(w)) touches = touches || in_comp[static_cast<std::size_t>(x)];
    if (!touches) continue;
    any = true;
    base[static_cast<std::size_t>(w)] = 1;
    std::vector<Vertex> path = shortest_path_to_set(f.g, w, is_target, base);
    base[static_cast<std::size_t>(w)] = 0;
    PSTRUCT_ASSERT(!path.empty(), "no path from a blocker vertex to the missed attachment set");
    z.insert(z.end(), path.begin(), path.end());
  }
  PSTRUCT_ASSERT(any, "component has no neighbour in the blocker");
  return make_set(std::move(z));
}

SubResult solve_component(const Frame& f, const Model& model, const VertexSet& u, const VertexSet& comp,
                          const VertexSet& z, int i, const Recurse& recurse) {
  Reindexed kept = frame_keep(f, set_union(set_union(comp, z), u));
  Model km = map_model(model, kept.map);
  VertexSet kz;
  for (Vertex v : z) kz.push_back(kept.map[static_cast<std::size_t>(v)]);
  Reindexed con = frame_contract(kept.frame, make_set(std::move(kz)));
  Model child_model;
  for (std::size_t k = 0; k < km.size(); ++k) {
    if (static_cast<int>(k) == i) child_model.push_back({con.frame.g.num_vertices() - 1});
    else child_model.push_back(map_model({km[k]}, con.map).front());
  }
  return recurse(con.frame, child_model);
}

SubResult final_stage(const Frame& f, const Model& model, const VertexSet& u, const std::vector<VertexSet>& a,
                      const VertexSet& y, std::vector<int> cert, const Recurse& recurse) {
  const int r = static_cast<int>(model.size());
  Assembler as(r);
  const int yi = as.add_part(f.view.expand(y), std::move(cert));
  VertexSet top = first_indices(r);
  top.push_back(yi);

  std::vector<VertexSet> comps = components(f.g, set_difference(complement(f.g.num_vertices(), u), y));
  if (comps.empty()) {
    as.add_node(top);
    return std::move(as).finish();
  }
  int prev = -1;
  for (const auto& comp : comps) {
    int miss = -1;
    for (int k = 0; k < r && miss < 0; ++k)
      if (!intersects(a[static_cast<std::size_t>(k)], comp)) miss = k;
    PSTRUCT_ASSERT(miss >= 0, "a component meets every attachment set");
    VertexSet z = contraction_set(f, model, u, y, comp, a[static_cast<std::size_t>(miss)], miss);
    SubResult child = solve_component(f, model, u, comp, z, miss, recurse);
    std::vector<int> root_map;
    for (int k = 0; k < r; ++k) root_map.push_back(k == miss ? yi : k);
    int off = as.absorb(child, root_map);
    int leaf = as.add_node(top);
    as.add_edge(Assembler::bag_with(child, off, first_indices(r)), leaf);
    if (prev >= 0) as.add_edge(prev, leaf);
    prev = leaf;
  }
  return std::move(as).finish();
}

void require_model(const Graph& g, const Model& model) {
  const int n = g.num_vertices();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& part = model[i];
    require(!part.empty(), ErrorKind::kInvalidInput, "model branch set " + std::to_string(i) + " is empty");
    for (Vertex v : part) {
      require(v >= 0 && v < n, ErrorKind::kInvalidInput, "model vertex out of range");
      require(!used[static_cast<std::size_t>(v)], ErrorKind::kInvalidInput, "model branch sets overlap");
      used[static_cast<std::size_t>(v)] = 1;
    }
    require(is_connected(g, part), ErrorKind::kInvalidInput,
            "model branch set " + std::to_string(i) + " is not connected");
  }
  for (std::size_t i = 0; i < model.size(); ++i) {
    std::vector<char> in_i = mask_of(n, model[i]);
    for (std::size_t j = i + 1; j < model.size(); ++j) {
      bool edge = false;
      for (Vertex v : model[j])
        for (Vertex w : g.neighbors(v)) edge = edge || in_i[static_cast<std::size_t>(w)];
      require(edge, ErrorKind::kInvalidInput,
              "model branch sets " + std::to_string(i) + " and " + std::to_string(j) + " are not adjacent");
    }
  }
}

namespace {

// Wraps a step with the checks every recursive call must satisfy.
class Recursion {
 public:
  Recursion(const Step& step, const EngineOptions& options) : step_(step), options_(options) {}

  SubResult operator()(const Frame& f, const Model& model) {
    const int n = f.g.num_vertices(), r = static_cast<int>(model.size());
    if (!stack_.empty()) {
      auto [pn, pr] = stack_.back();
      PSTRUCT_ASSERT(n < pn || (n == pn && r > pr), "recursion does not make progress");
    }
    if (options_.check_views && f.view.has_decomposition()) {
      TdReport rep = validate_td(f.g, view_as_td(f.view));
      PSTRUCT_ASSERT(rep.ok, "intermediate view is not a decomposition: " + rep.axiom + " " + rep.detail);
      PSTRUCT_ASSERT(lifting_holds(f.view), "intermediate view breaks lifting");
    }
    for (const auto& part : model)
      for (Vertex v : part) PSTRUCT_ASSERT(v >= 0 && v < n, "model vertex out of range");
    for (Vertex v = 0; v < n; ++v) {
      if (!f.view.placeholder[static_cast<std::size_t>(v)]) continue;
      bool rooted = std::any_of(model.begin(), model.end(), [v](const VertexSet& p) { return set_contains(p, v); });
      PSTRUCT_ASSERT(rooted, "placeholder outside the model");
    }
    stack_.emplace_back(n, r);
    Recurse self = [this](const Frame& g, const Model& m) { return (*this)(g, m); };
    SubResult out = step_(f, model, self);
    stack_.pop_back();
    PSTRUCT_ASSERT(out.num_roots == r, "sub-result root count mismatch");
    if (options_.observer) options_.observer(r, out.td);
    return out;
  }

 private:
  const Step& step_;
  const EngineOptions& options_;
  std::vector<std::pair<int, int>> stack_;
};

std::vector<int> greedy_cover(const TDView& view, const VertexSet& part) {
  VertexSet left = part;
  std::vector<int> chosen;
  while (!left.empty()) {
    int best = -1;
    std::size_t gain = 0;
    for (std::size_t x = 0; x < view.bags.size(); ++x) {
      std::size_t c = set_intersection(left, view.bags[x]).size();
      if (c > gain) {
        gain = c;
        best = static_cast<int>(x);
      }
    }
    require(best >= 0, ErrorKind::kInvalidInput, "decomposition misses a model vertex");
    chosen.push_back(best);
    left = set_difference(left, view.bags[static_cast<std::size_t>(best)]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

EngineOutcome run_engine(const Graph& g, const TDView& view, const Model& given, const Step& step,
                         const EngineOptions& options, const RunSpec& spec) {
  const int n = g.num_vertices();
  Model model = normalized(given);
  require_model(g, model);
  require(view.num_vertices() == n, ErrorKind::kInvalidInput, "view and graph disagree on vertex count");
  const int r = static_cast<int>(model.size());

  PartitionResult result;
  result.simple = spec.simple;
  result.reported_m = spec.reported_m;
  if (n == 0) {
    result.quotient = Graph(0);
    if (spec.with_certs) result.cover_certs.emplace();
    return result;
  }
  require(r >= 1, ErrorKind::kInvalidInput, "model must have at least one branch set");

  Frame top;
  top.g = Graph::from_edges(n, g.edges());
  top.view = view;
  for (Vertex v = 0; v < n; ++v) {
    require(!view.placeholder[static_cast<std::size_t>(v)], ErrorKind::kInvalidInput,
            "input view must not contain contracted vertices");
    top.view.origin[static_cast<std::size_t>(v)] = {v};
  }
  std::vector<std::vector<int>> certs;
  if (spec.with_certs) {
    TdReport rep = validate_td(g, view_as_td(view));
    require(rep.ok, ErrorKind::kInvalidInput, "decomposition is invalid (" + rep.axiom + "): " + rep.detail);
    for (const auto& part : model) {
      certs.push_back(greedy_cover(view, part));
      require(static_cast<int>(certs.back().size()) <= spec.t - 1, ErrorKind::kInvalidInput,
              "a model branch set needs more than t-1 bags");
    }
  }

  Recursion recursion(step, options);
  SubResult sub;
  try {
    sub = recursion(top, model);
  } catch (WitnessFound& found) {
    return std::move(found.witness);
  }

  result.parts = model;
  result.parts.insert(result.parts.end(), sub.extras.begin(), sub.extras.end());
  for (int k = 0; k < r; ++k) result.roots.push_back(k);
  result.quotient = quotient_graph(g, result.parts);
  if (spec.with_certs) {
    certs.insert(certs.end(), sub.certs.begin(), sub.certs.end());
    result.cover_certs = std::move(certs);
  }
  result.h_cert = std::move(sub.td);
  for (auto& e : result.h_cert.edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  return result;
}

}  // namespace detail

}  // namespace pstruct
