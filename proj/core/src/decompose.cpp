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

#include "pstruct/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "pstruct/error.hpp"

namespace pstruct {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kTw: return "tw";
    case Mode::kSqrt: return "sqrt";
    case Mode::kLtw: return "ltw";
    case Mode::kStw: return "stw";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "tw") return Mode::kTw;
  if (name == "sqrt") return Mode::kSqrt;
  if (name == "ltw") return Mode::kLtw;
  if (name == "stw") return Mode::kStw;
  fail(ErrorKind::kBadParams, "unknown mode '" + std::string(name) + "'");
}

std::string to_string(const Target& target) {
  switch (target.kind) {
    case Target::Kind::kKt: return "Kt(" + std::to_string(target.a) + ")";
    case Target::Kind::kKst: return "Kst(" + std::to_string(target.a) + "," + std::to_string(target.b) + ")";
    case Target::Kind::kJst: return "Jst(" + std::to_string(target.a) + "," + std::to_string(target.b) + ")";
    case Target::Kind::kGenus: return "genus(" + std::to_string(target.a) + ")";
  }
  return "?";
}

Params target_params(Mode mode, const Target& target, bool clique_variant) {
  Params p;
  switch (target.kind) {
    case Target::Kind::kKt:
      require(mode != Mode::kStw, ErrorKind::kInvalidInput, "stw mode needs a Kst or genus target");
      if (mode == Mode::kSqrt && clique_variant) p = {target.a - 1, 1};
      else p = {target.a - 2, 2};
      break;
    case Target::Kind::kKst: p = {target.a, target.b}; break;
    case Target::Kind::kJst:
      require(mode != Mode::kStw, ErrorKind::kInvalidInput, "stw mode needs a Kst or genus target");
      p = {target.a, target.b};
      break;
    case Target::Kind::kGenus:
      require(target.a >= 0, ErrorKind::kBadParams, "genus must be non-negative");
      p = {3, 2 * target.a + 3};
      break;
  }
  const int lo = mode == Mode::kSqrt ? 1 : 2;
  require(p.s >= lo && p.t >= lo, ErrorKind::kInvalidInput,
          to_string(target) + " gives (s,t)=(" + std::to_string(p.s) + "," + std::to_string(p.t) +
              "), outside the range of mode " + std::string(to_string(mode)));
  return p;
}

void require_layering(const Graph& g, const Layering& layering) {
  const int n = g.num_vertices();
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < layering.size(); ++i)
    for (Vertex v : layering[i]) {
      require(v >= 0 && v < n, ErrorKind::kInvalidInput, "layering mentions vertex " + std::to_string(v));
      require(idx[static_cast<std::size_t>(v)] < 0, ErrorKind::kInvalidInput,
              "vertex " + std::to_string(v) + " is in two layers");
      idx[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  for (Vertex v = 0; v < n; ++v)
    require(idx[static_cast<std::size_t>(v)] >= 0, ErrorKind::kInvalidInput,
            "vertex " + std::to_string(v) + " is in no layer");
  for (auto [u, v] : g.edges())
    require(std::abs(idx[static_cast<std::size_t>(u)] - idx[static_cast<std::size_t>(v)]) <= 1,
            ErrorKind::kInvalidInput,
            "edge " + std::to_string(u) + "-" + std::to_string(v) + " skips a layer");
}

namespace {

VertexSet to_global(const InducedSubgraph& sub, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out.push_back(sub.to_global[static_cast<std::size_t>(v)]);
  return make_set(std::move(out));
}

}  // namespace

Decomposition decompose(const Graph& g, const DecomposeOptions& options) {
  const int n = g.num_vertices();
  const Params p = target_params(options.mode, options.target, options.clique_variant);
  require(!options.exact_hitting, ErrorKind::kInvalidInput, "the exact hitting method is not available");

  Decomposition out;
  out.report.n = n;
  out.report.m = g.num_edges();
  out.report.params = p;

  if (options.mode == Mode::kLtw) {
    if (options.td && options.layering) {
      out.td = *options.td;
      out.layering = *options.layering;
    } else if (options.rot) {
      LayeredTD lt = planar_layered_td(g, *options.rot);
      out.td = std::move(lt.td);
      out.layering = std::move(lt.layering);
    } else {
      fail(ErrorKind::kInvalidInput, "ltw mode needs a decomposition with a layering, or a rotation system");
    }
  } else if (options.mode != Mode::kSqrt) {
    out.td = options.td ? *options.td : heuristic_td(g);
    if (options.layering) out.layering = *options.layering;
  } else if (options.layering) {
    out.layering = *options.layering;
  }
  if (out.td) {
    TdReport rep = validate_td(g, *out.td);
    require(rep.ok, ErrorKind::kInvalidInput, "decomposition is invalid (" + rep.axiom + "): " + rep.detail);
    out.report.input_width = out.td->width();
  }
  if (out.layering) require_layering(g, *out.layering);
  if (out.td && out.layering) out.report.ltw = layered_width(*out.td, *out.layering, n);

  std::shared_ptr<const TreeDecomposition> base;
  TDView whole;
  if (out.td) {
    base = std::make_shared<const TreeDecomposition>(*out.td);
    whole = make_view(base, n);
  }

  PartitionResult merged;
  merged.simple = options.mode == Mode::kStw;
  if (options.mode != Mode::kSqrt) merged.cover_certs.emplace();
  double reported_m = 0;
  int prev_node = -1;
  for (const auto& comp : components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    const Model model{{0}};
    EngineOutcome res;
    switch (options.mode) {
      case Mode::kTw:
      case Mode::kLtw:
        res = partition_rooted_main(sub.graph, view_keep(whole, comp), model, p.s, p.t, options.engine);
        break;
      case Mode::kStw:
        res = partition_rooted_stw(sub.graph, view_keep(whole, comp), model, p.s, p.t, options.engine);
        break;
      case Mode::kSqrt: {
        SqrtBound b = sqrt_width_bound(p.s, p.t, sub.graph.num_vertices());
        res = partition_rooted_sqrt(sub.graph, model, p.s, p.t, b.m, options.engine);
        out.report.reference_m =
            std::max(out.report.reference_m, sqrt_reference_m(p.s, p.t, sub.graph.num_vertices()));
        break;
      }
    }
    if (auto* w = std::get_if<MinorWitness>(&res)) {
      MinorWitness global;
      global.flavor = w->flavor;
      for (const auto& a : w->a_sets) global.a_sets.push_back(to_global(sub, a));
      for (const auto& b : w->b_sets) global.b_sets.push_back(to_global(sub, b));
      out.outcome = std::move(global);
      return out;
    }
    auto& r = std::get<PartitionResult>(res);
    const int part_offset = static_cast<int>(merged.parts.size());
    for (const auto& part : r.parts) merged.parts.push_back(to_global(sub, part));
    for (int root : r.roots) merged.roots.push_back(root + part_offset);
    if (merged.cover_certs && r.cover_certs)
      merged.cover_certs->insert(merged.cover_certs->end(), r.cover_certs->begin(), r.cover_certs->end());
    const int node_offset = merged.h_cert.num_nodes();
    for (const auto& bag : r.h_cert.bags) {
      VertexSet shifted;
      for (int x : bag) shifted.push_back(x + part_offset);
      merged.h_cert.bags.push_back(std::move(shifted));
    }
    for (auto [a, b] : r.h_cert.edges) merged.h_cert.edges.emplace_back(a + node_offset, b + node_offset);
    if (prev_node >= 0 && r.h_cert.num_nodes() > 0) merged.h_cert.edges.emplace_back(prev_node, node_offset);
    if (r.h_cert.num_nodes() > 0) prev_node = node_offset;
    merged.simple = merged.simple && r.simple;
    reported_m = std::max(reported_m, r.reported_m);
  }
  if (options.mode == Mode::kLtw && out.report.ltw >= 0) reported_m = static_cast<double>(p.t - 1) * out.report.ltw;
  merged.reported_m = reported_m;
  merged.quotient = quotient_graph(g, merged.parts);

  out.report.reported_m = reported_m;
  out.report.h_width = merged.h_cert.width();
  for (const auto& part : merged.parts) out.report.max_part = std::max(out.report.max_part, static_cast<int>(part.size()));
  out.report.tw_bound = static_cast<long long>(out.report.h_width + 1) * out.report.max_part - 1;
  if (out.layering) {
    std::vector<int> layer = layer_index(n, *out.layering);
    for (const auto& part : merged.parts) {
      std::map<int, int> count;
      for (Vertex v : part)
        out.report.max_part_layer = std::max(out.report.max_part_layer, ++count[layer[static_cast<std::size_t>(v)]]);
    }
    if (out.report.ltw >= 0) out.report.rtw_bound = static_cast<long long>(p.t - 1) * out.report.ltw - 1;
  }
  const int declared = std::max(1, static_cast<int>(std::floor(reported_m + 1e-9)));
  out.embedding = embed_partition(n, merged.parts, out.layering ? &*out.layering : nullptr, declared);
  out.outcome = std::move(merged);
  return out;
}

}  // namespace pstruct
