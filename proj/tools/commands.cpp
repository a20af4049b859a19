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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pstruct/error.hpp"
#include "pstruct/generate.hpp"
#include "pstruct/io.hpp"
#include "pstruct/verify.hpp"

namespace pstruct::cli {

namespace fs = std::filesystem;

void RunReport::add(std::string key, double value) {
  std::ostringstream ss;
  ss.precision(12);
  ss << value;
  entries_.push_back({std::move(key), ss.str(), std::isfinite(value)});
}

void RunReport::append(const RunReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::string RunReport::text() const {
  std::string out;
  for (const auto& e : entries_) out += e.key + "=" + e.value + "\n";
  return out;
}

std::string RunReport::json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& e : entries_) j[e.key] = e.literal ? nlohmann::ordered_json::parse(e.value) : nlohmann::ordered_json(e.value);
  return j.dump() + "\n";
}

namespace {

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::kInternal ? kExitInternal : kExitInput; }

// Runs `body`, mapping exceptions to exit codes with a diagnostic.
template <typename F>
int guarded(std::ostream& err, const std::string& context, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << context << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << context << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

struct Outcome {
  int code = kExitOk;
  RunReport report;
  std::string diag;
};

RotationSystem load_rotation(const Graph& g, const std::string& path) {
  RotationSystem rot = rotation_from_json(read_file(path));
  validate_rotation(g, rot);
  return rot;
}

Outcome decompose_one(const DecomposeArgs& args, const std::string& input, const fs::path& out_dir) {
  Outcome o;
  std::ostringstream err;
  o.code = guarded(err, input, [&] {
    const auto start = std::chrono::steady_clock::now();
    std::size_t dropped = 0;
    const Graph g = load_graph(input, &dropped);
    DecomposeOptions opt;
    opt.mode = args.mode;
    opt.target = args.target;
    opt.clique_variant = args.clique_variant;
    opt.exact_hitting = args.exact_hitting;
    if (args.td) opt.td = parse_td(read_file(*args.td), g.num_vertices());
    if (args.layering) opt.layering = layering_from_json(read_file(*args.layering));
    if (args.rot) opt.rot = load_rotation(g, *args.rot);
    const Decomposition d = decompose(g, opt);
    const DecomposeReport& rep = d.report;

    RunReport& r = o.report;
    r.add("input", input);
    r.add("n", rep.n);
    r.add("m", static_cast<long long>(rep.m));
    if (dropped > 0) r.add("dropped_edges", static_cast<long long>(dropped));
    r.add("mode", std::string(to_string(args.mode)));
    r.add("target", to_string(args.target));
    r.add("s", rep.params.s);
    r.add("t", rep.params.t);

    Verdict verdict;
    int code = kExitOk;
    if (const auto* w = std::get_if<MinorWitness>(&d.outcome)) {
      const bool pinned = w->flavor != MinorWitness::Flavor::kKt;
      verdict = check_witness(g, *w, pinned ? rep.params.s : -1, pinned ? rep.params.t : -1);
      write_file_atomic((out_dir / "witness.json").string(), witness_to_json(g, *w));
      fs::remove(out_dir / "result.json");
      r.add("outcome", "witness");
      r.add("flavor", std::string(to_string(w->flavor)));
      code = verdict.ok ? kExitWitness : kExitViolation;
    } else {
      const auto& res = std::get<PartitionResult>(d.outcome);
      const bool layered_mode = args.mode == Mode::kLtw;
      PartitionCheck extra;
      // In ltw mode the bound holds per layer, so the embedding checks it.
      if (!layered_mode) extra.m_bound = res.reported_m;
      const TreeDecomposition* cited = args.mode == Mode::kSqrt ? nullptr : (d.td ? &*d.td : nullptr);
      verdict = check_partition_result(g, cited, res, rep.params.s, rep.params.t, extra);
      if (verdict.ok && d.embedding) verdict = check_product_embedding(g, res.quotient, *d.embedding, d.embedding->layered);
      if (verdict.ok && d.layering) verdict = check_layering(g, *d.layering);

      ResultDoc doc;
      doc.mode = std::string(to_string(args.mode));
      doc.target = to_string(args.target);
      doc.s = rep.params.s;
      doc.t = rep.params.t;
      doc.result = res;
      doc.m_bound = extra.m_bound;
      if (cited) doc.td = *cited;
      doc.layering = d.layering;
      doc.embedding = d.embedding;
      write_file_atomic((out_dir / "result.json").string(), result_to_json(doc));
      fs::remove(out_dir / "witness.json");
      if (d.td && !args.td) write_file_atomic((out_dir / "input.td").string(), write_td(*d.td, g.num_vertices()));
      if (args.emit_dot) write_file_atomic((out_dir / "quotient.dot").string(), to_dot(res.quotient, "H"));

      r.add("outcome", "partition");
      r.add("parts", static_cast<long long>(res.parts.size()));
      r.add("max_part", rep.max_part);
      if (d.layering) r.add("max_part_layer", rep.max_part_layer);
      r.add("h_width", rep.h_width);
      r.add("reported_m", rep.reported_m);
      if (args.mode == Mode::kSqrt) r.add("reference_m", rep.reference_m);
      if (rep.input_width >= 0) r.add("input_width", rep.input_width);
      if (rep.ltw >= 0) r.add("ltw", rep.ltw);
      r.add("tw_bound", rep.tw_bound);
      if (rep.rtw_bound >= 0) r.add("rtw_bound", rep.rtw_bound);
      r.add("simple", res.simple);
      code = verdict.ok ? kExitOk : kExitViolation;
    }
    if (args.emit_dot) write_file_atomic((out_dir / "graph.dot").string(), to_dot(g, "G"));
    r.add("verdict", verdict.ok ? std::string("ok") : verdict.violation);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.add("time_ms", std::round(ms * 1000) / 1000);
    if (!verdict.ok) err << input << ": checker violation: " << verdict.violation << "\n";
    return code;
  });
  o.diag = err.str();
  return o;
}

}  // namespace

int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  const std::size_t count = args.inputs.size();
  std::vector<Outcome> outcomes(count);
  auto dir_for = [&](std::size_t i) {
    fs::path dir(args.out_dir);
    if (count > 1) dir /= fs::path(args.inputs[i]).stem();
    return dir;
  };
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) outcomes[i] = decompose_one(args, args.inputs[i], dir_for(i));
  };
  const int jobs = std::clamp(args.jobs, 1, static_cast<int>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = kExitOk;
  for (const auto& o : outcomes) {
    out << (args.json ? o.report.json() : o.report.text());
    if (!args.json && count > 1) out << "\n";
    err << o.diag;
    code = std::max(code, o.code);
  }
  return code;
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, args.document, [&] {
    const Graph g = load_graph(args.graph);
    const std::string text = read_file(args.document);
    Verdict v;
    if (is_witness_json(text)) {
      v = check_witness(g, witness_from_json(text));
    } else {
      const ResultDoc doc = result_from_json(text);
      PartitionCheck extra;
      extra.m_bound = doc.m_bound;
      v = check_partition_result(g, doc.td ? &*doc.td : nullptr, doc.result, doc.s, doc.t, extra);
      if (v.ok && doc.layering) v = check_layering(g, *doc.layering);
      if (v.ok && doc.embedding) {
        if (doc.embedding->layered && !doc.layering) v = Verdict::fail("layered embedding without a layering");
        else v = check_product_embedding(g, doc.result.quotient, *doc.embedding, doc.embedding->layered);
        if (v.ok && doc.embedding->layered) {
          const std::vector<int> at = layer_index(g.num_vertices(), *doc.layering);
          for (Vertex x = 0; x < g.num_vertices() && v.ok; ++x)
            if (doc.embedding->image[static_cast<std::size_t>(x)].layer != at[static_cast<std::size_t>(x)])
              v = Verdict::fail("embedding puts vertex " + std::to_string(x) + " in the wrong layer");
        }
      }
    }
    if (args.json) {
      out << verdict_to_json(v);
    } else {
      out << "verdict=" << (v.ok ? "ok" : "violation") << "\n";
      if (!v.ok) out << "violation=" << v.violation << "\n";
    }
    return v.ok ? kExitOk : kExitViolation;
  });
}

int run_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, args.graph, [&] {
    std::size_t dropped = 0;
    const Graph g = load_graph(args.graph, &dropped);
    const int n = g.num_vertices();
    RunReport r;
    r.add("input", args.graph);
    r.add("n", n);
    r.add("m", static_cast<long long>(g.num_edges()));
    r.add("dropped_edges", static_cast<long long>(dropped));
    r.add("components", static_cast<long long>(components(g).size()));
    int max_degree = 0;
    for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    r.add("max_degree", max_degree);
    std::optional<TreeDecomposition> td;
    if (args.td) {
      td = parse_td(read_file(*args.td), n);
      const TdReport rep = validate_td(g, *td);
      r.add("td_valid", rep.ok);
      if (!rep.ok) r.add("td_violation", rep.axiom + ": " + rep.detail);
    } else {
      td = heuristic_td(g);
    }
    r.add("td_width", td->width());
    if (n <= 16) r.add("treewidth", exact_treewidth_small(g, 16).width);
    if (args.layering) {
      const Layering layering = layering_from_json(read_file(*args.layering));
      const Verdict lv = check_layering(g, layering);
      r.add("layering_valid", lv.ok);
      if (lv.ok) r.add("ltw", layered_width(*td, layering, n));
    }
    if (args.rot) {
      const RotationSystem rot = load_rotation(g, *args.rot);
      r.add("faces", static_cast<long long>(trace_faces(g, rot).size()));
    }
    out << (args.json ? r.json() : r.text());
    return kExitOk;
  });
}

int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, "generate " + args.kind, [&] {
    auto param = [&](std::size_t i) -> int {
      require(i < args.params.size(), ErrorKind::kBadParams, args.kind + " needs " + std::to_string(i + 1) + " parameters");
      const long long v = args.params[i];
      require(v >= 0 && v <= (1 << 24), ErrorKind::kBadParams, "parameter out of range");
      return static_cast<int>(v);
    };
    Generated gen;
    if (args.kind == "grid") gen = grid(param(0), param(1));
    else if (args.kind == "apollonian") gen = apollonian(param(0), args.seed);
    else if (args.kind == "wheel") gen = wheel(param(0));
    else if (args.kind == "ktree") gen.graph = ktree(param(0), param(1), args.seed);
    else if (args.kind == "complete") gen.graph = complete(param(0));
    else if (args.kind == "petersen") gen.graph = petersen();
    else fail(ErrorKind::kBadParams, "unknown generator '" + args.kind + "'");
    write_file_atomic(args.out + ".gr", write_gr(gen.graph));
    if (gen.rot) write_file_atomic(args.out + ".rot.json", rotation_to_json(*gen.rot));
    if (args.emit_dot) write_file_atomic(args.out + ".dot", to_dot(gen.graph, args.kind));
    out << "n=" << gen.graph.num_vertices() << "\nm=" << gen.graph.num_edges() << "\n";
    return kExitOk;
  });
}

}  // namespace pstruct::cli
