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

#include "pstruct/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pstruct/error.hpp"

namespace pstruct {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(int line, const std::string& what) {
  fail(ErrorKind::kInvalidInput, "line " + std::to_string(line) + ": " + what);
}

// Splits into whitespace tokens per line, skipping blanks and "c" comments.
struct Line {
  int number;
  std::vector<std::string> tok;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string w; ls >> w;) line.tok.push_back(w);
    if (line.tok.empty() || line.tok.front() == "c") continue;
    out.push_back(std::move(line));
  }
  return out;
}

long long number_of(const Line& line, std::size_t i) {
  if (i >= line.tok.size()) bad(line.number, "missing field");
  const std::string& w = line.tok[i];
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::exception&) {
    bad(line.number, "'" + w + "' is not a number");
  }
  if (used != w.size()) bad(line.number, "'" + w + "' is not a number");
  return v;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::kInvalidInput, std::string("JSON is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::kInvalidInput, std::string("JSON field '") + key + "': " + e.what());
  }
}

json td_json(const TreeDecomposition& td) { return {{"bags", td.bags}, {"edges", td.edges}}; }

TreeDecomposition td_of(const json& j) {
  TreeDecomposition td;
  td.bags = field<std::vector<VertexSet>>(j, "bags");
  td.edges = field<std::vector<std::pair<int, int>>>(j, "edges");
  return td;
}

json graph_json(const Graph& g) {
  json j{{"n", g.num_vertices()}, {"edges", g.edges()}};
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Graph graph_of(const json& j) {
  const int n = field<int>(j, "n");
  if (n < 0) fail(ErrorKind::kInvalidInput, "negative vertex count");
  auto edges = field<std::vector<Edge>>(j, "edges");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorKind::kInvalidInput, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is out of range");
  Graph g = Graph::from_edges(n, edges);
  if (j.contains("labels")) {
    auto labels = field<std::vector<std::string>>(j, "labels");
    if (static_cast<int>(labels.size()) != n) fail(ErrorKind::kInvalidInput, "label count differs from n");
    g.set_labels(std::move(labels));
  }
  return g;
}

MinorWitness::Flavor flavor_of(const std::string& name) {
  if (name == "J") return MinorWitness::Flavor::kJ;
  if (name == "Kst") return MinorWitness::Flavor::kKst;
  if (name == "Kt") return MinorWitness::Flavor::kKt;
  fail(ErrorKind::kInvalidInput, "unknown witness flavour '" + name + "'");
}

}  // namespace

GrParse parse_gr(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tok.front() != "p") fail(ErrorKind::kInvalidInput, "missing 'p tw' header");
  const Line& head = lines.front();
  if (head.tok.size() != 4 || head.tok[1] != "tw") bad(head.number, "header must be 'p tw <n> <m>'");
  const long long n = number_of(head, 2), m = number_of(head, 3);
  if (n < 0 || m < 0 || n > (1LL << 30)) bad(head.number, "bad header counts");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tok.size() != 2) bad(l.number, "edge lines hold two vertices");
    const long long u = number_of(l, 0), v = number_of(l, 1);
    if (u < 1 || v < 1 || u > n || v > n) bad(l.number, "vertex out of range 1.." + std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (static_cast<long long>(edges.size()) != m)
    fail(ErrorKind::kInvalidInput,
         "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  GrParse out;
  out.graph = Graph::from_edges(static_cast<int>(n), edges, &out.dropped);
  return out;
}

std::string write_gr(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_td(std::string_view text, int n) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tok.front() != "s") fail(ErrorKind::kInvalidInput, "missing 's td' header");
  const Line& head = lines.front();
  if (head.tok.size() != 5 || head.tok[1] != "td") bad(head.number, "header must be 's td <bags> <max bag> <n>'");
  const long long nb = number_of(head, 2), maxb = number_of(head, 3), nv = number_of(head, 4);
  if (nv != n) bad(head.number, "decomposition is for " + std::to_string(nv) + " vertices, graph has " + std::to_string(n));
  if (nb < 0 || nb > (1LL << 26)) bad(head.number, "bad bag count");
  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(nb));
  std::vector<char> seen(static_cast<std::size_t>(nb), 0);
  int biggest = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tok.front() == "b") {
      const long long id = number_of(l, 1);
      if (id < 1 || id > nb) bad(l.number, "bag id out of range");
      if (seen[static_cast<std::size_t>(id - 1)]) bad(l.number, "bag " + std::to_string(id) + " listed twice");
      seen[static_cast<std::size_t>(id - 1)] = 1;
      VertexSet bag;
      for (std::size_t k = 2; k < l.tok.size(); ++k) {
        const long long v = number_of(l, k);
        if (v < 1 || v > n) bad(l.number, "vertex out of range");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      biggest = std::max(biggest, static_cast<int>(bag.size()));
      td.bags[static_cast<std::size_t>(id - 1)] = make_set(std::move(bag));
    } else {
      if (l.tok.size() != 2) bad(l.number, "tree edge lines hold two bag ids");
      const long long a = number_of(l, 0), b = number_of(l, 1);
      if (a < 1 || b < 1 || a > nb || b > nb) bad(l.number, "bag id out of range");
      td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  for (long long i = 0; i < nb; ++i)
    if (!seen[static_cast<std::size_t>(i)]) fail(ErrorKind::kInvalidInput, "bag " + std::to_string(i + 1) + " is never listed");
  if (biggest > maxb) bad(head.number, "a bag is larger than the announced maximum");
  return td;
}

std::string write_td(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  out << "s td " << td.num_nodes() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (int x = 0; x < td.num_nodes(); ++x) {
    out << "b " << x + 1;
    for (Vertex v : td.bags[static_cast<std::size_t>(x)]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

Graph graph_from_json(std::string_view text) { return graph_of(parse_json(text)); }
std::string graph_to_json(const Graph& g) { return graph_json(g).dump() + "\n"; }

std::string to_dot(const Graph& g, std::string_view name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "graph " << quote(std::string(name)) << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=" << quote(g.label(v)) << "]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

RotationSystem rotation_from_json(std::string_view text) {
  const json j = parse_json(text);
  RotationSystem rot;
  rot.rot = field<std::vector<std::vector<Vertex>>>(j, "rot");
  if (j.contains("outer_face")) rot.outer_face = field<std::vector<Vertex>>(j, "outer_face");
  return rot;
}

std::string rotation_to_json(const RotationSystem& rot) {
  json j{{"rot", rot.rot}};
  if (!rot.outer_face.empty()) j["outer_face"] = rot.outer_face;
  return j.dump() + "\n";
}

Layering layering_from_json(std::string_view text) {
  return field<Layering>(parse_json(text), "layers");
}

std::string layering_to_json(const Layering& layering) { return json{{"layers", layering}}.dump() + "\n"; }

std::string result_to_json(const ResultDoc& doc) {
  const PartitionResult& r = doc.result;
  json j{{"mode", doc.mode},
         {"target", doc.target},
         {"s", doc.s},
         {"t", doc.t},
         {"parts", r.parts},
         {"quotient", graph_json(r.quotient)},
         {"roots", r.roots},
         {"h_cert", td_json(r.h_cert)},
         {"simple", r.simple},
         {"reported_m", r.reported_m}};
  if (r.cover_certs) j["cover_certs"] = *r.cover_certs;
  if (doc.m_bound) j["m_bound"] = *doc.m_bound;
  if (doc.td) j["td"] = td_json(*doc.td);
  if (doc.layering) j["layering"] = *doc.layering;
  if (doc.embedding) {
    json img = json::array();
    for (const auto& im : doc.embedding->image) img.push_back({im.part, im.layer, im.slot});
    j["embedding"] = {{"m", doc.embedding->m}, {"layered", doc.embedding->layered}, {"image", img}};
  }
  return j.dump(1) + "\n";
}

ResultDoc result_from_json(std::string_view text) {
  const json j = parse_json(text);
  ResultDoc doc;
  doc.mode = field<std::string>(j, "mode");
  doc.target = field<std::string>(j, "target");
  doc.s = field<int>(j, "s");
  doc.t = field<int>(j, "t");
  PartitionResult& r = doc.result;
  r.parts = field<std::vector<VertexSet>>(j, "parts");
  r.quotient = graph_of(field<json>(j, "quotient"));
  r.roots = field<std::vector<int>>(j, "roots");
  r.h_cert = td_of(field<json>(j, "h_cert"));
  r.simple = field<bool>(j, "simple");
  r.reported_m = field<double>(j, "reported_m");
  if (j.contains("cover_certs")) r.cover_certs = field<std::vector<std::vector<int>>>(j, "cover_certs");
  if (j.contains("m_bound")) doc.m_bound = field<double>(j, "m_bound");
  if (j.contains("td")) doc.td = td_of(field<json>(j, "td"));
  if (j.contains("layering")) doc.layering = field<Layering>(j, "layering");
  if (j.contains("embedding")) {
    const json e = field<json>(j, "embedding");
    ProductEmbedding emb;
    emb.m = field<int>(e, "m");
    emb.layered = field<bool>(e, "layered");
    for (const auto& im : field<std::vector<std::array<int, 3>>>(e, "image")) emb.image.push_back({im[0], im[1], im[2]});
    doc.embedding = std::move(emb);
  }
  return doc;
}

std::string witness_to_json(const Graph& g, const MinorWitness& w) {
  auto labelled = [&](const std::vector<VertexSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) {
      std::vector<std::string> names;
      for (Vertex v : s) names.push_back(g.label(v));
      out.push_back({{"vertices", s}, {"labels", names}});
    }
    return out;
  };
  json j{{"flavor", std::string(to_string(w.flavor))}, {"a_sets", labelled(w.a_sets)}, {"b_sets", labelled(w.b_sets)}};
  return j.dump(1) + "\n";
}

MinorWitness witness_from_json(std::string_view text) {
  const json j = parse_json(text);
  MinorWitness w;
  w.flavor = flavor_of(field<std::string>(j, "flavor"));
  for (const auto& s : field<json>(j, "a_sets")) w.a_sets.push_back(field<VertexSet>(s, "vertices"));
  for (const auto& s : field<json>(j, "b_sets")) w.b_sets.push_back(field<VertexSet>(s, "vertices"));
  return w;
}

bool is_witness_json(std::string_view text) {
  const json j = parse_json(text);
  return j.is_object() && j.contains("flavor");
}

std::string verdict_to_json(const Verdict& v) {
  json j{{"ok", v.ok}};
  j["violation"] = v.ok ? json(nullptr) : json(v.violation);
  return j.dump() + "\n";
}

Graph load_graph(const std::string& path, std::size_t* dropped) {
  const std::string text = read_file(path);
  if (std::filesystem::path(path).extension() == ".json") return graph_from_json(text);
  GrParse p = parse_gr(text);
  if (dropped) *dropped = p.dropped;
  return std::move(p.graph);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::kInvalidInput, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(ErrorKind::kInvalidInput, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fail(ErrorKind::kInvalidInput, "cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace pstruct
