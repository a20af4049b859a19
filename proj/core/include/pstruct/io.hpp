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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pstruct/decomp.hpp"
#include "pstruct/graph.hpp"
#include "pstruct/partition.hpp"
#include "pstruct/planar.hpp"
#include "pstruct/verify.hpp"

// File formats. Parsers throw Error(kInvalidInput) with a line number.
//
//   .gr    c comments, "p tw <n> <m>", then m lines "u v" (1-based)
//   .td    "s td <bags> <max bag> <n>", "b <id> v..." (1-based), tree edges "x y"
//   JSON   graph {"n", "edges", "labels"}, rotation {"rot", "outer_face"},
//          layering {"layers"}, result, witness and verdict documents

namespace pstruct {

struct GrParse {
  Graph graph;
  std::size_t dropped = 0;  // self-loops and duplicate edges ignored
};

GrParse parse_gr(std::string_view text);
std::string write_gr(const Graph& g);

/// `n` is the vertex count of the graph the decomposition is for.
TreeDecomposition parse_td(std::string_view text, int n);
std::string write_td(const TreeDecomposition& td, int n);

Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);

/// Graphviz; vertices show labels when the graph has them.
std::string to_dot(const Graph& g, std::string_view name = "G");

RotationSystem rotation_from_json(std::string_view text);
std::string rotation_to_json(const RotationSystem& rot);

Layering layering_from_json(std::string_view text);
std::string layering_to_json(const Layering& layering);

/// Everything `verify` needs to re-check a decomposition.
struct ResultDoc {
  std::string mode;
  std::string target;
  int s = 0;
  int t = 0;
  PartitionResult result;
  std::optional<double> m_bound;              // part-size bound to enforce
  std::optional<TreeDecomposition> td;        // decomposition the certs cite
  std::optional<Layering> layering;
  std::optional<ProductEmbedding> embedding;
};

std::string result_to_json(const ResultDoc& doc);
ResultDoc result_from_json(std::string_view text);

/// Sets are written as 0-based ids plus their labels.
std::string witness_to_json(const Graph& g, const MinorWitness& w);
MinorWitness witness_from_json(std::string_view text);
/// True when `text` is a witness document rather than a result.
bool is_witness_json(std::string_view text);

std::string verdict_to_json(const Verdict& v);

/// Reads a graph by extension: .json as JSON, anything else as .gr.
Graph load_graph(const std::string& path, std::size_t* dropped = nullptr);

std::string read_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace pstruct
