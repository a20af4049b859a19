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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pstruct/error.hpp"

namespace cli = pstruct::cli;

int main(int argc, char** argv) {
  CLI::App app{"Product-structure decompositions of minor-free graphs"};
  app.require_subcommand(1);

  cli::GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic graph (.gr, plus .rot.json when planar)");
  generate->add_option("kind", gen.kind, "grid | apollonian | ktree | complete | petersen | wheel")->required();
  generate->add_option("params", gen.params, "Numeric parameters of the family");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--out,-o", gen.out, "Output path prefix")->required();
  generate->add_flag("--emit-dot", gen.emit_dot, "Also write a DOT file");

  cli::DecomposeArgs dec;
  std::string mode = "tw";
  int kt = 0;
  std::vector<int> kst, jst;
  int genus = -1;
  auto* decompose = app.add_subcommand("decompose", "Partition graphs and re-verify the result");
  decompose->add_option("inputs", dec.inputs, "Graph files (.gr or .json)")->required();
  decompose->add_option("--mode", mode, "tw | sqrt | ltw | stw")->check(CLI::IsMember({"tw", "sqrt", "ltw", "stw"}));
  auto* o_kt = decompose->add_option("--kt", kt, "Exclude K_t");
  auto* o_kst = decompose->add_option("--kst", kst, "Exclude K*_{s,t}")->expected(2)->allow_extra_args(false);
  auto* o_jst = decompose->add_option("--jst", jst, "Exclude J_{s,t}")->expected(2)->allow_extra_args(false);
  auto* o_genus = decompose->add_option("--genus", genus, "Euler genus of the host surface");
  o_kt->excludes(o_kst)->excludes(o_jst)->excludes(o_genus);
  o_kst->excludes(o_jst)->excludes(o_genus);
  o_jst->excludes(o_genus);
  decompose->add_flag("--clique-variant", dec.clique_variant, "sqrt mode: treat K_t as J_{t-1,1}");
  decompose->add_option("--td", dec.td, "Tree decomposition (.td)");
  decompose->add_option("--layering", dec.layering, "Layering JSON");
  decompose->add_option("--rot", dec.rot, "Rotation system JSON");
  decompose->add_option("--out,-o", dec.out_dir, "Output directory");
  decompose->add_option("--jobs,-j", dec.jobs, "Parallel workers for several inputs");
  decompose->add_flag("--emit-dot", dec.emit_dot, "Write DOT files of the graph and quotient");
  decompose->add_flag("--exact-hitting", dec.exact_hitting, "Use the exact blocker construction");
  decompose->add_flag("--json", dec.json, "Print the report as JSON");

  cli::VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a result or witness file against its graph");
  verify->add_option("graph", ver.graph, "Graph file")->required();
  verify->add_option("document", ver.document, "result.json or witness.json")->required();
  verify->add_flag("--json", ver.json, "Print the verdict as JSON");

  cli::StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Summarise a graph and optional decomposition");
  stats->add_option("graph", st.graph, "Graph file")->required();
  stats->add_option("--td", st.td, "Tree decomposition (.td)");
  stats->add_option("--layering", st.layering, "Layering JSON");
  stats->add_option("--rot", st.rot, "Rotation system JSON");
  stats->add_flag("--json", st.json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInput;
  }

  if (*generate) return cli::run_generate(gen, std::cout, std::cerr);
  if (*verify) return cli::run_verify(ver, std::cout, std::cerr);
  if (*stats) return cli::run_stats(st, std::cout, std::cerr);

  try {
    dec.mode = pstruct::parse_mode(mode);
    if (*o_kst) dec.target = pstruct::Target::kst(kst[0], kst[1]);
    else if (*o_jst) dec.target = pstruct::Target::jst(jst[0], jst[1]);
    else if (*o_genus) dec.target = pstruct::Target::genus(genus);
    else if (*o_kt) dec.target = pstruct::Target::kt(kt);
    else throw pstruct::Error(pstruct::ErrorKind::kBadParams, "give one of --kt, --kst, --jst or --genus");
  } catch (const pstruct::Error& e) {
    std::cerr << e.what() << "\n";
    return cli::kExitInput;
  }
  return cli::run_decompose(dec, std::cout, std::cerr);
}
