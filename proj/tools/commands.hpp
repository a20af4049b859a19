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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pstruct/decompose.hpp"

namespace pstruct::cli {

// Exit codes of every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitWitness = 3;
inline constexpr int kExitInput = 4;

/// Ordered key=value report; renders as lines or as one JSON object.
class RunReport {
 public:
  void add(std::string key, std::string value) { entries_.push_back({std::move(key), std::move(value), false}); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, long long value) { entries_.push_back({std::move(key), std::to_string(value), true}); }
  void add(std::string key, int value) { add(std::move(key), static_cast<long long>(value)); }
  void add(std::string key, double value);
  void add(std::string key, bool value) { entries_.push_back({std::move(key), value ? "true" : "false", true}); }
  void append(const RunReport& other);
  std::string text() const;
  std::string json() const;

 private:
  struct Entry {
    std::string key;
    std::string value;
    bool literal;  // number or boolean
  };
  std::vector<Entry> entries_;
};

struct DecomposeArgs {
  std::vector<std::string> inputs;
  Mode mode = Mode::kTw;
  Target target;
  bool clique_variant = false;
  std::optional<std::string> td;
  std::optional<std::string> layering;
  std::optional<std::string> rot;
  std::string out_dir = "out";
  bool emit_dot = false;
  bool exact_hitting = false;
  bool json = false;
  int jobs = 1;
};

/// Decomposes every input (in parallel when jobs > 1), re-verifies each
/// result and prints the reports in input order. Returns the largest exit
/// code over the inputs.
int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::string graph;
  std::string document;  // result or witness JSON
  bool json = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct StatsArgs {
  std::string graph;
  std::optional<std::string> td;
  std::optional<std::string> layering;
  std::optional<std::string> rot;
  bool json = false;
};

int run_stats(const StatsArgs& args, std::ostream& out, std::ostream& err);

struct GenerateArgs {
  std::string kind;  // grid, apollonian, ktree, complete, petersen, wheel
  std::vector<long long> params;
  std::uint64_t seed = 1;
  std::string out;   // path prefix; writes <out>.gr and <out>.rot.json
  bool emit_dot = false;
};

int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

}  // namespace pstruct::cli
