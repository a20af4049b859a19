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

#include <stdexcept>
#include <string>
#include <string_view>

namespace pstruct {

enum class ErrorKind {
  kNotConnected,
  kInvalidSeeds,
  kTooLarge,
  kNotFound,
  kNotSeparating,
  kTooManyGroups,
  kNotTriangulation,
  kBadEmbedding,
  kInvalidInput,
  kBadParams,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` distinguishes the cause;
/// kInternal means a step that the construction guarantees did not hold,
/// i.e. a bug rather than bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

// Internal assertion: always on, the engines rely on it to surface proof-step failures.
#define PSTRUCT_ASSERT(cond, msg)                                                   \
  do {                                                                              \
    if (!(cond)) ::pstruct::fail(::pstruct::ErrorKind::kInternal,                   \
                                 std::string(msg) + " [" #cond "] at " __FILE__); \
  } while (0)

}  // namespace pstruct
