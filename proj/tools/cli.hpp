// Copyright 2026 The Cocolat Authors
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

#ifndef COCOLAT_TOOLS_CLI_HPP_
#define COCOLAT_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cocolat/generate.hpp"
#include "cocolat/graph.hpp"
#include "cocolat/ordering.hpp"

namespace cocolat::cli {

inline constexpr int kExitOk = 0;
// A false verdict, an undecided check or a refused size cap.
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one verb. `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

/// One TAP-style line of the oracle suite.
struct SuiteLine {
  bool ok = true;
  bool skipped = false;
  std::string text;
};

/// Every oracle that applies to (g, tau), tau a cocomp ordering of g.
std::vector<SuiteLine> run_oracle_suite(const Graph& g, const VertexOrdering& tau);

struct BenchRow {
  int n = 0;
  std::int64_t m = 0;
  double millis = 0;
};

/// Best-of-`repeats` wall time of local_mns_plus followed by chainclique,
/// preconditions trusted.
BenchRow time_pipeline(const GeneratedInstance& instance, int repeats);

/// Default seed: COCOLAT_SEED when set and numeric, else `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 1);

}  // namespace cocolat::cli

#endif  // COCOLAT_TOOLS_CLI_HPP_
