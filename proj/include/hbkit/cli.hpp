// Copyright 2026 The hbkit Authors
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

#ifndef HBKIT_CLI_HPP_
#define HBKIT_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbkit/family.hpp"
#include "hbkit/graph.hpp"

namespace hbkit {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitAbsent = 3;
inline constexpr int kExitNotHelly = 4;

// Defaults taken from HBKIT_THREADS and HBKIT_HULL_BUDGET when set.
int DefaultThreads();
std::uint64_t DefaultHullBudget();

struct AnalyzeOptions {
  int threads = 1;
  bool hull = true;
  std::uint64_t hull_budget = 10'000'000;
};

struct AnalysisOutcome {
  nlohmann::json report;
  // False when two classifiers disagree or a witness fails to re-verify.
  bool consistent = true;
};

AnalysisOutcome Analyze(const Graph& g, const AnalyzeOptions& options);

// Graphviz rendering; `red` vertices and the edges between them are coloured.
// When `positions` is non-empty each vertex gets a pinned (row, column).
std::string ToDot(const Graph& g, const std::vector<Vertex>& red,
                  const std::vector<std::pair<int, int>>& positions = {});

// The family drawn inside its host King-grid.
std::string FamilyToDot(const FamilyGraph& f);

// Entry point of the hbkit executable.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace hbkit

#endif  // HBKIT_CLI_HPP_
