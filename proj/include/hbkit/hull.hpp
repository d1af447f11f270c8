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

#ifndef HBKIT_HULL_HPP_
#define HBKIT_HULL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hbkit/distance.hpp"
#include "hbkit/graph.hpp"
#include "hbkit/half_int.hpp"

namespace hbkit {

using ExtremalFunction = std::vector<int>;

inline constexpr std::uint64_t kDefaultHullBudget = 10'000'000;

class HullBudgetError : public Error {
 public:
  using Error::Error;
};

// Integer vectors f >= 0 with f(u) + f(v) >= d(u,v) for all pairs and
// f(u) = max_v (d(u,v) - f(v)) for every u, sorted lexicographically.
// `dist` is a row-major n x n integer metric. Throws HullBudgetError when the
// product of (ecc(v) + 1) exceeds `budget`.
std::vector<ExtremalFunction> ExtremalFunctionsOfMetric(
    std::span<const int> dist, int n, std::uint64_t budget = kDefaultHullBudget);
std::vector<ExtremalFunction> ExtremalFunctions(
    const DistanceMatrix& d, std::uint64_t budget = kDefaultHullBudget);

struct HullResult {
  Graph hull;
  std::vector<ExtremalFunction> functions;  // per hull vertex
  std::vector<Vertex> embedding;            // input vertex -> hull vertex
};

// Hull vertices are the extremal functions; two are adjacent when they differ
// by exactly 1 in the maximum norm. Vertex v embeds as d(v, .).
HullResult Hull(const DistanceMatrix& d,
                std::uint64_t budget = kDefaultHullBudget);

struct HullThresholdRow {
  HalfInt delta;
  bool hb_at_most_delta = false;
  bool obstruction_absent = false;
};

struct HullReport {
  bool helly = false;
  bool embedding_isometric = false;
  bool hb_preserved = false;
  bool within_twice_hb = false;
  bool threshold_rows_agree = false;
  HalfInt hb_graph;
  HalfInt hb_hull;
  int farthest_from_image = 0;
  std::vector<HullThresholdRow> rows;
  std::vector<std::string> failures;

  bool ok() const {
    return helly && embedding_isometric && hb_preserved && within_twice_hb &&
           threshold_rows_agree;
  }
};

// Checks the hull against its input graph. For every half-integer delta up
// to hb + 1, "hb <= delta" must coincide with the hull avoiding H2^delta
// (integer delta) or both H1^{delta+1/2} and H3^{delta-1/2}.
HullReport HullValidate(const DistanceMatrix& d, const HullResult& h,
                        int threads = 1);

}  // namespace hbkit

#endif  // HBKIT_HULL_HPP_
