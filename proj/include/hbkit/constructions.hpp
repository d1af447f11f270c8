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

#ifndef HBKIT_CONSTRUCTIONS_HPP_
#define HBKIT_CONSTRUCTIONS_HPP_

#include <cstdint>

#include "hbkit/distance.hpp"
#include "hbkit/graph.hpp"

namespace hbkit {

// uv is an edge of the result iff 0 < d(u,v) <= k. Throws Error for k < 1.
Graph GraphPower(const Graph& g, const DistanceMatrix& d, int k);
Graph GraphPower(const Graph& g, int k);

// Vertex (a, b) gets id a * |V(h)| + b.
Graph StrongProduct(const Graph& g, const Graph& h);

// P_p strong-times P_q; cell (i, j) gets id i * q + j.
Graph KingGrid(int p, int q);
inline Vertex KingCell(int q, int i, int j) { return i * q + j; }

Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph StarGraph(int leaves);
// 4-cycle plus one chord.
Graph DiamondGraph();

// Connected graph: a random attachment tree plus independent extra edges with
// probability `prob`. Deterministic for a fixed seed across platforms.
Graph RandomConnectedGraph(int n, double prob, std::uint64_t seed);

}  // namespace hbkit

#endif  // HBKIT_CONSTRUCTIONS_HPP_
