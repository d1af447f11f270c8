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

#ifndef HBKIT_ISOMETRY_HPP_
#define HBKIT_ISOMETRY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "hbkit/distance.hpp"
#include "hbkit/graph.hpp"

namespace hbkit {

struct IsometryCheck {
  bool isometric = false;
  // On failure: a pair (host ids) whose induced distance differs from the
  // host distance. `induced_distance` is -1 when the pair is disconnected in
  // the induced subgraph.
  Vertex u = -1;
  Vertex v = -1;
  int host_distance = 0;
  int induced_distance = 0;
};

IsometryCheck CheckIsometric(const Graph& g, const DistanceMatrix& d,
                             std::span<const Vertex> subset);
IsometryCheck CheckIsometric(const Graph& g, std::span<const Vertex> subset);

// Searches for an injective map phi from pattern vertices to host vertices
// with d_host(phi(a), phi(b)) = d_pattern(a, b) for all pairs. The image then
// induces an isometric copy of the pattern. Returns phi indexed by pattern
// vertex. Backtracking over distance-row consistency; the first embedding in
// the search order is returned, so results are deterministic.
std::optional<std::vector<Vertex>> FindIsometricEmbedding(
    const Graph& pattern, const DistanceMatrix& pattern_dist,
    const DistanceMatrix& host_dist);
std::optional<std::vector<Vertex>> FindIsometricEmbedding(const Graph& pattern,
                                                          const Graph& host);

// Isomorphism test for connected graphs: equal order and size plus a
// distance-preserving bijection.
bool AreIsomorphic(const Graph& a, const Graph& b);

}  // namespace hbkit

#endif  // HBKIT_ISOMETRY_HPP_
