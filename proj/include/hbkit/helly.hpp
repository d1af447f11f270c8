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

#ifndef HBKIT_HELLY_HPP_
#define HBKIT_HELLY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hbkit/distance.hpp"
#include "hbkit/graph.hpp"
#include "hbkit/half_int.hpp"

namespace hbkit {

// The disk D(center, radius).
struct DiskConstraint {
  Vertex center = 0;
  int radius = 0;
  friend bool operator==(const DiskConstraint&, const DiskConstraint&) = default;
};

struct PseudoModularCheck {
  bool holds = true;
  // Three pairwise-intersecting disks with no common vertex.
  std::array<DiskConstraint, 3> violation{};
};

// Every family of three pairwise-intersecting disks has a common vertex.
PseudoModularCheck CheckPseudoModular(const DistanceMatrix& d);

struct HellyCheck {
  bool holds = true;
  // On failure: the vertex triple whose two-of-three disk intersection is
  // empty, and a minimal pairwise-intersecting disk family extracted from it
  // whose common intersection is empty.
  std::array<Vertex, 3> triple{};
  std::vector<DiskConstraint> witness;
};

// Helly test on the disk hypergraph via the triple criterion: the disks are
// Helly iff for all vertex triples the disks containing at least two of the
// three have a common vertex. Only the smallest such disk per center matters,
// so each triple costs one pass over the centers.
HellyCheck CheckHelly(const DistanceMatrix& d);
inline bool IsHelly(const DistanceMatrix& d) { return CheckHelly(d).holds; }

// Independent oracle: enumerates every maximal pairwise-intersecting family of
// distinct nontrivial disks (radius below eccentricity) and checks each has a
// common vertex. Throws Error when there are more than `max_disks` distinct
// disks.
bool HellyBruteForce(const DistanceMatrix& d, std::size_t max_disks = 64);

// Lowest-id vertex lying in every disk, or nullopt when the disks have no
// common vertex.
std::optional<Vertex> PickCommonVertex(const DistanceMatrix& d,
                                       std::span<const DiskConstraint> disks);

// Pseudo-median of a vertex triple. When the Gromov products are integers
// there is a vertex on shortest paths between all three pairs; otherwise a
// triangle whose edges lie on those shortest paths.
struct MedianResult {
  enum class Kind { kVertex, kTriangle };
  Kind kind = Kind::kVertex;
  Vertex vertex = -1;                      // kVertex
  std::array<Vertex, 3> triangle{-1, -1, -1};  // kTriangle: (x', y', z')
  HalfInt product_x;  // (y|z)_x
  HalfInt product_y;  // (x|z)_y
  HalfInt product_z;  // (x|y)_z
};

// Lowest-id vertex / lexicographically smallest triangle. Throws Error when
// neither exists, which can only happen outside pseudo-modular graphs.
MedianResult FindMedian(const DistanceMatrix& d, Vertex x, Vertex y, Vertex z);

}  // namespace hbkit

#endif  // HBKIT_HELLY_HPP_
