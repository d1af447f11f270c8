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

#ifndef HBKIT_DISTANCE_HPP_
#define HBKIT_DISTANCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hbkit/bitset.hpp"
#include "hbkit/graph.hpp"

namespace hbkit {

using Dist = std::uint16_t;

// All-pairs shortest-path distances of a connected graph, dense row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  // BFS from every vertex. Throws DisconnectedGraphError when some pair is
  // unreachable.
  static DistanceMatrix Compute(const Graph& g);

  Vertex size() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Dist> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

  int ecc(Vertex v) const { return ecc_[v]; }
  int diameter() const { return diam_; }
  int radius() const { return rad_; }

 private:
  Vertex n_ = 0;
  std::vector<Dist> dist_;
  std::vector<int> ecc_;
  int diam_ = 0;
  int rad_ = 0;
};

// Ball bitsets D(v, r) for every center and every radius 0..ecc(v).
class DiskTable {
 public:
  explicit DiskTable(const DistanceMatrix& d);

  // Radii beyond ecc(v) are clamped (the disk is V).
  const VertexBitset& disk(Vertex v, int r) const {
    const int top = static_cast<int>(disks_[v].size()) - 1;
    return disks_[v][r < top ? r : top];
  }

 private:
  std::vector<std::vector<VertexBitset>> disks_;
};

enum class DiskRelation { kIntersect, kSeeOnly, kDisjoint };

// Two disks intersect iff d(u,v) <= p+q and see each other iff
// d(u,v) <= p+q+1.
DiskRelation DisksRelation(const DistanceMatrix& d, Vertex u, int p, Vertex v,
                           int q);

}  // namespace hbkit

#endif  // HBKIT_DISTANCE_HPP_
