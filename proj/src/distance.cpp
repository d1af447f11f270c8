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

#include "hbkit/distance.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hbkit {

DistanceMatrix DistanceMatrix::Compute(const Graph& g) {
  constexpr Dist kUnseen = std::numeric_limits<Dist>::max();
  DistanceMatrix d;
  d.n_ = g.num_vertices();
  if (d.n_ == 0) throw DisconnectedGraphError("graph is empty");
  const std::size_t n = static_cast<std::size_t>(d.n_);
  d.dist_.assign(n * n, kUnseen);
  d.ecc_.assign(n, 0);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < d.n_; ++s) {
    Dist* row = d.dist_.data() + s * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == kUnseen) {
          row[w] = static_cast<Dist>(row[u] + 1);
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      throw DisconnectedGraphError("vertex " + std::to_string(queue[0]) +
                                   " cannot reach every vertex");
    }
    d.ecc_[s] = row[queue[tail - 1]];
  }
  d.diam_ = *std::max_element(d.ecc_.begin(), d.ecc_.end());
  d.rad_ = *std::min_element(d.ecc_.begin(), d.ecc_.end());
  return d;
}

DiskTable::DiskTable(const DistanceMatrix& d) {
  const Vertex n = d.size();
  disks_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& rows = disks_[v];
    rows.assign(d.ecc(v) + 1, VertexBitset(n));
    for (Vertex u = 0; u < n; ++u) rows[d(v, u)].set(u);
    for (int r = 1; r <= d.ecc(v); ++r) rows[r] |= rows[r - 1];
  }
}

DiskRelation DisksRelation(const DistanceMatrix& d, Vertex u, int p, Vertex v,
                           int q) {
  const int duv = d(u, v);
  if (duv <= p + q) return DiskRelation::kIntersect;
  if (duv == p + q + 1) return DiskRelation::kSeeOnly;
  return DiskRelation::kDisjoint;
}

}  // namespace hbkit
