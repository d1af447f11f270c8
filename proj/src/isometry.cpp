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

#include "hbkit/isometry.hpp"

#include <algorithm>
#include <limits>

namespace hbkit {
namespace {

// Distances inside an arbitrary (possibly disconnected) graph; -1 marks an
// unreachable pair.
std::vector<int> InducedDistances(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* row = dist.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return dist;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const DistanceMatrix& pd,
                  const DistanceMatrix& hd)
      : pattern_(pattern), pd_(pd), hd_(hd) {}

  std::optional<std::vector<Vertex>> Run() {
    const Vertex np = pd_.size();
    const Vertex nh = hd_.size();
    if (np == 0) return std::vector<Vertex>{};
    if (np > nh || pd_.diameter() > hd_.diameter()) return std::nullopt;
    BuildOrder();
    phi_.assign(np, -1);
    used_.assign(nh, 0);
    if (Extend(0)) return phi_;
    return std::nullopt;
  }

 private:
  void BuildOrder() {
    const Vertex np = pd_.size();
    Vertex start = 0;
    for (Vertex p = 1; p < np; ++p) {
      if (pd_.ecc(p) > pd_.ecc(start)) start = p;
    }
    std::vector<char> placed(np, 0);
    order_.push_back(start);
    placed[start] = 1;
    if (np > 1) {
      Vertex far = -1;
      for (Vertex p = 0; p < np; ++p) {
        if (!placed[p] && (far < 0 || pd_(start, p) > pd_(start, far))) far = p;
      }
      order_.push_back(far);
      placed[far] = 1;
    }
    // Then grow along adjacency so each new vertex sits next to a placed one.
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : pattern_.neighbors(order_[i])) {
        if (!placed[w]) {
          placed[w] = 1;
          order_.push_back(w);
        }
      }
    }
    for (Vertex p = 0; p < np; ++p) {
      if (!placed[p]) order_.push_back(p);
    }
    // Distance profile of each pattern vertex, for pruning the first choice.
    profile_.assign(static_cast<std::size_t>(pd_.diameter()) + 1, 0);
    for (Vertex p = 0; p < np; ++p) ++profile_[pd_(start, p)];
  }

  bool ProfileFits(Vertex h) const {
    std::vector<int> counts(profile_.size(), 0);
    for (Dist x : hd_.row(h)) {
      if (x < counts.size()) ++counts[x];
    }
    for (std::size_t r = 0; r < profile_.size(); ++r) {
      if (counts[r] < profile_[r]) return false;
    }
    return true;
  }

  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    const Vertex nh = hd_.size();
    for (Vertex h = 0; h < nh; ++h) {
      if (used_[h]) continue;
      if (depth == 0 && !ProfileFits(h)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex q = order_[i];
        ok = hd_(h, phi_[q]) == pd_(p, q);
      }
      if (!ok) continue;
      phi_[p] = h;
      used_[h] = 1;
      if (Extend(depth + 1)) return true;
      used_[h] = 0;
      phi_[p] = -1;
    }
    return false;
  }

  const Graph& pattern_;
  const DistanceMatrix& pd_;
  const DistanceMatrix& hd_;
  std::vector<Vertex> order_;
  std::vector<int> profile_;
  std::vector<Vertex> phi_;
  std::vector<char> used_;
};

}  // namespace

IsometryCheck CheckIsometric(const Graph& g, const DistanceMatrix& d,
                             std::span<const Vertex> subset) {
  InducedSubgraph sub = Induce(g, subset);
  const Vertex k = sub.graph.num_vertices();
  const std::vector<int> inner = InducedDistances(sub.graph);
  IsometryCheck out;
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      const int di = inner[static_cast<std::size_t>(a) * k + b];
      const int dh = d(sub.new_to_old[a], sub.new_to_old[b]);
      if (di != dh) {
        out.u = sub.new_to_old[a];
        out.v = sub.new_to_old[b];
        out.host_distance = dh;
        out.induced_distance = di;
        return out;
      }
    }
  }
  out.isometric = true;
  return out;
}

IsometryCheck CheckIsometric(const Graph& g, std::span<const Vertex> subset) {
  return CheckIsometric(g, DistanceMatrix::Compute(g), subset);
}

std::optional<std::vector<Vertex>> FindIsometricEmbedding(
    const Graph& pattern, const DistanceMatrix& pattern_dist,
    const DistanceMatrix& host_dist) {
  return EmbeddingSearch(pattern, pattern_dist, host_dist).Run();
}

std::optional<std::vector<Vertex>> FindIsometricEmbedding(const Graph& pattern,
                                                          const Graph& host) {
  const DistanceMatrix pd = DistanceMatrix::Compute(pattern);
  const DistanceMatrix hd = DistanceMatrix::Compute(host);
  return FindIsometricEmbedding(pattern, pd, hd);
}

bool AreIsomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  if (!a.IsConnected() || !b.IsConnected()) {
    throw Error("isomorphism test expects connected graphs");
  }
  std::vector<Vertex> da, db;
  for (Vertex v = 0; v < a.num_vertices(); ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.num_vertices(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return FindIsometricEmbedding(a, b).has_value();
}

}  // namespace hbkit
