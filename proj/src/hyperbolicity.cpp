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

#include "hbkit/hyperbolicity.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace hbkit {
namespace {

int TopGap(int s1, int s2, int s3) {
  // Largest minus second largest.
  if (s1 < s2) std::swap(s1, s2);
  if (s2 < s3) std::swap(s2, s3);
  if (s1 < s2) std::swap(s1, s2);
  return s1 - s2;
}

struct PairEntry {
  Vertex a;
  Vertex b;
  int dist;
};

struct Best {
  std::int64_t doubled = -1;
  std::array<Vertex, 4> quad{};

  void Offer(std::int64_t value, std::array<Vertex, 4> q) {
    std::sort(q.begin(), q.end());
    if (value > doubled || (value == doubled && q < quad)) {
      doubled = value;
      quad = q;
    }
  }
};

}  // namespace

HyperbolicityWitness QuadrupleDelta(const DistanceMatrix& d, Vertex u, Vertex v,
                                    Vertex w, Vertex x) {
  HyperbolicityWitness out;
  out.quadruple = {u, v, w, x};
  out.sums = {d(u, v) + d(w, x), d(u, w) + d(v, x), d(u, x) + d(v, w)};
  out.delta = HalfInt::FromDoubled(TopGap(out.sums[0], out.sums[1], out.sums[2]));
  return out;
}

HyperbolicityResult Hyperbolicity(const DistanceMatrix& d, int threads) {
  const Vertex n = d.size();
  HyperbolicityResult result;
  if (n < 4) {
    result.witness = QuadrupleDelta(d, 0, 0, 0, 0);
    return result;
  }
  std::vector<PairEntry> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b, d(a, b)});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const PairEntry& x, const PairEntry& y) {
                     return x.dist > y.dist;
                   });

  std::atomic<std::int64_t> global_best{0};
  const int workers = std::max(1, threads);
  std::vector<Best> local(workers);

  auto work = [&](int worker) {
    Best& best = local[worker];
    best.Offer(0, {0, 1, 2, 3});
    for (std::size_t i = static_cast<std::size_t>(worker); i < pairs.size();
         i += static_cast<std::size_t>(workers)) {
      const PairEntry& p = pairs[i];
      // Strict comparison keeps every quadruple that could tie the maximum.
      if (p.dist < global_best.load(std::memory_order_relaxed)) break;
      const auto row_a = d.row(p.a);
      const auto row_b = d.row(p.b);
      for (std::size_t j = 0; j < i; ++j) {
        const PairEntry& q = pairs[j];
        if (q.a == p.a || q.a == p.b || q.b == p.a || q.b == p.b) continue;
        const int s1 = p.dist + q.dist;
        const int s2 = row_a[q.a] + row_b[q.b];
        const int s3 = row_a[q.b] + row_b[q.a];
        const int gap = TopGap(s1, s2, s3);
        if (gap >= best.doubled) {
          best.Offer(gap, {p.a, p.b, q.a, q.b});
          std::int64_t seen = global_best.load(std::memory_order_relaxed);
          while (gap > seen &&
                 !global_best.compare_exchange_weak(seen, gap,
                                                    std::memory_order_relaxed)) {
          }
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Best best;
  for (const auto& b : local) {
    if (b.doubled >= 0) best.Offer(b.doubled, b.quad);
  }
  const auto& q = best.quad;
  result.witness = QuadrupleDelta(d, q[0], q[1], q[2], q[3]);
  result.value = result.witness.delta;
  return result;
}

HalfInt HyperbolicityBruteForce(const DistanceMatrix& d) {
  const Vertex n = d.size();
  int best = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        for (Vertex x = w + 1; x < n; ++x) {
          best = std::max(best, TopGap(d(u, v) + d(w, x), d(u, w) + d(v, x),
                                       d(u, x) + d(v, w)));
        }
      }
    }
  }
  return HalfInt::FromDoubled(best);
}

std::vector<Vertex> IntervalSlice(const DistanceMatrix& d, Vertex x, Vertex y,
                                  int k) {
  const int dxy = d(x, y);
  if (k < 0 || k > dxy) {
    throw Error("slice index " + std::to_string(k) + " outside [0," +
                std::to_string(dxy) + "]");
  }
  std::vector<Vertex> out;
  for (Vertex z = 0; z < d.size(); ++z) {
    if (d(x, z) == k && k + d(z, y) == dxy) out.push_back(z);
  }
  return out;
}

ThinnessResult IntervalThinness(const DistanceMatrix& d) {
  const Vertex n = d.size();
  ThinnessResult result;
  std::vector<std::vector<Vertex>> slices;
  for (Vertex x = 0; x < n; ++x) {
    const auto row_x = d.row(x);
    for (Vertex y = x + 1; y < n; ++y) {
      const int dxy = row_x[y];
      // Two vertices of S_k are within 2 min(k, dxy - k) of each other.
      if (2 * (dxy / 2) <= result.tau) continue;
      const auto row_y = d.row(y);
      slices.assign(static_cast<std::size_t>(dxy) + 1, {});
      for (Vertex z = 0; z < n; ++z) {
        if (row_x[z] + row_y[z] == dxy) slices[row_x[z]].push_back(z);
      }
      for (int k = 1; k < dxy; ++k) {
        if (2 * std::min(k, dxy - k) <= result.tau) continue;
        const auto& s = slices[k];
        for (std::size_t i = 0; i < s.size(); ++i) {
          const auto row_u = d.row(s[i]);
          for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (row_u[s[j]] > result.tau) {
              result.tau = row_u[s[j]];
              result.witness = {x, y, k, s[i], s[j], result.tau};
            }
          }
        }
      }
    }
  }
  return result;
}

}  // namespace hbkit
