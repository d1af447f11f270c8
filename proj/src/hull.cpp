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

#include "hbkit/hull.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "hbkit/detect.hpp"
#include "hbkit/helly.hpp"
#include "hbkit/hyperbolicity.hpp"

namespace hbkit {
namespace {

class Enumerator {
 public:
  Enumerator(std::span<const int> dist, int n) : dist_(dist), n_(n) {
    ecc_.assign(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) ecc_[u] = std::max(ecc_[u], at(u, v));
    }
    // Far-reaching vertices first: their ranges are widest and constrain
    // the rest the most.
    order_.resize(n);
    for (int i = 0; i < n; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return ecc_[a] > ecc_[b]; });
    f_.assign(n, -1);
  }

  std::uint64_t SearchSpace() const {
    std::uint64_t total = 1;
    for (int e : ecc_) {
      const std::uint64_t factor = static_cast<std::uint64_t>(e) + 1;
      if (total > UINT64_MAX / factor) return UINT64_MAX;
      total *= factor;
    }
    return total;
  }

  std::vector<ExtremalFunction> Run() {
    Descend(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  int at(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

  int LowerBound(int v) const {
    int lo = 0;
    for (int i = 0; i < depth_; ++i) {
      const int u = order_[i];
      lo = std::max(lo, at(u, v) - f_[u]);
    }
    return lo;
  }

  // Every assigned u still needs a partner w with f(u) + f(w) = d(u, w).
  bool TightnessPossible() const {
    for (int i = 0; i < depth_; ++i) {
      const int u = order_[i];
      bool ok = false;
      for (int w = 0; w < n_ && !ok; ++w) {
        const int need = at(u, w) - f_[u];
        if (f_[w] >= 0) {
          ok = f_[w] == need;
        } else {
          ok = need >= 0 && need <= ecc_[w] && need >= LowerBound(w);
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  void Descend(int depth) {
    depth_ = depth;
    if (!TightnessPossible()) return;
    if (depth == n_) {
      out_.push_back(f_);
      return;
    }
    const int v = order_[depth];
    const int lo = LowerBound(v);
    for (int value = lo; value <= ecc_[v]; ++value) {
      f_[v] = value;
      Descend(depth + 1);
      depth_ = depth;
    }
    f_[v] = -1;
  }

  std::span<const int> dist_;
  int n_;
  std::vector<int> ecc_;
  std::vector<int> order_;
  std::vector<int> f_;
  int depth_ = 0;
  std::vector<ExtremalFunction> out_;
};

int MaxNormDistance(const ExtremalFunction& a, const ExtremalFunction& b) {
  int m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

std::vector<ExtremalFunction> ExtremalFunctionsOfMetric(
    std::span<const int> dist, int n, std::uint64_t budget) {
  if (n <= 0 || dist.size() != static_cast<std::size_t>(n) * n) {
    throw Error("metric must be a nonempty square matrix");
  }
  Enumerator e(dist, n);
  const std::uint64_t space = e.SearchSpace();
  if (space > budget) {
    throw HullBudgetError("hull search space " + std::to_string(space) +
                          " exceeds budget " + std::to_string(budget));
  }
  return e.Run();
}

std::vector<ExtremalFunction> ExtremalFunctions(const DistanceMatrix& d,
                                                std::uint64_t budget) {
  const int n = d.size();
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) dist[static_cast<std::size_t>(u) * n + v] = d(u, v);
  }
  return ExtremalFunctionsOfMetric(dist, n, budget);
}

HullResult Hull(const DistanceMatrix& d, std::uint64_t budget) {
  HullResult h;
  h.functions = ExtremalFunctions(d, budget);
  const Vertex m = static_cast<Vertex>(h.functions.size());
  std::map<ExtremalFunction, Vertex> index;
  for (Vertex i = 0; i < m; ++i) index[h.functions[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) {
      if (MaxNormDistance(h.functions[i], h.functions[j]) == 1) {
        edges.emplace_back(i, j);
      }
    }
  }
  h.hull = Graph::FromEdges(m, edges, "hull");
  for (Vertex v = 0; v < d.size(); ++v) {
    ExtremalFunction row(d.row(v).begin(), d.row(v).end());
    const auto it = index.find(row);
    if (it == index.end()) {
      throw Error("distance function of vertex " + std::to_string(v) +
                  " is not extremal");
    }
    h.embedding.push_back(it->second);
  }
  return h;
}

HullReport HullValidate(const DistanceMatrix& d, const HullResult& h,
                        int threads) {
  HullReport r;
  DistanceMatrix hd;
  try {
    hd = DistanceMatrix::Compute(h.hull);
  } catch (const DisconnectedGraphError&) {
    r.failures.push_back("hull is disconnected");
    return r;
  }
  r.helly = IsHelly(hd);
  if (!r.helly) r.failures.push_back("hull is not Helly");

  r.embedding_isometric = true;
  for (Vertex u = 0; u < d.size() && r.embedding_isometric; ++u) {
    for (Vertex v = u + 1; v < d.size(); ++v) {
      if (hd(h.embedding[u], h.embedding[v]) != d(u, v)) {
        r.embedding_isometric = false;
        r.failures.push_back("embedding stretches " + std::to_string(u) + "," +
                             std::to_string(v));
        break;
      }
    }
  }

  r.hb_graph = Hyperbolicity(d, threads).value;
  r.hb_hull = Hyperbolicity(hd, threads).value;
  r.hb_preserved = r.hb_graph == r.hb_hull;
  if (!r.hb_preserved) {
    r.failures.push_back("hull hb " + r.hb_hull.ToString() + " differs from " +
                         r.hb_graph.ToString());
  }

  for (Vertex x = 0; x < hd.size(); ++x) {
    int nearest = hd.diameter();
    for (Vertex v : h.embedding) nearest = std::min(nearest, hd(x, v));
    r.farthest_from_image = std::max(r.farthest_from_image, nearest);
  }
  r.within_twice_hb = r.farthest_from_image <= r.hb_graph.doubled();
  if (!r.within_twice_hb) {
    r.failures.push_back("hull vertex at distance " +
                         std::to_string(r.farthest_from_image) +
                         " from the embedded graph");
  }

  r.threshold_rows_agree = r.helly;
  if (r.helly) {
    for (int t = 0; t <= r.hb_graph.doubled() + 2; ++t) {
      HullThresholdRow row;
      row.delta = HalfInt::FromDoubled(t);
      row.hb_at_most_delta = r.hb_graph <= row.delta;
      row.obstruction_absent = t % 2 == 0 ? !DetectH2(hd, t / 2)
                                          : !DetectH1OrH3(hd, t / 2);
      if (row.hb_at_most_delta != row.obstruction_absent) {
        r.threshold_rows_agree = false;
        r.failures.push_back("obstruction test disagrees at delta " +
                             row.delta.ToString());
      }
      r.rows.push_back(row);
    }
  }
  return r;
}

}  // namespace hbkit
