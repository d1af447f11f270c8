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

#include "hbkit/constructions.hpp"

#include <random>
#include <string>
#include <vector>

namespace hbkit {

Graph GraphPower(const Graph& g, const DistanceMatrix& d, int k) {
  if (k < 1) throw Error("graph power needs k >= 1, got " + std::to_string(k));
  std::vector<Edge> edges;
  const Vertex n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (d(u, v) <= k) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph GraphPower(const Graph& g, int k) {
  if (k < 1) throw Error("graph power needs k >= 1, got " + std::to_string(k));
  return GraphPower(g, DistanceMatrix::Compute(g), k);
}

Graph StrongProduct(const Graph& g, const Graph& h) {
  const Vertex ng = g.num_vertices();
  const Vertex nh = h.num_vertices();
  if (ng == 0 || nh == 0) throw Error("strong product of an empty graph");
  auto close = [](const Graph& x, Vertex a, Vertex b) {
    return a == b || x.HasEdge(a, b);
  };
  std::vector<Edge> edges;
  for (Vertex a1 = 0; a1 < ng; ++a1) {
    for (Vertex a2 = 0; a2 < nh; ++a2) {
      const Vertex u = a1 * nh + a2;
      for (Vertex b1 = a1; b1 < ng; ++b1) {
        if (!close(g, a1, b1)) continue;
        for (Vertex b2 = 0; b2 < nh; ++b2) {
          const Vertex v = b1 * nh + b2;
          if (v <= u || !close(h, a2, b2)) continue;
          edges.emplace_back(u, v);
        }
      }
    }
  }
  return Graph::FromEdges(ng * nh, edges);
}

Graph KingGrid(int p, int q) {
  if (p < 1 || q < 1) throw Error("king grid needs p, q >= 1");
  Graph g = StrongProduct(PathGraph(p), PathGraph(q));
  g.set_name("king_grid(" + std::to_string(p) + "," + std::to_string(q) + ")");
  return g;
}

Graph PathGraph(int n) {
  if (n < 1) throw Error("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(n, edges, "P" + std::to_string(n));
}

Graph CycleGraph(int n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges, "C" + std::to_string(n));
}

Graph CompleteGraph(int n) {
  if (n < 1) throw Error("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(n, edges, "K" + std::to_string(n));
}

Graph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::FromEdges(leaves + 1, edges,
                          "K1," + std::to_string(leaves));
}

Graph DiamondGraph() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}};
  return Graph::FromEdges(4, edges, "diamond");
}

Graph RandomConnectedGraph(int n, double prob, std::uint64_t seed) {
  if (n < 1) throw Error("random graph needs n >= 1");
  if (prob < 0.0 || prob > 1.0) throw Error("probability must be in [0,1]");
  // mt19937_64 output is fixed by the standard; the distributions are not, so
  // the mapping to ranges is done by hand.
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)),
                       v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform01() < prob) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges,
                          "random(n=" + std::to_string(n) +
                              ",seed=" + std::to_string(seed) + ")");
}

}  // namespace hbkit
