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

#include "hbkit/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hbkit/constructions.hpp"
#include "hbkit/distance.hpp"
#include "hbkit/hull.hpp"

namespace hbkit {
namespace {

// Stable colouring: start from degrees, refine by the multiset of neighbour
// colours until the number of classes stops growing.
std::vector<int> RefinedColours(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex u : g.neighbors(v)) sig[v].second.push_back(colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    std::vector<int> refined(n);
    for (Vertex v = 0; v < n; ++v) refined[v] = rank.at(sig[v]);
    const auto classes = [](const std::vector<int>& c) {
      return std::set<int>(c.begin(), c.end()).size();
    };
    const bool stable = classes(refined) == classes(colour);
    colour = std::move(refined);
    if (stable) return colour;
  }
}

}  // namespace

std::uint64_t CanonicalCode(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n > 11) throw Error("canonical code supports at most 11 vertices");
  const std::vector<int> colour = RefinedColours(g);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return colour[a] != colour[b] ? colour[a] < colour[b] : a < b;
  });
  // Class boundaries inside `order`.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = UINT64_MAX;
  auto encode = [&]() {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        code = (code << 1) | (g.HasEdge(order[i], order[j]) ? 1u : 0u);
      }
    }
    best = std::min(best, code);
  };
  // Odometer over the permutations of every block.
  for (auto& [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);
  for (;;) {
    encode();
    std::size_t i = 0;
    for (; i < blocks.size(); ++i) {
      const auto [b, e] = blocks[i];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (i == blocks.size()) break;
  }
  return best;
}

std::vector<Graph> ConnectedGraphs(int max_n) {
  std::vector<Graph> all;
  if (max_n < 1) return all;
  std::vector<Graph> level{Graph::FromEdges(1, {})};
  all = level;
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::uint64_t, Graph> found;
    for (const Graph& base : level) {
      const std::vector<Edge> edges = base.Edges();
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<Edge> grown = edges;
        for (int v = 0; v < n - 1; ++v) {
          if (mask & (1u << v)) grown.emplace_back(v, n - 1);
        }
        Graph g = Graph::FromEdges(n, grown);
        found.emplace(CanonicalCode(g), std::move(g));
      }
    }
    level.clear();
    for (auto& [code, g] : found) level.push_back(std::move(g));
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

Graph RandomHullGraph(int n, double prob, std::uint64_t seed,
                      std::uint64_t budget) {
  const Graph base = RandomConnectedGraph(n, prob, seed);
  Graph h = Hull(DistanceMatrix::Compute(base), budget).hull;
  h.set_name("random-hull n=" + std::to_string(n) + " seed=" +
             std::to_string(seed));
  return h;
}

}  // namespace hbkit
