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

#include "hbkit/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace hbkit {

Graph Graph::FromEdges(Vertex n, std::span<const Edge> edges,
                       std::string name) {
  if (n < 0) throw Error("negative vertex count");
  Graph g;
  g.adj_.resize(n);
  g.name_ = std::move(name);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.num_edges_ += static_cast<std::int64_t>(nbrs.size());
  }
  g.num_edges_ /= 2;
  return g;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::IsConnected() const {
  const Vertex n = num_vertices();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

void RequireConnected(const Graph& g) {
  if (g.num_vertices() == 0) throw DisconnectedGraphError("graph is empty");
  if (!g.IsConnected()) throw DisconnectedGraphError("graph is disconnected");
}

InducedSubgraph Induce(const Graph& g, std::span<const Vertex> vertices) {
  const Vertex n = g.num_vertices();
  if (vertices.empty()) throw Error("induced subgraph needs a nonempty set");
  InducedSubgraph out;
  out.old_to_new.assign(n, -1);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) {
      throw Error("vertex " + std::to_string(v) + " out of range");
    }
    if (out.old_to_new[v] != -1) {
      throw Error("duplicate vertex " + std::to_string(v));
    }
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (out.old_to_new[w] != -1 && v < w) {
        edges.emplace_back(out.old_to_new[v], out.old_to_new[w]);
      }
    }
  }
  out.graph = Graph::FromEdges(static_cast<Vertex>(vertices.size()), edges);
  return out;
}

Graph Relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.Edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::FromEdges(g.num_vertices(), edges, g.name());
}

}  // namespace hbkit
