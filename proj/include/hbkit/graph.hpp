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

#ifndef HBKIT_GRAPH_HPP_
#define HBKIT_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hbkit {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Base class of every error raised by the library. The CLI maps it to exit
// code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
// sorted and free of duplicates.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either orientation)
  // are collapsed. Throws Error on self-loops or out-of-range endpoints.
  static Graph FromEdges(Vertex n, std::span<const Edge> edges,
                         std::string name = {});

  Vertex num_vertices() const { return static_cast<Vertex>(adj_.size()); }
  std::int64_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(adj_[v].size());
  }
  bool HasEdge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> Edges() const;

  bool IsConnected() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t num_edges_ = 0;
  std::string name_;
};

// Throws DisconnectedGraphError unless g is connected and nonempty.
void RequireConnected(const Graph& g);

// Induced subgraph on `vertices`; `old_to_new[v]` is -1 for dropped vertices.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

// Vertices are renumbered in the order given. Throws Error on out-of-range
// ids, duplicates or an empty set.
InducedSubgraph Induce(const Graph& g, std::span<const Vertex> vertices);

// Relabels vertex v as perm[v].
Graph Relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace hbkit

#endif  // HBKIT_GRAPH_HPP_
