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

#ifndef HBKIT_CORPUS_HPP_
#define HBKIT_CORPUS_HPP_

#include <cstdint>
#include <vector>

#include "hbkit/graph.hpp"

namespace hbkit {

// Isomorphism-invariant code for graphs with at most 11 vertices: the
// smallest upper-triangle adjacency bitstring over all vertex orders that
// respect a colour refinement by degree. Throws Error for larger graphs.
std::uint64_t CanonicalCode(const Graph& g);

// Every connected graph with 1..max_n vertices, one per isomorphism class,
// ordered by vertex count and then by canonical code.
std::vector<Graph> ConnectedGraphs(int max_n);

// Injective hull of a seeded random connected graph; always Helly.
Graph RandomHullGraph(int n, double prob, std::uint64_t seed,
                      std::uint64_t budget);

}  // namespace hbkit

#endif  // HBKIT_CORPUS_HPP_
