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

#ifndef HBKIT_EDGE_LIST_HPP_
#define HBKIT_EDGE_LIST_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "hbkit/graph.hpp"

namespace hbkit {

// Edge-list document: one "u v" pair of decimal ids per line; lines starting
// with '#' are comments. Comments of the form "# key value..." are kept as
// annotations (e.g. "# corner a=3", "# cell 7 1 2").
struct EdgeListDocument {
  Graph graph;
  std::vector<std::string> annotations;
};

// Parses a document; the vertex set is 0..max id. Throws Error on malformed
// lines, self-loops, or an empty edge set. With require_connected, also
// throws DisconnectedGraphError.
EdgeListDocument ParseEdgeList(std::string_view text,
                               bool require_connected = false);
EdgeListDocument ReadEdgeListFile(const std::string& path,
                                  bool require_connected = false);

// Writes annotations as '#' lines followed by the sorted edges.
std::string FormatEdgeList(const Graph& g,
                           const std::vector<std::string>& annotations = {});

}  // namespace hbkit

#endif  // HBKIT_EDGE_LIST_HPP_
