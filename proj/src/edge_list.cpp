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

#include "hbkit/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hbkit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

Vertex ParseId(std::string_view token, int line_no) {
  Vertex value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw Error("line " + std::to_string(line_no) + ": '" + std::string(token) +
                "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

EdgeListDocument ParseEdgeList(std::string_view text, bool require_connected) {
  EdgeListDocument doc;
  std::vector<Edge> edges;
  Vertex max_id = -1;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = Trim(line.substr(1));
      if (!body.empty()) doc.annotations.emplace_back(body);
      continue;
    }
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto b = line.find_first_not_of(" \t", pos);
      if (b == std::string_view::npos) break;
      auto e = line.find_first_of(" \t", b);
      if (e == std::string_view::npos) e = line.size();
      tokens.push_back(line.substr(b, e - b));
      pos = e;
    }
    if (tokens.size() != 2) {
      throw Error("line " + std::to_string(line_no) +
                  ": expected two vertex ids");
    }
    const Vertex u = ParseId(tokens[0], line_no);
    const Vertex v = ParseId(tokens[1], line_no);
    if (u == v) {
      throw Error("line " + std::to_string(line_no) + ": self-loop at " +
                  std::to_string(u));
    }
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  if (edges.empty()) throw Error("edge list has no edges");
  doc.graph = Graph::FromEdges(max_id + 1, edges);
  if (require_connected) RequireConnected(doc.graph);
  return doc;
}

EdgeListDocument ReadEdgeListFile(const std::string& path,
                                  bool require_connected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  EdgeListDocument doc = ParseEdgeList(buf.str(), require_connected);
  doc.graph.set_name(path);
  return doc;
}

std::string FormatEdgeList(const Graph& g,
                           const std::vector<std::string>& annotations) {
  std::ostringstream out;
  for (const auto& a : annotations) out << "# " << a << '\n';
  for (const auto& [u, v] : g.Edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace hbkit
