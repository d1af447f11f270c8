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

#include "hbkit/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "hbkit/distance.hpp"
#include "hbkit/helly.hpp"
#include "hbkit/hyperbolicity.hpp"

namespace hbkit {
namespace {

using Point = std::pair<int, int>;  // (x, y) with the L-infinity metric

int Chebyshev(Point a, Point b) {
  return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
}

// Lattice points of the diamond 0 <= x+y <= 2k, 0 <= x-y <= 2l. Its corners
// (k,k), (k+l,k-l), (l,-l), (0,0) are pairwise at distances l, k, l, k with
// both diagonals k+l.
void AddDiamond(std::set<Point>& pts, int k, int l) {
  for (int x = 0; x <= k + l; ++x) {
    for (int y = -l; y <= k; ++y) {
      if (x + y >= 0 && x + y <= 2 * k && x - y >= 0 && x - y <= 2 * l) {
        pts.insert({x, y});
      }
    }
  }
}

// The diamond plus two unit strips along the sides meeting at (0,0): pushing
// corner a up one step and corner c down one step stretches a-c to k+l+2 and
// leaves b-d at k+l+1.
void AddSecond(std::set<Point>& pts, int k, int l) {
  AddDiamond(pts, k, l);
  for (int j = 0; j <= k + 1; ++j) pts.insert({j - 1, j});
  for (int j = 0; j <= l + 1; ++j) pts.insert({j - 1, -j});
}

struct Shape {
  std::set<Point> points;
  std::array<Point, 4> corners;
};

Shape MakeShape(Family family, int k, int l) {
  Shape s;
  switch (family) {
    case Family::kH1:
      AddDiamond(s.points, k, l);
      s.corners = {Point{k, k}, Point{k + l, k - l}, Point{l, -l}, Point{0, 0}};
      break;
    case Family::kH2:
      AddSecond(s.points, k, l);
      s.corners = {Point{k, k + 1}, Point{k + l, k - l}, Point{l, -l - 1},
                   Point{-1, 0}};
      break;
    case Family::kH3:
      AddSecond(s.points, k, l);
      // A third layer wrapping the two remaining sides, then the four tips.
      for (int i = 1; i <= k + 1; ++i) s.points.insert({i - 2, i});
      for (int i = 1; i <= l; ++i) s.points.insert({k + l - i + 1, k - l + i});
      s.corners = {Point{-2, 0}, Point{l, -l - 1}, Point{k + l + 1, k - l + 1},
                   Point{k - 1, k + 2}};
      for (const auto& c : s.corners) s.points.insert(c);
      break;
  }
  return s;
}

}  // namespace

std::string FamilyName(Family f) {
  switch (f) {
    case Family::kH1:
      return "H1";
    case Family::kH2:
      return "H2";
    case Family::kH3:
      return "H3";
  }
  return "?";
}

Family ParseFamily(const std::string& text) {
  if (text == "h1" || text == "H1") return Family::kH1;
  if (text == "h2" || text == "H2") return Family::kH2;
  if (text == "h3" || text == "H3") return Family::kH3;
  throw Error("unknown obstruction family '" + text + "'");
}

CornerPattern PatternFor(Family family, int k, int l) {
  CornerPattern p{family, k, l, {}};
  switch (family) {
    case Family::kH1:
      p.distances = {l, k, l, k, k + l, k + l};
      break;
    case Family::kH2:
      p.distances = {l + 1, k + 1, l + 1, k + 1, k + l + 2, k + l + 1};
      break;
    case Family::kH3:
      p.distances = {l + 2, k + 2, l + 2, k + 2, k + l + 3, k + l + 3};
      break;
  }
  return p;
}

void CheckFamilyParameters(Family family, int k, int l) {
  const int low = family == Family::kH1 ? 1 : 0;
  if (k < low || l < low) {
    throw Error(FamilyName(family) + " needs k, l >= " + std::to_string(low) +
                ", got k=" + std::to_string(k) + " l=" + std::to_string(l));
  }
}

FamilyGraph BuildObstruction(Family family, int k, int l) {
  CheckFamilyParameters(family, k, l);
  const Shape shape = MakeShape(family, k, l);
  int min_x = shape.points.begin()->first, max_x = min_x;
  int min_y = shape.points.begin()->second, max_y = min_y;
  for (const auto& [x, y] : shape.points) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  FamilyGraph f;
  f.family = family;
  f.k = k;
  f.l = l;
  f.host_p = max_x - min_x + 1;
  f.host_q = max_y - min_y + 1;
  std::vector<Point> pts(shape.points.begin(), shape.points.end());
  std::map<Point, Vertex> id;
  for (const auto& p : pts) {
    const Vertex v = static_cast<Vertex>(f.cells.size());
    id[p] = v;
    f.cells.emplace_back(p.first - min_x, p.second - min_y);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (Chebyshev(pts[i], pts[j]) == 1) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  f.graph = Graph::FromEdges(static_cast<Vertex>(pts.size()), edges,
                             FamilyName(family) + "^{" + std::to_string(k) +
                                 "," + std::to_string(l) + "}");
  for (int i = 0; i < 4; ++i) f.corners[i] = id.at(shape.corners[i]);
  return f;
}

HalfInt ExpectedHyperbolicity(Family family, int k, int l) {
  const int m = std::min(k, l);
  switch (family) {
    case Family::kH1:
      return HalfInt::FromInt(m);
    case Family::kH2:
      return HalfInt::FromDoubled(2 * m + 1);
    case Family::kH3:
      return HalfInt::FromInt(m + 1);
  }
  return {};
}

FamilyReport ValidateFamily(const FamilyGraph& f) {
  FamilyReport r;
  r.expected_hb = ExpectedHyperbolicity(f.family, f.k, f.l);
  DistanceMatrix d;
  try {
    d = DistanceMatrix::Compute(f.graph);
  } catch (const DisconnectedGraphError&) {
    r.failures.push_back("graph is disconnected");
    return r;
  }
  const auto& c = f.corners;
  const auto want = PatternFor(f.family, f.k, f.l).distances;
  const std::array<std::pair<int, int>, 6> pairs{
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}};
  r.corner_pattern = true;
  for (int i = 0; i < 6; ++i) {
    const int got = d(c[pairs[i].first], c[pairs[i].second]);
    if (got != want[i]) {
      r.corner_pattern = false;
      r.failures.push_back("corner pair " + std::to_string(pairs[i].first) +
                           "-" + std::to_string(pairs[i].second) +
                           " at distance " + std::to_string(got) +
                           ", expected " + std::to_string(want[i]));
    }
  }
  const HellyCheck helly = CheckHelly(d);
  r.helly = helly.holds;
  if (!r.helly) {
    r.failures.push_back("not Helly at triple " +
                         std::to_string(helly.triple[0]) + "," +
                         std::to_string(helly.triple[1]) + "," +
                         std::to_string(helly.triple[2]));
  }
  r.host_isometric = true;
  for (Vertex u = 0; u < d.size() && r.host_isometric; ++u) {
    for (Vertex v = u + 1; v < d.size(); ++v) {
      const int grid = std::max(std::abs(f.cells[u].first - f.cells[v].first),
                                std::abs(f.cells[u].second - f.cells[v].second));
      if (grid != d(u, v)) {
        r.host_isometric = false;
        r.failures.push_back("pair " + std::to_string(u) + "," +
                             std::to_string(v) + " at distance " +
                             std::to_string(d(u, v)) + " but " +
                             std::to_string(grid) + " in the host grid");
        break;
      }
    }
  }
  r.hb = Hyperbolicity(d).value;
  r.hb_matches = r.hb == r.expected_hb;
  if (!r.hb_matches) {
    r.failures.push_back("hb " + r.hb.ToString() + ", expected " +
                         r.expected_hb.ToString());
  }
  const HalfInt corner_delta = QuadrupleDelta(d, c[0], c[1], c[2], c[3]).delta;
  r.delta_on_corners = corner_delta == r.hb;
  if (!r.delta_on_corners) {
    r.failures.push_back("corner quadruple gives " + corner_delta.ToString() +
                         ", hb is " + r.hb.ToString());
  }
  return r;
}

std::vector<std::string> FamilyAnnotations(const FamilyGraph& f) {
  std::vector<std::string> out;
  out.push_back("family " + FamilyName(f.family) + " k=" + std::to_string(f.k) +
                " l=" + std::to_string(f.l));
  out.push_back("host king_grid " + std::to_string(f.host_p) + " " +
                std::to_string(f.host_q));
  const char* names = "abcd";
  for (int i = 0; i < 4; ++i) {
    out.push_back(std::string("corner ") + names[i] + "=" +
                  std::to_string(f.corners[i]));
  }
  for (Vertex v = 0; v < f.graph.num_vertices(); ++v) {
    out.push_back("cell " + std::to_string(v) + "=(" +
                  std::to_string(f.cells[v].first) + "," +
                  std::to_string(f.cells[v].second) + ")");
  }
  return out;
}

}  // namespace hbkit
