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

#ifndef HBKIT_FAMILY_HPP_
#define HBKIT_FAMILY_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hbkit/graph.hpp"
#include "hbkit/half_int.hpp"

namespace hbkit {

enum class Family { kH1, kH2, kH3 };

std::string FamilyName(Family f);  // "H1", "H2", "H3"
// Accepts "h1"/"H1" etc. Throws Error otherwise.
Family ParseFamily(const std::string& text);

// Required distances among the corners, in the order
// d(a,b), d(b,c), d(c,d), d(d,a), d(a,c), d(b,d).
struct CornerPattern {
  Family family = Family::kH1;
  int k = 0;
  int l = 0;
  std::array<int, 6> distances{};
};

CornerPattern PatternFor(Family family, int k, int l);

// Throws Error when (k, l) is out of range for the family.
void CheckFamilyParameters(Family family, int k, int l);

// An obstruction graph drawn inside a King-grid. Vertex ids follow the
// lexicographic order of the grid cells.
struct FamilyGraph {
  Family family = Family::kH1;
  int k = 0;
  int l = 0;
  Graph graph;
  std::array<Vertex, 4> corners{};  // a, b, c, d
  int host_p = 0;
  int host_q = 0;
  std::vector<std::pair<int, int>> cells;  // per vertex (row, column)

  Vertex HostId(Vertex v) const {
    return cells[v].first * host_q + cells[v].second;
  }
};

FamilyGraph BuildObstruction(Family family, int k, int l);
inline FamilyGraph BuildObstruction(Family family, int k) {
  return BuildObstruction(family, k, k);
}

// hb(H1^{k,l}) = min(k,l), hb(H2^{k,l}) = min(k,l) + 1/2,
// hb(H3^{k,l}) = min(k,l) + 1.
HalfInt ExpectedHyperbolicity(Family family, int k, int l);

struct FamilyReport {
  bool corner_pattern = false;
  bool helly = false;
  bool host_isometric = false;
  bool hb_matches = false;
  bool delta_on_corners = false;
  HalfInt hb;
  HalfInt expected_hb;
  std::vector<std::string> failures;

  bool ok() const {
    return corner_pattern && helly && host_isometric && hb_matches &&
           delta_on_corners;
  }
};

// Recomputes everything from f.graph, so a tampered graph fails here.
FamilyReport ValidateFamily(const FamilyGraph& f);

// Edge-list annotations: corner names and grid cells.
std::vector<std::string> FamilyAnnotations(const FamilyGraph& f);

}  // namespace hbkit

#endif  // HBKIT_FAMILY_HPP_
