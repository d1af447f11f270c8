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

#include <gtest/gtest.h>

#include "hbkit/constructions.hpp"
#include "hbkit/detect.hpp"
#include "hbkit/family.hpp"
#include "hbkit/hull.hpp"
#include "hbkit/hyperbolicity.hpp"
#include "hbkit/isometry.hpp"

namespace hbkit {
namespace {

DistanceMatrix D(const Graph& g) { return DistanceMatrix::Compute(g); }

struct Params {
  Family family;
  int k;
  int l;
};

std::vector<Params> AllSmall() {
  std::vector<Params> out;
  for (Family f : {Family::kH1, Family::kH2, Family::kH3})
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l)
        if (f != Family::kH1 || (k >= 1 && l >= 1)) out.push_back({f, k, l});
  return out;
}

TEST(Family, EveryGeneratedGraphValidates) {
  for (const auto& p : AllSmall()) {
    const FamilyGraph f = BuildObstruction(p.family, p.k, p.l);
    const FamilyReport r = ValidateFamily(f);
    EXPECT_TRUE(r.ok()) << f.graph.name() << ": "
                        << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_EQ(r.hb, ExpectedHyperbolicity(p.family, p.k, p.l));
  }
}

TEST(Family, SymmetricHyperbolicity) {
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(ValidateFamily(BuildObstruction(Family::kH1, k)).hb,
              HalfInt::FromInt(k));
  }
  for (int k = 0; k <= 2; ++k) {
    EXPECT_EQ(ValidateFamily(BuildObstruction(Family::kH2, k)).hb,
              HalfInt::FromDoubled(2 * k + 1));
    EXPECT_EQ(ValidateFamily(BuildObstruction(Family::kH3, k)).hb,
              HalfInt::FromInt(k + 1));
  }
}

TEST(Family, SmallMembers) {
  EXPECT_TRUE(AreIsomorphic(BuildObstruction(Family::kH3, 0).graph, SunGraph()));
  EXPECT_TRUE(AreIsomorphic(BuildObstruction(Family::kH2, 0).graph,
                            DiamondGraph()));
  // H1^1 is C4 with a centre; the rim is an isometric C4.
  const Graph w4 = BuildObstruction(Family::kH1, 1).graph;
  EXPECT_EQ(w4.num_vertices(), 5);
  EXPECT_EQ(w4.num_edges(), 8);
  EXPECT_TRUE(FindIsometricEmbedding(CycleGraph(4), w4).has_value());
  EXPECT_EQ(BuildObstruction(Family::kH2, 2).graph.num_vertices(), 20);
}

TEST(Family, VertexCountsFrozen) {
  // Measured from the generators; guards against accidental shape changes.
  const int h1[] = {5, 13, 25};
  const int h2[] = {4, 10, 20};
  const int h3[] = {8, 16, 28};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(BuildObstruction(Family::kH1, i + 1).graph.num_vertices(), h1[i]);
    EXPECT_EQ(BuildObstruction(Family::kH2, i).graph.num_vertices(), h2[i]);
    EXPECT_EQ(BuildObstruction(Family::kH3, i).graph.num_vertices(), h3[i]);
  }
}

TEST(Family, ThinnessWithinWindow) {
  // Measured goldens; only the window is a theorem.
  struct Golden {
    Family f;
    int k;
    int tau;
  };
  const Golden goldens[] = {{Family::kH1, 1, 2}, {Family::kH1, 2, 4},
                            {Family::kH1, 3, 6}, {Family::kH2, 0, 1},
                            {Family::kH2, 1, 3}, {Family::kH2, 2, 5},
                            {Family::kH3, 0, 1}, {Family::kH3, 1, 3},
                            {Family::kH3, 2, 5}};
  for (const auto& g : goldens) {
    const FamilyGraph f = BuildObstruction(g.f, g.k);
    const auto d = D(f.graph);
    const int tau = IntervalThinness(d).tau;
    const int two_hb = Hyperbolicity(d).value.doubled();
    EXPECT_EQ(tau, g.tau) << f.graph.name();
    EXPECT_TRUE(tau == two_hb || tau + 1 == two_hb);
  }
}

TEST(Family, CornerPatterns) {
  EXPECT_EQ(PatternFor(Family::kH1, 2, 3).distances,
            (std::array<int, 6>{3, 2, 3, 2, 5, 5}));
  EXPECT_EQ(PatternFor(Family::kH2, 1, 1).distances,
            (std::array<int, 6>{2, 2, 2, 2, 4, 3}));
  EXPECT_EQ(PatternFor(Family::kH3, 0, 0).distances,
            (std::array<int, 6>{2, 2, 2, 2, 3, 3}));
}

TEST(Family, ParameterValidation) {
  EXPECT_THROW(BuildObstruction(Family::kH1, 0, 1), Error);
  EXPECT_THROW(BuildObstruction(Family::kH2, -1, 0), Error);
  EXPECT_NO_THROW(BuildObstruction(Family::kH3, 0, 0));
  EXPECT_THROW(ParseFamily("h4"), Error);
  EXPECT_EQ(ParseFamily("H2"), Family::kH2);
}

TEST(Family, DeletingAnEdgeBreaksValidation) {
  for (const auto& p : AllSmall()) {
    const FamilyGraph f = BuildObstruction(p.family, p.k, p.l);
    const auto edges = f.graph.Edges();
    for (std::size_t i = 0; i < edges.size(); i += 3) {
      FamilyGraph bad = f;
      std::vector<Edge> kept = edges;
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
      bad.graph = Graph::FromEdges(f.graph.num_vertices(), kept);
      const FamilyReport r = ValidateFamily(bad);
      EXPECT_FALSE(r.ok());
      EXPECT_FALSE(r.host_isometric && r.helly);
    }
  }
}

TEST(Family, HostEmbeddingIsIsometricInTheGrid) {
  for (const auto& p : AllSmall()) {
    const FamilyGraph f = BuildObstruction(p.family, p.k, p.l);
    const Graph host = KingGrid(f.host_p, f.host_q);
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < f.graph.num_vertices(); ++v) ids.push_back(f.HostId(v));
    EXPECT_TRUE(CheckIsometric(host, ids).isometric);
    EXPECT_EQ(Induce(host, ids).graph, f.graph);
  }
}

TEST(Family, EachFamilyIsTheHullOfItsCorners) {
  for (const auto& p : AllSmall()) {
    const FamilyGraph f = BuildObstruction(p.family, p.k, p.l);
    const auto d = D(f.graph);
    std::vector<int> metric(16);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        metric[i * 4 + j] = d(f.corners[i], f.corners[j]);
    EXPECT_EQ(ExtremalFunctionsOfMetric(metric, 4).size(),
              static_cast<std::size_t>(f.graph.num_vertices()))
        << f.graph.name();
  }
}

bool Contains(const Graph& big, const Graph& small) {
  return FindIsometricEmbedding(small, big).has_value();
}

TEST(Family, ContainmentChain) {
  for (int m = 1; m <= 2; ++m) {
    const Graph h1 = BuildObstruction(Family::kH1, m).graph;
    const Graph h2 = BuildObstruction(Family::kH2, m).graph;
    const Graph h3 = BuildObstruction(Family::kH3, m).graph;
    const Graph h1n = BuildObstruction(Family::kH1, m + 1).graph;
    EXPECT_TRUE(Contains(h2, h1));
    EXPECT_TRUE(Contains(h3, h2));
    EXPECT_TRUE(Contains(h1n, h2));
    EXPECT_TRUE(Contains(h1n, h1));
  }
  EXPECT_TRUE(Contains(BuildObstruction(Family::kH3, 1).graph,
                       BuildObstruction(Family::kH3, 0).graph));
}

TEST(Family, AnnotationsNameCornersAndCells) {
  const FamilyGraph f = BuildObstruction(Family::kH3, 0);
  const auto notes = FamilyAnnotations(f);
  EXPECT_EQ(notes[0], "family H3 k=0 l=0");
  EXPECT_EQ(notes[2], "corner a=" + std::to_string(f.corners[0]));
  EXPECT_EQ(notes.size(), 6u + 8u);
}

}  // namespace
}  // namespace hbkit
