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
#include "hbkit/corpus.hpp"
#include "hbkit/detect.hpp"
#include "hbkit/family.hpp"
#include "hbkit/helly.hpp"
#include "hbkit/hyperbolicity.hpp"
#include "oracles.hpp"

namespace hbkit {
namespace {

DistanceMatrix D(const Graph& g) { return DistanceMatrix::Compute(g); }

TEST(GromovProduct, Examples) {
  const auto p = D(PathGraph(3));
  EXPECT_EQ(GromovProduct(p, 0, 2, 1), HalfInt::FromInt(0));
  const auto k3 = D(CompleteGraph(3));
  EXPECT_EQ(GromovProduct(k3, 0, 1, 2), HalfInt::FromDoubled(1));
  const auto c7 = D(CycleGraph(7));
  EXPECT_EQ(GromovProduct(c7, 2, 2, 5), HalfInt::FromInt(c7(2, 5)));
}

TEST(QuadrupleDelta, Examples) {
  const auto c4 = D(CycleGraph(4));
  const auto w = QuadrupleDelta(c4, 0, 1, 2, 3);
  EXPECT_EQ(w.sums, (std::array<int, 3>{2, 4, 2}));
  EXPECT_EQ(w.delta, HalfInt::FromInt(1));
  EXPECT_EQ(QuadrupleDelta(c4, 0, 0, 0, 0).delta, HalfInt::FromInt(0));
  // A repeated vertex makes two sums equal.
  EXPECT_EQ(QuadrupleDelta(c4, 0, 0, 1, 2).delta, HalfInt::FromInt(0));
  const FamilyGraph h2 = BuildObstruction(Family::kH2, 1);
  const auto& c = h2.corners;
  const auto hw = QuadrupleDelta(D(h2.graph), c[0], c[1], c[2], c[3]);
  EXPECT_EQ(hw.delta, HalfInt::FromDoubled(3));
}

TEST(Hyperbolicity, ZeroOnTreesAndBlockGraphs) {
  for (std::uint64_t s = 1; s <= 10; ++s) {
    EXPECT_EQ(Hyperbolicity(D(RandomConnectedGraph(20, 0.0, s))).value,
              HalfInt::FromInt(0));
  }
  const std::vector<Edge> blocks{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4},
                                 {2, 4}, {4, 5}, {5, 6}, {4, 6}, {5, 7}};
  EXPECT_EQ(Hyperbolicity(D(Graph::FromEdges(8, blocks))).value,
            HalfInt::FromInt(0));
  EXPECT_EQ(Hyperbolicity(D(CompleteGraph(6))).value, HalfInt::FromInt(0));
}

TEST(Hyperbolicity, OddCyclesMeasured) {
  // Measured by the scan and by the oracle: hb(C_{4k+1}) = k - 1/2.
  for (int k = 1; k <= 3; ++k) {
    const Graph c = CycleGraph(4 * k + 1);
    const auto r = Hyperbolicity(D(c));
    EXPECT_EQ(r.value.doubled(), 2 * k - 1);
    EXPECT_EQ(r.value.doubled(), oracle::TwiceHyperbolicity(oracle::Floyd(c)));
    EXPECT_EQ(IntervalThinness(D(c)).tau, 0);
  }
}

TEST(Hyperbolicity, KingGrid3x3) {
  const Graph g = KingGrid(3, 3);
  EXPECT_EQ(oracle::TwiceHyperbolicity(oracle::Floyd(g)), 2);
  EXPECT_EQ(Hyperbolicity(D(g)).value, HalfInt::FromInt(1));
}

TEST(Hyperbolicity, MatchesOracleAndBruteForce) {
  std::vector<Graph> graphs = ConnectedGraphs(6);
  for (std::uint64_t s = 1; s <= 40; ++s) {
    graphs.push_back(RandomConnectedGraph(8 + static_cast<int>(s % 7),
                                          0.05 * static_cast<double>(s % 6),
                                          s));
  }
  for (const Graph& g : graphs) {
    const auto d = D(g);
    const int want = oracle::TwiceHyperbolicity(oracle::Floyd(g));
    const auto r = Hyperbolicity(d);
    ASSERT_EQ(r.value.doubled(), want);
    EXPECT_EQ(HyperbolicityBruteForce(d).doubled(), want);
    const auto& q = r.witness.quadruple;
    EXPECT_EQ(QuadrupleDelta(d, q[0], q[1], q[2], q[3]).delta, r.value);
  }
}

// Smallest sorted quadruple attaining the maximum, by enumeration.
std::array<Vertex, 4> LexSmallestMaximizer(const DistanceMatrix& d) {
  const Vertex n = d.size();
  const HalfInt best = HyperbolicityBruteForce(d);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex e = c + 1; e < n; ++e)
          if (QuadrupleDelta(d, a, b, c, e).delta == best) return {a, b, c, e};
  return {};
}

TEST(Hyperbolicity, WitnessIsLexSmallestAndThreadIndependent) {
  for (std::uint64_t s = 1; s <= 25; ++s) {
    const auto d = D(RandomConnectedGraph(14, 0.15, s));
    const auto one = Hyperbolicity(d, 1);
    EXPECT_EQ(one.witness.quadruple, LexSmallestMaximizer(d));
    for (int t : {2, 3, 4}) {
      const auto many = Hyperbolicity(d, t);
      EXPECT_EQ(many.value, one.value);
      EXPECT_EQ(many.witness.quadruple, one.witness.quadruple);
    }
  }
}

TEST(Hyperbolicity, InvariantUnderRelabelling) {
  for (std::uint64_t s = 1; s <= 15; ++s) {
    const Graph g = RandomConnectedGraph(16, 0.12, s);
    std::vector<Vertex> perm;
    const Graph h = oracle::RandomRelabel(g, s * 7, &perm);
    const auto dg = D(g);
    const auto dh = D(h);
    const auto rg = Hyperbolicity(dg);
    EXPECT_EQ(Hyperbolicity(dh).value, rg.value);
    const auto& q = rg.witness.quadruple;
    EXPECT_EQ(QuadrupleDelta(dh, perm[q[0]], perm[q[1]], perm[q[2]], perm[q[3]])
                  .delta,
              rg.value);
  }
}

TEST(Hyperbolicity, SmallInputs) {
  EXPECT_EQ(Hyperbolicity(D(CompleteGraph(1))).value, HalfInt::FromInt(0));
  EXPECT_EQ(Hyperbolicity(D(PathGraph(3))).value, HalfInt::FromInt(0));
}

TEST(Slices, Examples) {
  const auto d = D(PathGraph(5));
  EXPECT_EQ(IntervalSlice(d, 0, 4, 0), std::vector<Vertex>{0});
  EXPECT_EQ(IntervalSlice(d, 0, 4, 4), std::vector<Vertex>{4});
  EXPECT_THROW(IntervalSlice(d, 0, 4, 5), Error);
  EXPECT_THROW(IntervalSlice(d, 0, 4, -1), Error);
  const auto c4 = D(CycleGraph(4));
  EXPECT_EQ(IntervalSlice(c4, 0, 2, 1), (std::vector<Vertex>{1, 3}));
  const auto k = D(KingGrid(3, 3));
  EXPECT_EQ(IntervalSlice(k, KingCell(3, 0, 1), KingCell(3, 2, 1), 1),
            (std::vector<Vertex>{KingCell(3, 1, 0), KingCell(3, 1, 1),
                                 KingCell(3, 1, 2)}));
}

TEST(Thinness, Examples) {
  EXPECT_EQ(IntervalThinness(D(CycleGraph(9))).tau, 0);
  EXPECT_EQ(IntervalThinness(D(CycleGraph(4))).tau, 2);
  const auto k = D(KingGrid(3, 3));
  const auto t = IntervalThinness(k);
  EXPECT_EQ(t.tau, 2);
  EXPECT_EQ(t.witness.x, KingCell(3, 0, 1));
  EXPECT_EQ(t.witness.y, KingCell(3, 2, 1));
  EXPECT_EQ(t.witness.slice, 1);
  EXPECT_EQ(IntervalSlice(k, t.witness.x, t.witness.y, 1),
            (std::vector<Vertex>{KingCell(3, 1, 0), KingCell(3, 1, 1),
                                 KingCell(3, 1, 2)}));
}

TEST(Thinness, MatchesOracleAndLowerBoundsTwiceHb) {
  std::vector<Graph> graphs = ConnectedGraphs(6);
  for (std::uint64_t s = 1; s <= 60; ++s) {
    graphs.push_back(RandomConnectedGraph(6 + static_cast<int>(s % 10),
                                          0.04 * static_cast<double>(s % 8),
                                          s));
  }
  for (const Graph& g : graphs) {
    const auto d = D(g);
    const auto f = oracle::Floyd(g);
    const auto t = IntervalThinness(d);
    ASSERT_EQ(t.tau, oracle::Thinness(f));
    EXPECT_LE(t.tau, Hyperbolicity(d).value.doubled());
    if (t.tau > 0) {
      const auto s = IntervalSlice(d, t.witness.x, t.witness.y, t.witness.slice);
      EXPECT_TRUE(std::binary_search(s.begin(), s.end(), t.witness.u));
      EXPECT_TRUE(std::binary_search(s.begin(), s.end(), t.witness.v));
      EXPECT_EQ(d(t.witness.u, t.witness.v), t.tau);
    }
  }
}

TEST(Thinness, WindowAndParityOnHellyGraphs) {
  std::vector<Graph> graphs;
  for (const Graph& g : ConnectedGraphs(7)) graphs.push_back(g);
  for (int p = 1; p <= 5; ++p) graphs.push_back(KingGrid(p, 5));
  for (const Graph& g : graphs) {
    const auto d = D(g);
    if (!IsHelly(d)) continue;
    const int tau = IntervalThinness(d).tau;
    const int two_hb = Hyperbolicity(d).value.doubled();
    EXPECT_TRUE(two_hb == tau || two_hb == tau + 1);
    if (tau % 2 == 0) EXPECT_EQ(two_hb, tau);
  }
}

}  // namespace
}  // namespace hbkit
