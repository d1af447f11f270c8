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

#ifndef HBKIT_HYPERBOLICITY_HPP_
#define HBKIT_HYPERBOLICITY_HPP_

#include <array>
#include <vector>

#include "hbkit/distance.hpp"
#include "hbkit/half_int.hpp"

namespace hbkit {

// (x|y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2.
inline HalfInt GromovProduct(const DistanceMatrix& d, Vertex x, Vertex y,
                             Vertex z) {
  return HalfInt::FromDoubled(d(x, z) + d(y, z) - d(x, y));
}

struct HyperbolicityWitness {
  std::array<Vertex, 4> quadruple{};
  // d(u,v)+d(w,x), d(u,w)+d(v,x), d(u,x)+d(v,w) for quadruple (u,v,w,x).
  std::array<int, 3> sums{};
  HalfInt delta;
};

// Half the gap between the two largest distance sums.
HyperbolicityWitness QuadrupleDelta(const DistanceMatrix& d, Vertex u, Vertex v,
                                    Vertex w, Vertex x);

struct HyperbolicityResult {
  HalfInt value;
  HyperbolicityWitness witness;
};

// Exact hyperbolicity by scanning vertex pairs in decreasing distance order.
// For a quadruple whose largest sum is d(a,b)+d(c,e) with d(c,e) >= d(a,b),
// twice its delta is at most d(a,b), so the scan stops once d(a,b) drops
// below the best doubled value found. The witness is the lexicographically
// smallest sorted quadruple attaining the maximum, independent of `threads`.
HyperbolicityResult Hyperbolicity(const DistanceMatrix& d, int threads = 1);

// Plain O(n^4) enumeration; test oracle and small-graph reference.
HalfInt HyperbolicityBruteForce(const DistanceMatrix& d);

// S_k(x,y): vertices z with d(x,z) = k and d(x,z) + d(z,y) = d(x,y), sorted.
// Throws Error unless 0 <= k <= d(x,y).
std::vector<Vertex> IntervalSlice(const DistanceMatrix& d, Vertex x, Vertex y,
                                  int k);

struct ThinnessWitness {
  Vertex x = 0;
  Vertex y = 0;
  int slice = 0;
  Vertex u = 0;
  Vertex v = 0;
  int distance = 0;
};

struct ThinnessResult {
  int tau = 0;
  ThinnessWitness witness;
};

// Largest distance between two vertices of a common slice of some interval.
// The witness is the first maximizer in (x, y, k, u, v) order with x < y.
ThinnessResult IntervalThinness(const DistanceMatrix& d);

}  // namespace hbkit

#endif  // HBKIT_HYPERBOLICITY_HPP_
