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

#include "hbkit/helly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "hbkit/hyperbolicity.hpp"

namespace hbkit {
namespace {

int Middle(int a, int b, int c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

}  // namespace

PseudoModularCheck CheckPseudoModular(const DistanceMatrix& d) {
  const DiskTable disks(d);
  const Vertex n = d.size();
  PseudoModularCheck out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        // Radii at eccentricity give V and never fail, so stop below it. For
        // fixed p and q the smallest feasible r gives the smallest triple
        // intersection.
        for (int p = 0; p < d.ecc(u); ++p) {
          for (int q = std::max(0, d(u, v) - p); q < d.ecc(v); ++q) {
            const int r = std::max({0, d(u, w) - p, d(v, w) - q});
            if (r >= d.ecc(w)) continue;
            VertexBitset common = disks.disk(u, p);
            common &= disks.disk(v, q);
            if (!common.Intersects(disks.disk(w, r))) {
              out.holds = false;
              out.violation = {DiskConstraint{u, p}, DiskConstraint{v, q},
                               DiskConstraint{w, r}};
              return out;
            }
          }
        }
      }
    }
  }
  return out;
}

HellyCheck CheckHelly(const DistanceMatrix& d) {
  const DiskTable disks(d);
  const Vertex n = d.size();
  HellyCheck out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        VertexBitset common(static_cast<std::size_t>(n), true);
        bool empty = false;
        for (Vertex v = 0; v < n && !empty; ++v) {
          const int r = Middle(d(v, a), d(v, b), d(v, c));
          if (r >= d.ecc(v)) continue;
          common &= disks.disk(v, r);
          empty = common.none();
        }
        if (!empty) continue;
        out.holds = false;
        out.triple = {a, b, c};
        std::vector<DiskConstraint> family;
        for (Vertex v = 0; v < n; ++v) {
          const int r = Middle(d(v, a), d(v, b), d(v, c));
          if (r < d.ecc(v)) family.push_back({v, r});
        }
        // Drop members greedily while the rest still has empty intersection.
        for (std::size_t i = 0; i < family.size();) {
          VertexBitset rest(static_cast<std::size_t>(n), true);
          for (std::size_t j = 0; j < family.size(); ++j) {
            if (j != i) rest &= disks.disk(family[j].center, family[j].radius);
          }
          if (rest.none()) {
            family.erase(family.begin() + static_cast<std::ptrdiff_t>(i));
          } else {
            ++i;
          }
        }
        out.witness = std::move(family);
        return out;
      }
    }
  }
  return out;
}

bool HellyBruteForce(const DistanceMatrix& d, std::size_t max_disks) {
  const Vertex n = d.size();
  const std::size_t cap = std::min<std::size_t>(max_disks, 64);
  std::vector<VertexBitset> family;
  for (Vertex v = 0; v < n; ++v) {
    for (int r = 0; r < d.ecc(v); ++r) {
      VertexBitset disk(static_cast<std::size_t>(n));
      for (Vertex u = 0; u < n; ++u) {
        if (d(v, u) <= r) disk.set(u);
      }
      if (std::find(family.begin(), family.end(), disk) == family.end()) {
        family.push_back(std::move(disk));
      }
    }
  }
  if (family.size() > cap) {
    throw Error("helly brute force: " + std::to_string(family.size()) +
                " distinct disks exceed the cap of " + std::to_string(cap));
  }
  const std::size_t m = family.size();
  std::vector<std::uint64_t> meets(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && family[i].Intersects(family[j])) {
        meets[i] |= std::uint64_t{1} << j;
      }
    }
  }

  // Bron-Kerbosch with pivoting over the intersection graph of the disks.
  // Emptiness is inherited by supersets, so an empty partial intersection is
  // already a counterexample.
  bool helly = true;
  auto expand = [&](auto&& self, const VertexBitset& common, std::uint64_t cand,
                    std::uint64_t excl) -> void {
    if (!helly) return;
    if (common.none()) {
      helly = false;
      return;
    }
    if (cand == 0) return;
    std::uint64_t both = cand | excl;
    int pivot = std::countr_zero(both);
    int best = -1;
    for (std::uint64_t rest = both; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int c = std::popcount(cand & meets[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (std::uint64_t todo = cand & ~meets[pivot]; todo && helly;
         todo &= todo - 1) {
      const int v = std::countr_zero(todo);
      const std::uint64_t bit = std::uint64_t{1} << v;
      VertexBitset next = common;
      next &= family[v];
      self(self, next, cand & meets[v], excl & meets[v]);
      cand &= ~bit;
      excl |= bit;
    }
  };
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << m) - 1;
  expand(expand, VertexBitset(static_cast<std::size_t>(n), true), all, 0);
  return helly;
}

std::optional<Vertex> PickCommonVertex(const DistanceMatrix& d,
                                       std::span<const DiskConstraint> disks) {
  for (Vertex x = 0; x < d.size(); ++x) {
    bool inside = true;
    for (const auto& c : disks) {
      if (d(x, c.center) > c.radius) {
        inside = false;
        break;
      }
    }
    if (inside) return x;
  }
  return std::nullopt;
}

MedianResult FindMedian(const DistanceMatrix& d, Vertex x, Vertex y, Vertex z) {
  MedianResult out;
  out.product_x = GromovProduct(d, y, z, x);
  out.product_y = GromovProduct(d, x, z, y);
  out.product_z = GromovProduct(d, x, y, z);
  const Vertex n = d.size();
  if (out.product_z.is_integer()) {
    const int ax = static_cast<int>(out.product_x.Floor());
    const int ay = static_cast<int>(out.product_y.Floor());
    const int az = static_cast<int>(out.product_z.Floor());
    for (Vertex v = 0; v < n; ++v) {
      if (d(x, v) == ax && d(y, v) == ay && d(z, v) == az) {
        out.kind = MedianResult::Kind::kVertex;
        out.vertex = v;
        return out;
      }
    }
    throw Error("no median vertex for (" + std::to_string(x) + "," +
                std::to_string(y) + "," + std::to_string(z) +
                "); graph is not pseudo-modular");
  }
  // x' sits at floor((y|z)_x) from x and one step further on from y' and z'.
  const int fx = static_cast<int>(out.product_x.Floor());
  const int fy = static_cast<int>(out.product_y.Floor());
  const int fz = static_cast<int>(out.product_z.Floor());
  auto candidates = [&](Vertex self, int f_self, Vertex o1, int f1, Vertex o2,
                        int f2) {
    std::vector<Vertex> out_c;
    for (Vertex v = 0; v < n; ++v) {
      if (d(self, v) == f_self && d(o1, v) == f1 + 1 && d(o2, v) == f2 + 1) {
        out_c.push_back(v);
      }
    }
    return out_c;
  };
  const auto cx = candidates(x, fx, y, fy, z, fz);
  const auto cy = candidates(y, fy, x, fx, z, fz);
  const auto cz = candidates(z, fz, x, fx, y, fy);
  for (Vertex a : cx) {
    for (Vertex b : cy) {
      if (d(a, b) != 1) continue;
      for (Vertex c : cz) {
        if (d(a, c) == 1 && d(b, c) == 1) {
          out.kind = MedianResult::Kind::kTriangle;
          out.triangle = {a, b, c};
          return out;
        }
      }
    }
  }
  throw Error("no median triangle for (" + std::to_string(x) + "," +
              std::to_string(y) + "," + std::to_string(z) +
              "); graph is not pseudo-modular");
}

}  // namespace hbkit
