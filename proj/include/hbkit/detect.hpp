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

#ifndef HBKIT_DETECT_HPP_
#define HBKIT_DETECT_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hbkit/distance.hpp"
#include "hbkit/family.hpp"
#include "hbkit/graph.hpp"
#include "hbkit/half_int.hpp"
#include "hbkit/helly.hpp"

namespace hbkit {

// Four vertices (x, y, z, t) in cyclic order whose distances match the corner
// pattern of family^{k,l}, with x, y, z, t playing corners a, b, c, d.
struct ObstructionWitness {
  Family family = Family::kH1;
  int k = 0;
  int l = 0;
  std::array<Vertex, 4> corners{};
  std::optional<std::vector<Vertex>> materialized;
  // How the witness was classified, e.g. "exact pattern".
  std::string basis;
};

// Throws Error unless the graph behind d is Helly.
void RequireHelly(const DistanceMatrix& d);

// True when the witness corners realize PatternFor(w.family, w.k, w.l).
bool WitnessPatternHolds(const DistanceMatrix& d, const ObstructionWitness& w);

// The detectors below are exact corner-pattern scans. A returned witness
// always satisfies its distance pattern; on Helly graphs an empty result
// also certifies that no isometric copy exists.

// Sides k+1, diagonals 2k+2: the corners of an isometric H1^{k+1}.
std::optional<ObstructionWitness> DetectH1(const DistanceMatrix& d, int k);

// Sides k+1, d(x,z) = 2k+2 and d(y,t) in {2k+1, 2k+2}. The exact H2^k
// pattern is preferred; otherwise an H1^{k+1} quadruple is returned, which
// contains an isometric H2^k.
std::optional<ObstructionWitness> DetectH2(const DistanceMatrix& d, int k);

// Four vertices forming C4 in every power G^j, j in [k+1, 2k+1] or in
// [k+2, 2k+2]. Exact H1^{k+1} corners are searched first, then exact H3^k
// corners, then any other quadruple of the second window, tagged with the
// family its distance case certifies. On Helly graphs the third stage never
// fires.
std::optional<ObstructionWitness> DetectH1OrH3(const DistanceMatrix& d, int k);

class MaterializeError : public Error {
 public:
  MaterializeError(const std::string& what, std::vector<DiskConstraint> disks)
      : Error(what), disks_(std::move(disks)) {}
  const std::vector<DiskConstraint>& disks() const { return disks_; }

 private:
  std::vector<DiskConstraint> disks_;
};

// Extends the witness corners to an isometric copy of
// BuildObstruction(w.family, w.k, w.l). Each remaining template vertex p is
// imposed as a common vertex of the disks D(phi(q), d_T(p, q)) over the
// vertices q placed so far; those disks pairwise intersect, so on Helly
// graphs the pick succeeds. The map is 1-Lipschitz by construction and the
// template is the integral hull of its corners, which forces the map to be
// isometric; this is re-checked before returning. Result is indexed by
// template vertex. Throws MaterializeError with the failing disks.
std::vector<Vertex> Materialize(const DistanceMatrix& d,
                                const ObstructionWitness& w);

// Smallest threshold certified by obstruction search: hb <= k iff no H2^k,
// hb <= k + 1/2 iff neither H1^{k+1} nor H3^k. Thresholds are probed
// downward from ceil(diam/2). Requires a Helly graph.
struct ObstructionBound {
  HalfInt hb;
  // Obstruction found at threshold hb - 1/2, when hb > 0.
  std::optional<ObstructionWitness> witness;
};
ObstructionBound HbByObstructions(const DistanceMatrix& d);

// hb = tau/2 for even tau; for odd tau, (tau+1)/2 when the exact H3 corner
// pattern at k = floor(tau/2) occurs and tau/2 otherwise. Requires Helly.
struct ThinnessBound {
  HalfInt hb;
  int tau = 0;
  std::optional<ObstructionWitness> h3;
};
ThinnessBound HbByThinness(const DistanceMatrix& d);

// The four equivalent statements for hb <= 1/2 on Helly graphs:
// (i) hb <= 1/2; (ii) no isometric C4 and no isometric 4-sun;
// (iii) neither G nor G^2 has an induced C4; (iv) tau <= 1 and no isometric
// 4-sun. Requires Helly.
struct HalfHyperbolicStatements {
  bool hb_at_most_half = false;
  bool no_isometric_c4_or_sun = false;
  bool g_and_square_c4_free = false;
  bool thin_and_no_sun = false;

  bool consistent() const {
    return hb_at_most_half == no_isometric_c4_or_sun &&
           hb_at_most_half == g_and_square_c4_free &&
           hb_at_most_half == thin_and_no_sun;
  }
};
HalfHyperbolicStatements HalfHyperbolicEquivalents(const Graph& g,
                                                   const DistanceMatrix& d);

// The 4-sun: K4 with a degree-2 tip on four of its edges forming a cycle.
Graph SunGraph();

// Decides hb <= threshold from adjacency bitsets of the powers G^j:
//  integer k: no quadruple forming C4 in G^j for all j in [k+1, 2k] and a
//    diamond in G^{2k+1};
//  k + 1/2: no quadruple forming C4 in G^j for all j in [k+1, 2k+1], and
//    none for all j in [k+2, 2k+2].
// Requires Helly.
struct PowerCheck {
  bool holds = true;
  // On failure: (x, y, z, t) with sides xy, yz, zt, tx; for the diamond
  // case yt is the chord.
  std::array<Vertex, 4> quadruple{};
  int window_lo = 0;
  int window_hi = 0;
  bool diamond = false;
};
PowerCheck PowerCharacterization(const Graph& g, const DistanceMatrix& d,
                                 HalfInt threshold);

// All induced 4-cycles (x, y, z, t) with x the smallest vertex and y < t.
std::vector<std::array<Vertex, 4>> InducedFourCycles(const Graph& g);

}  // namespace hbkit

#endif  // HBKIT_DETECT_HPP_
