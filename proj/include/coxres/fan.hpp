#pragma once

#include <array>
#include <string>
#include <vector>

#include "coxres/kernel.hpp"
#include "coxres/resolution.hpp"

namespace coxres {

struct Ray {
  enum class Kind { Central, Branch, Outer };
  std::vector<Int> v;  // primitive vector in Z^3
  Kind kind = Kind::Central;
  int branch = -1;  // 0..2 for branch and outer rays
  long index = 0;   // position on the branch, 1..n_i (outer: n_i+1)

  std::string label() const;
};

// Labeled rays in the column order of K: central, then branch blocks, the
// last ray of each block being the outer ray.
struct RaySet {
  std::vector<Ray> rays;
  long branch_len[3] = {0, 0, 0};

  long count() const { return static_cast<long>(rays.size()); }
  long central() const { return 0; }
  // j = 0 is the central ray; j = branch_len+1 the outer ray.
  long at(int branch, long j) const;
  long outer(int branch) const { return at(branch, branch_len[branch] + 1); }
};

RaySet rays_from_K(const KernelMatrix& k);

struct Fan {
  RaySet rays;
  std::vector<std::array<long, 3>> cones;  // sorted ray-index triples
  bool validated = false;
};

struct FanDiagnostics {
  bool ok = true;
  std::vector<std::string> problems;
};

// Staircase triangulation covering the cone spanned by the outer rays.
Fan canonical_fan(const RaySet& rays);

// A fan in which rays rho_{i,j-1}, rho_{i,j}, rho_{i,j+1} all span 2-faces
// with the first rays of both other branches. The pivot must be an inner
// branch ray (1 <= j <= n_i).
Fan fan_with_pivot(const RaySet& rays, int branch, long j);

// Structural validation: simplicial cones, exact tiling of the outer cone
// in a rational cross-section, and the mandatory cones.
FanDiagnostics validate_fan(const Fan& fan);

struct SmoothnessReport {
  std::vector<Int> cone_dets;       // |det| per cone, in fan order
  bool central_cones_unimodular = true;
  bool branch_pairs_unimodular = true;
};
SmoothnessReport smooth_cone_check(const Fan& fan);

// Projections along the central ray of the cones containing it; a minimal
// resolution fan always gives the complete fan (1,0), (0,1), (-1,-1).
std::vector<std::array<Int, 2>> central_star_projection(const Fan& fan);
bool central_star_is_p2(const Fan& fan);

std::array<std::vector<Int>, 3> outer_rays_closed_form(const ResolutionInvariant& inv);
Rational positivity_check(const ResolutionInvariant& inv);

// Dual data of the cone spanned by the outer rays. The scaled duals
// ru[k] = r*u_k are integer rows; u_k pairs to 1 with the outer ray of the
// opposite block: ru[k] . o_l = r * delta_{k,3-l} (indices from 0).
struct OuterConeData {
  std::array<std::vector<Int>, 3> outer;
  IntMatrix ru;  // 3x3, row k = r*u_{k+1}
  Int r;
};
OuterConeData dual_characters(const ResolutionInvariant& inv);

// (r*u_1(v), r*u_2(v), r*u_3(v)) mod r.
std::array<Int, 3> action_weights(const std::vector<Int>& v, const OuterConeData& data);

struct QuotientGroupJ {
  std::vector<Int> factors;               // invariant factors > 1
  std::vector<std::vector<Int>> factor_generators;
  Int r;                                  // |J|
};
QuotientGroupJ cokernel_J(const std::array<std::vector<Int>, 3>& outer);

// One abelian action on three coordinates, given by exponent triples of a
// generating set (exponents of eps_r). Used to compare the J-action on
// (x1, x2, x3) with the Ab(G)-action on the sigma generators.
struct AbelianActionData {
  long r = 1;
  std::vector<std::array<long, 3>> generator_triples;
  std::vector<long> generator_orders;
};

struct ActionMatchResult {
  bool matched = false;
  std::string detail;
  // Per Ab generator: a J vector with the same weight triple, plus a
  // (basis vector, power) witness when one exists.
  std::vector<std::vector<Int>> matched_vectors;
  std::vector<std::string> witnesses;
};

// True iff the J-action and the given abelian action have the same image of
// weight triples, i.e. they coincide under an isomorphism J ~ Ab(G).
ActionMatchResult match_action_weights(const OuterConeData& data,
                                       const AbelianActionData& ab);

// Inverse of the ray recurrence: recovers d and the branch self-intersection
// entries from the rays alone.
struct RecoveredIntersections {
  Int d;
  std::vector<Int> branches[3];
};
RecoveredIntersections recover_intersections(const RaySet& rays);

// Hirzebruch index (gamma_i)_{j+1} of the divisor attached to rho_{i,j} in a
// pivot fan; for the third branch this is the first coordinate of the ray.
Int hirzebruch_index(const ResolutionInvariant& inv, int branch, long j);

}  // namespace coxres
