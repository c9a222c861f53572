#pragma once

#include <cstdint>
#include <string>

#include "gridagg/region.h"
#include "gridagg/sampling.h"

namespace gridagg {

// Affine image condition tying a candidate boundary point y to the region's
// internal variables: y is covered iff some x with F x <= f has P x + q = y.
// Full-space searches use (C, d); tie-line subspace searches use the selected
// rows (S_i C, S_i d).
struct PreimageMap {
  Mat P;
  Vec q;

  int dim() const { return static_cast<int>(q.size()); }
};

// L1 distance from y to the image {P x + q | F x <= f}. Zero iff covered.
double preimage_infeasibility(const PreimageMap& map, const FeasibleRegionHD& region,
                              const Vec& y);

// Residuals for a batch of targets; solves stay warm within each worker and
// results are positional, so the output is independent of `jobs` (0 = all
// cores).
Vec preimage_residuals(const PreimageMap& map, const FeasibleRegionHD& region,
                       const std::vector<Vec>& targets, int jobs = 0);

// Euclidean projection of y onto the image set (one convex QP). Fills
// `x_int_out` with the witnessing internal vector when non-null.
Vec nearest_covered_point(const PreimageMap& map, const FeasibleRegionHD& region, const Vec& y,
                          Vec* x_int_out = nullptr);

enum class UncoveredStatus { none, found, inconclusive };

const char* to_string(UncoveredStatus s);

struct UncoveredSearchOptions {
  double tol = 1e-7;          // minimum preimage residual that counts as uncovered
  int probes = 48;            // support-direction probes before the heavier phases
  double time_limit = 240.0;  // exact-search budget, seconds
  int cut_rounds = 60;        // tangent refinements standing in for ellipsoidal parts
  double dual_cap = 1e4;      // bound on inner-problem row multipliers (see note below)
  std::uint64_t seed = 0;
  bool skip_exact = false;    // stop after the certificate phase (probe-only callers)
};

// `method` names the deciding phase:
//   "probe"    a support-direction candidate failed its preimage solve
//   "recourse" an affine feasibility policy covers the whole body (proof)
//   "exact"    mixed-integer search over the inner problem's optimality system
struct UncoveredResult {
  UncoveredStatus status = UncoveredStatus::inconclusive;
  Vec y;                       // the uncovered point when found
  double infeasibility = 0.0;  // exact preimage residual at y when found
  std::string method;
  std::string note;            // inconclusive reason or anomaly record
};

// Decides whether `body` is contained in the image {P x + q | F x <= f}.
//
// Phase order: cheap support probes (each candidate validated by an exact
// residual solve), then an affine-recourse containment certificate (a
// sufficient condition: one policy x(y) = W y + w feasible for every y in the
// body; its robust rows split exactly over the body's polytope and ellipsoid
// parts), then an exact search that maximizes the preimage L1 residual over
// the body using the inner problem's optimality conditions with binary
// complementarity. Ellipsoidal body parts enter the exact search through an
// outer tangent pool refined until the maximizer satisfies them.
//
// "found" always carries a validated point. "none" from the exact phase
// depends on `dual_cap` truncating no optimal multiplier; the cap is generous
// for MW/rad-scaled rows and a violation would surface in the downstream
// sampling checks, but unlike the recourse certificate it is not a proof.
UncoveredResult find_uncovered_point(const ConvexBody& body, const PreimageMap& map,
                                     const FeasibleRegionHD& region,
                                     const UncoveredSearchOptions& opts = {});

}  // namespace gridagg
