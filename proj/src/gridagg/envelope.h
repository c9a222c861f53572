#pragma once

#include <cstdint>
#include <string>

#include "gridagg/ellipsoid.h"
#include "gridagg/polytope.h"
#include "gridagg/region.h"

namespace gridagg {

// Power and ramp window of one tie line across the horizon. The polytope
// rows follow a fixed order so shrink updates can address bounds by row:
//   [+p_t (t=0..T-1); -p_t; +ramp_t (t=0..T-2); -ramp_t]
// with ramp_t = (p_{t+1} - p_t) / dt in MW/h. T = 1 carries no ramp rows;
// a box-only window (the cubic baseline) leaves the ramp vectors empty.
struct GeneratorEnvelope {
  std::string tie_id;
  int tie_index = 0;  // position in the boundary layout
  double dt = 1.0;    // hours per slot
  Vec p_lo, p_hi;     // MW, size T
  Vec r_lo, r_hi;     // MW/h, size T-1 or empty
  bool verified = false;
  int shrink_iters = 0;
  std::string note;   // set when a shrink run stops short of verification

  int T() const { return static_cast<int>(p_lo.size()); }
  int ramp_rows() const { return static_cast<int>(r_lo.size()); }
  int rows() const { return 2 * T() + 2 * ramp_rows(); }

  HPolytope polytope() const;
  Vec b_tie() const;                // [p_hi; -p_lo; r_hi; -r_lo]
  void set_b_tie(const Vec& b);     // inverse of b_tie(); rejects crossed bounds

  Json to_json() const;
  static GeneratorEnvelope from_json(const Json& j, const std::string& path);
};

// Cross-tie coupling at one slot: an ellipsoid over that slot's boundary
// coordinates [tie powers, AC boundary angles].
struct TimeSliceEllipsoid {
  int slot = 0;
  Ellipsoid ell;

  Json to_json() const;
  static TimeSliceEllipsoid from_json(const Json& j, const std::string& path);
};

// Tightest per-slot power and ramp bounds of one tie over the region, via
// 2T + 2(T-1) support solves. A bound that comes back unbounded names the
// tie and slot; tie capacity rows normally keep everything finite.
GeneratorEnvelope circumscribe_envelope(const FeasibleRegionHD& region,
                                        const BoundarySelectors& sel, int tie_index);

struct EnvelopeShrinkOptions {
  int max_iter = 200;
  double tol = 1e-7;
  std::uint64_t seed = 0;
  int probes = 32;
  double search_time_limit = 240.0;  // seconds per uncovered-point search
};

// Shrinks the envelope until every point of its window is reachable by the
// region (projection containment), or the iteration cap is hit. On cap or
// an inconclusive search the best envelope so far comes back with
// verified = false and a note.
GeneratorEnvelope shrink_envelope(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                                  int tie_index, GeneratorEnvelope env,
                                  const EnvelopeShrinkOptions& opts = {});

}  // namespace gridagg
