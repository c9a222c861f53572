#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gridagg/envelope.h"
#include "gridagg/grid_case.h"
#include "gridagg/json_io.h"
#include "gridagg/outlier.h"
#include "gridagg/region.h"

namespace gridagg {

// Inner description of the boundary feasible set: per-tie power/ramp windows
// intersected with per-slot cross-coupling ellipsoids (full model), or with
// per-slot angle intervals instead (box baseline, `slices` empty). `verified`
// means the final uncovered-point search came back clean, so every point of
// the model has an internal schedule.
struct AggregatedModel {
  std::string region_id;
  int T = 0;
  double dt = 1.0;        // hours per slot
  double mva_base = 100;  // MW per p.u., for tie coupling downstream
  std::vector<std::string> tie_ids;
  std::vector<int> tie_bus;
  std::vector<int> angle_bus_ids;

  std::vector<GeneratorEnvelope> envelopes;  // one per tie, layout order
  std::vector<TimeSliceEllipsoid> slices;    // one per slot, or empty (box)
  std::vector<Vec> angle_lo, angle_hi;       // per slot, box models only

  bool verified = false;
  int shrink_iters = 0;
  std::vector<std::string> anomalies;  // skipped updates, guard trips
  std::string note;                    // why verification stopped, when it did
  Json provenance = Json::object();    // carried through serialization untouched

  int num_ties() const { return static_cast<int>(tie_ids.size()); }
  int num_angles() const { return static_cast<int>(angle_bus_ids.size()); }
  bool is_box() const { return slices.empty(); }

  BoundarySelectors selectors() const;
  ConvexBody body() const;  // envelope rows, then angle rows slot-major; slices as sections
  bool contains(const Vec& x_bd, double tol = 1e-7) const;

  // body polytope row -> owning bound, for shrink bookkeeping
  struct RowOrigin {
    int tie = -1;       // envelope rows: tie index, row = canonical envelope row
    int row = -1;
    int slot = -1;      // angle rows: slot, angle index, upper/lower side
    int angle = -1;
    bool upper = false;
  };
  RowOrigin row_origin(int body_row) const;
};

// Subspace split of the boundary coordinates: one group per tie (its T power
// coordinates) and one group per slot (that slot's powers and angles).
struct Categorization {
  std::vector<std::vector<int>> tie_subspaces;
  std::vector<std::vector<int>> slot_subspaces;
};

Categorization categorize(const BoundarySelectors& sel);

// Intersection of the fitted subspace pieces, status unverified. The slice
// list may be empty (box baseline). Fails when the pieces have no common
// point (one feasibility solve).
AggregatedModel recombine(std::vector<GeneratorEnvelope> envelopes,
                          std::vector<TimeSliceEllipsoid> slices,
                          const BoundarySelectors& sel, const std::string& region_id,
                          double mva_base);

struct OutlierReport {
  UncoveredStatus status = UncoveredStatus::inconclusive;
  bool found = false;
  Vec x_out;                   // model point with no internal schedule
  double infeasibility = 0.0;  // its preimage residual
  std::string method;
  std::string note;
};

// Searches the model for a boundary point the region cannot realize.
// status none certifies containment (subject to the search's exact-phase
// caveat); found yields a validated witness.
OutlierReport detect_outlier(const AggregatedModel& M, const FeasibleRegionHD& region,
                             const UncoveredSearchOptions& opts = {});

// Closest realizable boundary point to x_out (convex QP). x_out must be
// unrealizable; passing a covered point is a precondition error.
Vec nearest_boundary_point(const Vec& x_out, const FeasibleRegionHD& region,
                           double tol = 1e-7);

// Bounds of the model tight at x_out: ellipsoid slots, envelope rows, and
// angle-box rows. When x_out sits strictly inside the model (an exact-phase
// witness can), the single constraint most aligned with the escape direction
// x_out - x_bnd is returned instead, with ties kept together.
struct ActiveBounds {
  std::vector<int> slots;                                    // tight ellipsoids
  std::vector<std::pair<int, int>> env_rows;                 // (tie, canonical row)
  std::vector<std::tuple<int, int, bool>> angle_rows;        // (slot, angle, upper)

  bool empty() const { return slots.empty() && env_rows.empty() && angle_rows.empty(); }
};

ActiveBounds identify_active_bounds(const AggregatedModel& M, const Vec& x_out,
                                    const Vec& x_bnd, double tol = 1e-6);

// One bound-tightening step: active ellipsoids rescale onto x_bnd, active
// linear rows move their offsets onto x_bnd. Inactive parameters are copied
// bit for bit. Updates that would grow the model (numerics) are skipped and
// recorded in the returned model's anomaly list.
AggregatedModel shrink_step(const AggregatedModel& M, const Vec& x_bnd,
                            const ActiveBounds& active);

// Largest decrease achieved by a shrink step: max over linear-bound drops
// and per-slot log det drops. The outlier loop aborts when this falls under
// its minimum-step floor.
double shrink_progress(const AggregatedModel& before, const AggregatedModel& after);

struct AggregateOptions {
  int max_iter = 500;           // joint outlier loop cap
  int envelope_max_iter = 200;  // per-tie window loop cap
  double tol = 1e-7;
  std::uint64_t seed = 0;
  int jobs = 0;                 // parallel subspace fits; 0 = hardware
  double search_time_limit = 240.0;
  bool baseline_box = false;    // per-coordinate intervals, no ramps, no ellipsoids
};

struct AggregateResult {
  AggregatedModel model;
  Json report;   // fit summaries, loop events, anomalies; deterministic per seed
  Json timings;  // wall-clock sidecar, never folded into the report
};

// Full pipeline on one case: split the boundary, fit windows and slices in
// parallel, recombine, then run the outlier loop until verified or capped.
AggregateResult aggregate(const GridCase& c, const AggregateOptions& opts = {});

// Same pipeline on a prebuilt region (the case-independent entry).
AggregateResult aggregate_region(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                                 const std::string& region_id, double mva_base,
                                 const AggregateOptions& opts = {});

// Cubic comparison baseline: axis-aligned intervals on every boundary
// coordinate, driven through the same outlier loop.
AggregateResult baseline_box(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                             const std::string& region_id, double mva_base,
                             const AggregateOptions& opts = {});

// Fraction of the true boundary set the model covers, from k hit-and-run
// samples of the exact projection. Deterministic for a fixed seed regardless
// of jobs; the interval is the binomial 95% band.
struct CoverageEstimate {
  double rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  long k = 0;
};

CoverageEstimate coverage_rate(const AggregatedModel& M, const FeasibleRegionHD& region, long k,
                               std::uint64_t seed, int jobs = 0);

// Samples the model and counts points with no internal schedule (preimage
// residual above tol). A verified model should report zero.
struct SoundnessCheck {
  long violations = 0;
  double worst = 0.0;  // largest residual seen
  long k = 0;
};

SoundnessCheck verify_soundness(const AggregatedModel& M, const FeasibleRegionHD& region, long k,
                                std::uint64_t seed, double tol = 1e-6, int jobs = 0);

}  // namespace gridagg
