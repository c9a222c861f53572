#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridagg/aggregate.h"
#include "gridagg/coordinate.h"
#include "gridagg/cost.h"
#include "gridagg/grid_case.h"
#include "gridagg/json_io.h"

namespace gridagg {

// Human-readable rendering of an aggregation report document. Wall-clock
// numbers never appear here (they live in the timings sidecar), so the text
// is byte-identical across runs with the same seed.
std::string render_report(const Json& report);

struct CoverageRunOptions {
  long samples = 100000;           // membership draws from the exact boundary set
  long soundness_samples = 10000;  // model draws checked for an internal schedule
  std::uint64_t seed = 0;
  double tol = 1e-6;
  int jobs = 0;
};

// Coverage fraction with its 95% band plus the soundness count, as one
// document. The model must describe the case's boundary layout.
Json coverage_report(const GridCase& c, const AggregatedModel& M,
                     const CoverageRunOptions& opts = {});

// slot, one column per grouped dimension, cost, feasible. Infeasible rows
// keep their setpoint and leave the cost cell empty.
std::string cost_samples_csv(const std::vector<CostSample>& samples, const PwlCost& K);

// Time series of one corridor: the two endpoint powers per slot (export
// positive, so the columns mirror each other) for plotting.
std::string tie_flow_csv(const CoordinationResult& res, const Interconnection& net,
                         const std::string& corridor_id);

// Checks one region's committed schedule: model membership, disaggregation,
// and fitted vs true cost. Out-of-model schedules are reported, not thrown;
// a schedule a verified model accepts but the grid cannot realize still
// propagates as the defect it is.
Json verify_schedule(const GridCase& c, const AggregatedModel& M,
                     const CoordinationResult& dispatch);

}  // namespace gridagg
