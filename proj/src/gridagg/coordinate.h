#pragma once

#include <string>
#include <vector>

#include "gridagg/aggregate.h"
#include "gridagg/cost.h"
#include "gridagg/grid_case.h"

namespace gridagg {

// One corridor between two regions. Power counts positive from region_a into
// region_b; each endpoint names the tie the way the owning region declares it.
struct InterTie {
  std::string id;
  std::string region_a;
  std::string tie_a;
  std::string region_b;
  std::string tie_b;
  TieKind kind = TieKind::DC;
  double reactance = 0.0;  // p.u., AC only
  double capacity = 0.0;   // MW
};

// Every tie of every region must appear in exactly one corridor. The first
// region id is the global angle reference: its boundary angles are read
// as-is, every other region carries a free per-slot frame offset.
struct Interconnection {
  std::vector<std::string> regions;
  std::vector<InterTie> ties;
};

struct RegionSchedule {
  std::string region_id;
  std::vector<std::string> tie_ids;  // layout order, aligned with tie_power rows
  std::vector<int> angle_bus_ids;    // aligned with angle rows
  Vec x_bd;          // model layout order
  Mat tie_power;     // ties x T, MW, export positive
  Mat angle;         // exposed boundary angles x T, rad, region frame
  Vec frame_offset;  // per slot, rad; added to the region's angles in the global frame
  Vec kappa;         // per-slot cost, $
};

struct CoordinationResult {
  SolveStatus status = SolveStatus::error;
  std::string note;  // names the blocking constraint family when infeasible
  double objective = 0.0;
  std::vector<RegionSchedule> schedules;  // net region order
};

// Non-iterative dispatch over the aggregated models: one conic solve
// minimizing the fitted piecewise-linear cost subject to model membership,
// tie capacity, power anti-symmetry, and AC angle-difference coupling.
CoordinationResult coordinate(const std::vector<AggregatedModel>& models,
                              const std::vector<PwlCost>& costs, const Interconnection& net);

struct RegionDispatch {
  std::string region_id;
  Vec x_int;
  Mat gen_power;    // thermal gens (case order) x T, MW
  Mat reserve_dn;   // same shape
  Mat reserve_up;
  Mat renewable;    // renewables x T, MW
  Mat line_flow;    // lines x T, MW
  double cost = 0.0;  // true generation + reserve cost over the horizon
};

// Recovers a minimum-cost internal schedule meeting the boundary schedule
// exactly. A verified model guarantees this is feasible; infeasibility on a
// verified model is reported as a defect with the schedule embedded so the
// failure can be replayed.
RegionDispatch disaggregate(const GridCase& c, const AggregatedModel& M, const Vec& x_bd);

struct CentralizedOptions {
  int max_vars = 200000;  // joint problem size guard
  double time_limit = 600.0;
};

// Ground-truth oracle: one monolithic QP over every region's full constraint
// set with true costs and the same coupling rows. Its optimum lower-bounds
// any coordinated schedule re-priced at true cost.
CoordinationResult centralized_solve(const std::vector<GridCase>& cases,
                                     const Interconnection& net,
                                     const CentralizedOptions& opts = {});

}  // namespace gridagg
