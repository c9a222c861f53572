#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridagg/aggregate.h"
#include "gridagg/conic.h"
#include "gridagg/grid_case.h"

namespace gridagg {

// Tie -> cost-dimension assignment. Ties sharing a group (all corridors to
// the same neighbor) have their powers summed into one sampled dimension.
struct TieGrouping {
  std::vector<int> group_of;  // tie layout index -> dense group id
  int num_groups = 0;

  static TieGrouping identity(int num_ties);
};

struct CostSample {
  int slot = 0;
  Vec setpoint;      // grouped tie powers, MW
  double cost = 0;   // $, meaningful iff feasible
  bool feasible = false;
};

struct PwlPiece {
  Vec a;         // $/MW per grouped dimension
  double b = 0;  // $
};

// Max-affine cost surface of one slot. Convex by construction.
struct PwlSlot {
  int slot = 0;
  std::vector<PwlPiece> pieces;
  double rms = 0.0;  // over the feasible samples the fit saw
  int samples = 0;
  std::vector<std::string> warnings;

  double evaluate(const Vec& setpoint) const;
};

struct PwlCost {
  std::string region_id;
  int T = 0;
  std::vector<std::string> tie_ids;
  TieGrouping grouping;
  std::vector<PwlSlot> slots;
};

// Minimum dispatch cost of slot `slot` on a uniform lattice of grouped tie
// setpoints spanning the model's power windows. Each lattice point is one
// convex QP over the whole horizon with the slot's group sums pinned;
// unreachable points are recorded infeasible, and an entirely infeasible
// lattice is an error ("empty sampling region").
std::vector<CostSample> sample_cost_grid(const GridCase& c, const AggregatedModel& M, int slot,
                                         const std::vector<int>& counts,
                                         const TieGrouping& grouping);

// Alternating max-affine least squares: partition, refit each piece, then
// reassign samples to their active piece, keeping the best iterate over
// `restarts` seeded starts. A piece left without enough well-posed samples
// is dropped with a warning. `warm` seeds one start from an earlier fit so
// a larger piece count never fits worse than the fit it grew from.
PwlSlot fit_convex_pwl(const std::vector<CostSample>& samples, int pieces, std::uint64_t seed,
                       int restarts = 8, const PwlSlot* warm = nullptr);

double evaluate_cost(const PwlCost& cost, int slot, const Vec& grouped_setpoint);

// Appends the true generation and reserve cost terms (quadratic + linear +
// constant) of slot `slot` to the objective, or of every slot when slot < 0.
// Region variables are assumed to start at var_offset in the problem.
void add_true_cost(ConicProblem& p, const GridCase& c, const FeasibleRegionHD& region,
                   int slot = -1, int var_offset = 0);

// The amount add_true_cost would charge for one slot at the point x_int.
double true_slot_cost(const GridCase& c, const FeasibleRegionHD& region, const Vec& x_int,
                      int slot);

struct CostFitOptions {
  std::vector<int> counts;  // per grouped dim, each >= 2; empty picks by dimension
  int pieces = 8;
  int restarts = 8;
  std::uint64_t seed = 0;
  int jobs = 0;
  TieGrouping grouping;     // empty group_of = one group per tie
};

// Samples and fits every slot (parallel across slots). When samples_out is
// given it receives every lattice sample in slot order, feasible or not.
PwlCost fit_cost_model(const GridCase& c, const AggregatedModel& M,
                       const CostFitOptions& opts = {},
                       std::vector<CostSample>* samples_out = nullptr);

}  // namespace gridagg
