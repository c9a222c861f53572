#pragma once

#include <optional>

#include "gridagg/conic.h"

namespace gridagg {

enum class SolverProfile { automatic, highs_only, clarabel_only };

// Reads GRIDAGG_SOLVER (auto | highs | clarabel). Unset means auto.
SolverProfile solver_profile_from_env();

bool profile_supports(SolverProfile prof, const ConicProblem& p);

// Dispatches by problem class under the active profile, then re-verifies any
// "optimal" answer: constraint violation and objective recomputation must
// agree with the backend before the caller sees SolveStatus::optimal.
SolveOutcome solve(const ConicProblem& p, const SolveOptions& opts = {});

struct FeasibilityResult {
  bool feasible = false;
  Vec point;        // a feasible x when feasible
  Vec farkas;       // row multipliers proving emptiness when infeasible
  double residual;  // minimum total constraint relaxation (0 iff feasible)
};

// Decides feasibility of the linear system in `p` (objective ignored) by
// minimizing an L1 relaxation of the rows. Variable bounds stay hard. The
// returned multipliers y satisfy: sum_r max over the row interval of y_r a_r x
// minus the box support of A'y is < 0, i.e. no x in the box can satisfy all
// rows. `farkas_gap` evaluates that margin for tests.
FeasibilityResult check_feasibility(const ConicProblem& p, double tol = 1e-7,
                                    const SolveOptions& opts = {});

double farkas_gap(const ConicProblem& p, const Vec& y);

}  // namespace gridagg
