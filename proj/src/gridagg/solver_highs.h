#pragma once

#include "gridagg/conic.h"

namespace gridagg {

// LP / convex QP / MILP engine. Rejects cone blocks.
SolveOutcome solve_with_highs(const ConicProblem& p, const SolveOptions& opts);

// Writes the model in LP interchange text format (linear classes only).
void dump_problem_lp(const ConicProblem& p, const std::string& path);

}  // namespace gridagg
