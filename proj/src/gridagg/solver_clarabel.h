#pragma once

#include "gridagg/conic.h"

namespace gridagg {

// Conic interior-point engine: LP / QP / SOCP / SDP / exponential cones.
// Rejects integrality.
SolveOutcome solve_with_clarabel(const ConicProblem& p, const SolveOptions& opts);

}  // namespace gridagg
