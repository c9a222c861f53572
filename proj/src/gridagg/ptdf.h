#pragma once

#include <optional>

#include "gridagg/grid_case.h"

namespace gridagg {

// Nodal susceptance matrix over dense bus indices (per-unit, B theta = P_pu),
// with every in-service line included; `outage` removes one line.
Mat susceptance_matrix(const GridCase& c, std::optional<int> outage_line = {});

// Row l maps bus net MW injections (slack at ref_bus, column zeroed) to the
// MW flow on line l, positive in the from->to direction. The outaged line's
// row is zero.
Mat build_ptdf(const GridCase& c, std::optional<int> outage_line = {});

}  // namespace gridagg
