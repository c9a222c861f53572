#pragma once

#include <vector>

#include "gridagg/polytope.h"

namespace gridagg {

struct FeasibleRegionHD;

struct FmOptions {
  int max_vars = 25;     // refuse larger systems; this is a desk-scale oracle
  int max_keep = 4;
  double tol = 1e-9;
  int prune_threshold = 200;  // run LP redundancy pruning when rows exceed this
};

// Exact projection of {x : A x <= b} onto the `keep` coordinates by variable
// elimination. Output rows are unit-normalized, deduplicated, LP-pruned to a
// canonical irredundant set, and sorted. An empty projection is returned as
// the single row 0'x <= -1.
HPolytope fm_project(const Mat& A, const Vec& b, const std::vector<int>& keep,
                     const FmOptions& opts = {});

// Projection of the full region onto a subset of boundary coordinates.
// Builds [x_bd(dims); x_int] with the coupling equalities as row pairs and
// eliminates everything internal. Test oracle only; guarded by opts.max_vars.
HPolytope exact_project(const FeasibleRegionHD& region, const std::vector<int>& dims,
                        const FmOptions& opts = {});

}  // namespace gridagg
