#pragma once

#include "gridagg/common.h"
#include "gridagg/json_io.h"

namespace gridagg {

// H-representation A x <= b.
struct HPolytope {
  Mat A;
  Vec b;

  HPolytope() = default;
  HPolytope(Mat A_, Vec b_);

  int dim() const { return static_cast<int>(A.cols()); }
  int rows() const { return static_cast<int>(A.rows()); }

  Json to_json() const;
  static HPolytope from_json(const Json& j, const std::string& path);
};

// Membership at tolerance scaled per row by 1 + row norm.
bool poly_contains(const HPolytope& P, const Vec& x, double tol = 1e-7);

// One LP. Also usable on unbounded polytopes.
bool poly_empty(const HPolytope& P);

// 2*dim bound LPs; throws (solver error code) when a coordinate is unbounded.
void poly_bounding_box(const HPolytope& P, Vec& lo, Vec& hi);

// Chebyshev center: deepest point w.r.t. row-normalized slack. Needs a
// bounded nonempty polytope for a meaningful radius; the point is what the
// samplers use as a strictly interior start.
Vec poly_interior_point(const HPolytope& P);

HPolytope make_box(const Vec& lo, const Vec& hi);

}  // namespace gridagg
