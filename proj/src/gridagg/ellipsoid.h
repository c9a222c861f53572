#pragma once

#include "gridagg/common.h"
#include "gridagg/json_io.h"

namespace gridagg {

// {E u + e : ||u|| <= 1} with E symmetric positive definite, so membership
// reads ||E^{-1}(x - e)|| <= 1. Degenerate (flat) sets are rejected here and
// handled upstream by reducing dimension before fitting.
struct Ellipsoid {
  Mat E;
  Vec e;
  Mat E_inv;  // cached at construction

  Ellipsoid() = default;
  Ellipsoid(Mat E_, Vec e_);

  int dim() const { return static_cast<int>(e.size()); }
  double log_det() const;

  Json to_json() const;
  static Ellipsoid from_json(const Json& j, const std::string& path);
};

bool ellipsoid_contains(const Ellipsoid& Q, const Vec& x, double tol = 1e-7);

// ||E^{-1}(x - e)||; the scaling factor that maps the shape through x.
double ellipsoid_radius_at(const Ellipsoid& Q, const Vec& x);

}  // namespace gridagg
