#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gridagg/ellipsoid.h"
#include "gridagg/polytope.h"
#include "gridagg/region.h"

namespace gridagg {

// An ellipsoidal constraint acting on a coordinate subset of the ambient
// vector: || E^-1 (x[coords] - e) || <= 1.
struct EllipsoidalSection {
  std::vector<int> coords;
  Ellipsoid ell;
};

// Intersection of an H-polytope (rows over the ambient space; may have zero
// rows) with ellipsoidal sections. Convex by construction.
struct ConvexBody {
  int dim = 0;
  HPolytope poly;
  std::vector<EllipsoidalSection> sections;

  bool contains(const Vec& x, double tol = 1e-9) const;
};

// Strictly interior point: Chebyshev LP when there are no sections,
// otherwise a margin-maximizing second-order-cone program. Throws
// ErrorCode::infeasible on an empty intersection.
Vec body_interior_point(const ConvexBody& B);

// Maximizer of dir'x over the body (one conic solve). Throws
// ErrorCode::invalid_argument when the body is unbounded along dir.
Vec body_support_point(const ConvexBody& B, const Vec& dir);

// Hit-and-run with closed-form chord intersections. Deterministic per seed:
// one chain, burn-in 100 + 10*dim steps, thinning max(1, dim/2). Requires a
// bounded nonempty body (bounds checked on the polytope part via LPs when
// there are no sections; ellipsoid sections bound their coordinates
// themselves only jointly with the polytope, so boundedness of the
// intersection is checked by 2*dim support solves).
std::vector<Vec> sample_body(const ConvexBody& B, int k, std::uint64_t seed);

// sample_body specialization for a plain polytope.
std::vector<Vec> sample_polytope(const HPolytope& P, int k, std::uint64_t seed);

// Chord endpoints of the exact boundary projection {C x + d | F x <= f}
// along x0 + t*u: one parametric LP per direction, warm-started across
// calls on a persistent solver instance.
class ProjectionChordOracle {
 public:
  explicit ProjectionChordOracle(const FeasibleRegionHD& region);
  ~ProjectionChordOracle();
  ProjectionChordOracle(const ProjectionChordOracle&) = delete;
  ProjectionChordOracle& operator=(const ProjectionChordOracle&) = delete;

  // [t_lo, t_hi] with t_lo <= 0 <= t_hi when x0 is inside the projection.
  std::pair<double, double> chord(const Vec& x0, const Vec& u);

  int dim() const { return n_bd_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int n_bd_ = 0;
};

// A strictly interior point of the boundary projection: the mean of the
// 2*n_bd coordinate-support boundary points. Throws when some boundary
// coordinate is unbounded.
Vec projection_interior_point(const FeasibleRegionHD& region);

// Hit-and-run directly on the exact projection of the region onto x_bd,
// using the chord oracle. Same chain parameters as sample_body, thinning 1
// (every accepted step is one LP; coverage estimates tolerate the serial
// correlation). Throws ErrorCode::invalid_argument when the projection is
// flat (chords keep collapsing).
std::vector<Vec> sample_projection(const FeasibleRegionHD& region, int k, std::uint64_t seed);

// Deterministic stream splitting for seed-partitioned parallel sampling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace gridagg
