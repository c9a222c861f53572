#pragma once

#include "gridagg/ellipsoid.h"
#include "gridagg/region.h"

namespace gridagg {

// Largest-volume ellipsoid inside the slot-t slice of the boundary
// projection, found jointly with an affine internal response: the solve
// picks u and V so that every unit vector a maps to a feasible internal
// point u + V a, and maximizes log det of the induced boundary shape
// H_t C V. Restricting the shape to symmetric PSD loses no volume.
//
// Errors: a slice coordinate with no finite extent, or a slice that is flat
// (an AC tie angle pinned by its own tie power, for instance) is reported
// with the offending coordinate; drop that coordinate from the boundary or
// fix the case instead of fitting a degenerate ellipsoid.
Ellipsoid max_volume_ellipsoid(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                               int t);

}  // namespace gridagg
