#ifndef SPECRANGE_CONVEX_HPP
#define SPECRANGE_CONVEX_HPP

#include <vector>

#include "complex_matrix.hpp"

namespace specrange {

// Counterclockwise convex polygon in the complex plane.  May degenerate to a
// segment (2 vertices) or a point (1 vertex); such polygons have zero area.
struct ConvexPolygon {
  std::vector<cx> vertices;
};

// Monotone-chain hull.  Points closer than tol are merged and near-collinear
// chain vertices (cross product below tol * scale) are dropped, so the result
// is strictly convex at the given tolerance.
ConvexPolygon convex_hull(std::vector<cx> points, double tol = 1e-12);

// Shoelace formula; degenerate polygons give 0.
double polygon_area(const ConvexPolygon& p);

// Euclidean distance from a point to the polygon (0 inside).
double distance_to_polygon(cx z, const ConvexPolygon& p);

// Hausdorff distance between convex polygons (attained at vertices).
double polygon_hausdorff(const ConvexPolygon& p, const ConvexPolygon& q);

// Support function h(theta) = max_v Re(e^{i theta} v); also reports the
// maximizing vertex.
double polygon_support(const ConvexPolygon& p, double theta, cx* argmax = nullptr);

}  // namespace specrange

#endif
