#pragma once

#include <span>
#include <vector>

#include "etalab/curve.hpp"

namespace etalab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Exact segment-segment intersection test (orientation predicates, collinear
/// overlap included).
bool segments_intersect(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// Minimum Euclidean distance between two segments (0 when they intersect).
double segment_distance(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// True iff two non-adjacent segments of the polyline come within tol of
/// touching. O(n^2) pairwise test; traces stay small enough that no sweep
/// structure is warranted.
bool polyline_self_intersects(std::span<const Point2> pts, double tol);
bool polyline_self_intersects(const CurveTrace& trace, double tol);

/// True iff some segment of a comes within tol of some segment of b.
bool polylines_intersect(std::span<const Point2> a, std::span<const Point2> b, double tol);
bool polylines_intersect(const CurveTrace& a, const CurveTrace& b, double tol);

std::vector<Point2> trace_points(const CurveTrace& trace);

}  // namespace etalab
