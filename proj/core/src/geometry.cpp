#include "etalab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace etalab {

namespace {

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

double point_segment_distance_sq(Point2 p, Point2 a, Point2 b) {
  const double abx = b.x - a.x;
  const double aby = b.y - a.y;
  const double len2 = abx * abx + aby * aby;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.x - a.x) * abx + (p.y - a.y) * aby) / len2, 0.0, 1.0);
  const double dx = p.x - (a.x + t * abx);
  const double dy = p.y - (a.y + t * aby);
  return dx * dx + dy * dy;
}

}  // namespace

bool segments_intersect(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  const double d1 = cross(b0, b1, a0);
  const double d2 = cross(b0, b1, a1);
  const double d3 = cross(a0, a1, b0);
  const double d4 = cross(a0, a1, b1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(a0, b0, b1)) return true;
  if (d2 == 0 && on_segment(a1, b0, b1)) return true;
  if (d3 == 0 && on_segment(b0, a0, a1)) return true;
  if (d4 == 0 && on_segment(b1, a0, a1)) return true;
  return false;
}

double segment_distance(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  if (segments_intersect(a0, a1, b0, b1)) return 0.0;
  const double d2 = std::min(std::min(point_segment_distance_sq(b0, a0, a1),
                                      point_segment_distance_sq(b1, a0, a1)),
                             std::min(point_segment_distance_sq(a0, b0, b1),
                                      point_segment_distance_sq(a1, b0, b1)));
  return std::sqrt(d2);
}

namespace {

bool segments_touch(Point2 a0, Point2 a1, Point2 b0, Point2 b1, double tol) {
  if (tol <= 0.0) return segments_intersect(a0, a1, b0, b1);
  return segment_distance(a0, a1, b0, b1) <= tol;
}

}  // namespace

bool polyline_self_intersects(std::span<const Point2> pts, double tol) {
  if (pts.size() < 2) return false;
  const std::size_t n_seg = pts.size() - 1;
  for (std::size_t i = 0; i + 2 < n_seg + 1; ++i) {
    for (std::size_t j = i + 2; j < n_seg; ++j) {
      if (segments_touch(pts[i], pts[i + 1], pts[j], pts[j + 1], tol)) return true;
    }
  }
  return false;
}

bool polylines_intersect(std::span<const Point2> a, std::span<const Point2> b, double tol) {
  if (a.size() < 2 || b.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      if (segments_touch(a[i], a[i + 1], b[j], b[j + 1], tol)) return true;
    }
  }
  return false;
}

std::vector<Point2> trace_points(const CurveTrace& trace) {
  std::vector<Point2> pts;
  pts.reserve(trace.samples.size());
  for (const auto& s : trace.samples) pts.push_back({s.x, s.y});
  return pts;
}

bool polyline_self_intersects(const CurveTrace& trace, double tol) {
  return polyline_self_intersects(std::span<const Point2>(trace_points(trace)), tol);
}

bool polylines_intersect(const CurveTrace& a, const CurveTrace& b, double tol) {
  const auto pa = trace_points(a);
  const auto pb = trace_points(b);
  return polylines_intersect(std::span<const Point2>(pa), std::span<const Point2>(pb), tol);
}

}  // namespace etalab
