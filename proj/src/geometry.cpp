#include "agme/geometry.hpp"

#include <algorithm>

namespace agme {

SegmentCircleHit segment_circle_hit(Vec2 p1, Vec2 p2, Vec2 center,
                                    double radius) {
  const Vec2 rel = p1 - center;
  const double start_dist = rel.norm();
  if (start_dist < radius) {
    return {HitKind::kInside, {}};
  }
  const Vec2 d = p2 - p1;
  const double a = d.dot(d);
  if (a == 0.0) {
    // zero-length segment; start_dist == radius touches the boundary
    if (start_dist == radius) return {HitKind::kBoundary, p1};
    return {HitKind::kNone, {}};
  }
  // |rel + t*d|^2 = radius^2, solved for t in [0,1]
  const double b = 2.0 * rel.dot(d);
  const double c = rel.dot(rel) - radius * radius;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    return {HitKind::kNone, {}};
  }
  const double sq = std::sqrt(disc);
  double t = (-b - sq) / (2.0 * a);  // root nearest to p1
  if (t < 0.0) {
    // p1 sits on the boundary within rounding; the far root decides whether
    // the segment actually runs into the circle
    const double t2 = (-b + sq) / (2.0 * a);
    if (t2 < 0.0) return {HitKind::kNone, {}};
    t = std::max(t, 0.0);
    if (t > 1.0) return {HitKind::kNone, {}};
    return {HitKind::kBoundary, p1 + d * t};
  }
  if (t > 1.0) {
    return {HitKind::kNone, {}};
  }
  return {HitKind::kBoundary, p1 + d * t};
}

double point_segment_distance(Vec2 q, Vec2 p1, Vec2 p2) {
  const Vec2 d = p2 - p1;
  const double a = d.dot(d);
  if (a == 0.0) return distance(q, p1);
  const double t = std::clamp((q - p1).dot(d) / a, 0.0, 1.0);
  return distance(q, p1 + d * t);
}

}  // namespace agme
