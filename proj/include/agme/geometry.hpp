#pragma once

#include <cmath>
#include <optional>

namespace agme {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::sqrt(x * x + y * y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

enum class HitKind {
  kNone,      // segment stays outside the circle
  kBoundary,  // first boundary crossing, point below is valid
  kInside     // segment start already inside the circle
};

struct SegmentCircleHit {
  HitKind kind = HitKind::kNone;
  Vec2 point{};  // boundary intersection nearest to the segment start

  bool hit() const { return kind != HitKind::kNone; }
};

// First intersection of the segment p1->p2 with the circle boundary.
// Tangency (closest approach exactly at the radius) counts as a hit.
SegmentCircleHit segment_circle_hit(Vec2 p1, Vec2 p2, Vec2 center,
                                    double radius);

// Minimum distance from point q to the segment p1->p2.
double point_segment_distance(Vec2 q, Vec2 p1, Vec2 p2);

}  // namespace agme
