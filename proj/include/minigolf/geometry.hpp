#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace minigolf {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(b - a); }

inline Vec2 normalized(const Vec2& a) {
  double n = norm(a);
  return n > 0.0 ? Vec2{a.x / n, a.y / n} : Vec2{0.0, 0.0};
}

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

/// Wrap to (-180, 180].
double wrap_deg_180(double deg);
/// Wrap to [0, 360).
double wrap_deg_360(double deg);

inline Vec2 heading_vec(double deg) {
  double r = deg_to_rad(deg);
  return {std::cos(r), std::sin(r)};
}

/// Bearing of the segment from -> to, degrees in (-180, 180].
double bearing_deg(const Vec2& from, const Vec2& to);

inline Vec2 rotate(const Vec2& v, double rad) {
  double c = std::cos(rad), s = std::sin(rad);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Reflect a velocity about a surface with outward unit normal n.
inline Vec2 reflect(const Vec2& v, const Vec2& n) {
  double d = dot(v, n);
  return v - n * (2.0 * d);
}

/// First boundary crossing of the motion segment p0->p1 into a shape.
struct Hit {
  double u = 0.0;         // parameter along p0->p1 in [0, 1]
  Vec2 point;             // crossing point
  Vec2 normal;            // outward unit normal at the crossing
};

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// Convex footprint in a local frame: either a disk or a CCW polygon.
struct Footprint {
  bool is_disk = false;
  double radius = 0.0;
  std::vector<Vec2> verts;  // CCW, local frame

  static Footprint disk(double r);
  static Footprint rect(double half_x, double half_y);
};

/// Footprint transformed into the court frame.
struct PlacedFootprint {
  bool is_disk = false;
  Vec2 center;
  double radius = 0.0;
  std::vector<Vec2> verts;  // CCW, world frame

  bool contains(const Vec2& p) const;
  /// Earliest outside->inside crossing of p0->p1, if any.
  std::optional<Hit> entry_hit(const Vec2& p0, const Vec2& p1) const;
  /// True if the segment touches the interior (used for line-of-sight checks).
  bool blocks_segment(const Vec2& a, const Vec2& b) const;
  bool overlaps(const PlacedFootprint& o) const;
  bool inside_rect(double length, double width) const;
};

PlacedFootprint place(const Footprint& f, const Vec2& position, double heading_deg);

}  // namespace minigolf
