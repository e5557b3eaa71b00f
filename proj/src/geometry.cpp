#include "minigolf/geometry.hpp"

#include <algorithm>
#include <limits>

namespace minigolf {

double wrap_deg_180(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

double wrap_deg_360(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d < 0.0) d += 360.0;
  if (d >= 360.0) d -= 360.0;  // fmod can return 360.0 - eps rounding up
  return d;
}

double bearing_deg(const Vec2& from, const Vec2& to) {
  Vec2 d = to - from;
  if (d.x == 0.0 && d.y == 0.0) return 0.0;
  return wrap_deg_180(rad_to_deg(std::atan2(d.y, d.x)));
}

namespace {

constexpr double kEps = 1e-12;

// Intersection parameter of segment p0+u*(p1-p0) with segment a+t*(b-a).
std::optional<std::pair<double, double>> seg_seg_params(const Vec2& p0, const Vec2& p1,
                                                        const Vec2& a, const Vec2& b) {
  Vec2 r = p1 - p0;
  Vec2 s = b - a;
  double denom = cross(r, s);
  if (std::abs(denom) < kEps) return std::nullopt;
  Vec2 qp = a - p0;
  double u = cross(qp, s) / denom;
  double t = cross(qp, r) / denom;
  if (u < -kEps || u > 1.0 + kEps || t < -kEps || t > 1.0 + kEps) return std::nullopt;
  return std::make_pair(std::clamp(u, 0.0, 1.0), std::clamp(t, 0.0, 1.0));
}

}  // namespace

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
    double v = cross(q - p, r - p);
    if (v > kEps) return 1;
    if (v < -kEps) return -1;
    return 0;
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  auto on_seg = [](const Vec2& p, const Vec2& q, const Vec2& r) {
    return std::min(p.x, r.x) - kEps <= q.x && q.x <= std::max(p.x, r.x) + kEps &&
           std::min(p.y, r.y) - kEps <= q.y && q.y <= std::max(p.y, r.y) + kEps;
  };
  if (o1 == 0 && on_seg(a, c, b)) return true;
  if (o2 == 0 && on_seg(a, d, b)) return true;
  if (o3 == 0 && on_seg(c, a, d)) return true;
  if (o4 == 0 && on_seg(c, b, d)) return true;
  return false;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  Vec2 d = b - a;
  double len2 = dot(d, d);
  if (len2 < kEps) return distance(p, a);
  double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return distance(p, a + d * t);
}

Footprint Footprint::disk(double r) {
  Footprint f;
  f.is_disk = true;
  f.radius = r;
  return f;
}

Footprint Footprint::rect(double hx, double hy) {
  Footprint f;
  f.verts = {{-hx, -hy}, {hx, -hy}, {hx, hy}, {-hx, hy}};
  return f;
}

PlacedFootprint place(const Footprint& f, const Vec2& position, double heading_deg) {
  PlacedFootprint p;
  p.is_disk = f.is_disk;
  p.center = position;
  p.radius = f.radius;
  double rad = deg_to_rad(heading_deg);
  p.verts.reserve(f.verts.size());
  for (const Vec2& v : f.verts) p.verts.push_back(position + rotate(v, rad));
  return p;
}

bool PlacedFootprint::contains(const Vec2& p) const {
  if (is_disk) return distance(p, center) <= radius + kEps;
  for (size_t i = 0; i < verts.size(); ++i) {
    const Vec2& a = verts[i];
    const Vec2& b = verts[(i + 1) % verts.size()];
    if (cross(b - a, p - a) < -kEps) return false;
  }
  return true;
}

std::optional<Hit> PlacedFootprint::entry_hit(const Vec2& p0, const Vec2& p1) const {
  if (is_disk) {
    Vec2 d = p1 - p0;
    Vec2 f = p0 - center;
    double a = dot(d, d);
    if (a < kEps) return std::nullopt;
    double b = 2.0 * dot(f, d);
    double c = dot(f, f) - radius * radius;
    if (c <= 0.0) return std::nullopt;  // already inside
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return std::nullopt;
    double u = (-b - std::sqrt(disc)) / (2.0 * a);
    if (u < 0.0 || u > 1.0) return std::nullopt;
    Hit h;
    h.u = u;
    h.point = p0 + d * u;
    h.normal = normalized(h.point - center);
    return h;
  }
  if (contains(p0)) return std::nullopt;
  std::optional<Hit> best;
  for (size_t i = 0; i < verts.size(); ++i) {
    const Vec2& a = verts[i];
    const Vec2& b = verts[(i + 1) % verts.size()];
    auto params = seg_seg_params(p0, p1, a, b);
    if (!params) continue;
    Vec2 edge = b - a;
    Vec2 n = normalized(Vec2{edge.y, -edge.x});  // outward for CCW polygons
    if (dot(p1 - p0, n) >= 0.0) continue;        // not moving inward
    if (!best || params->first < best->u) {
      Hit h;
      h.u = params->first;
      h.point = p0 + (p1 - p0) * params->first;
      h.normal = n;
      best = h;
    }
  }
  return best;
}

bool PlacedFootprint::blocks_segment(const Vec2& a, const Vec2& b) const {
  if (is_disk) {
    return point_segment_distance(center, a, b) < radius - 1e-9;
  }
  if (contains(a) || contains(b)) {
    // Touching the boundary only does not block.
    Vec2 probe_a = a, probe_b = b;
    bool inner_a = true, inner_b = true;
    for (size_t i = 0; i < verts.size(); ++i) {
      const Vec2& va = verts[i];
      const Vec2& vb = verts[(i + 1) % verts.size()];
      if (cross(vb - va, probe_a - va) < 1e-9) inner_a = false;
      if (cross(vb - va, probe_b - va) < 1e-9) inner_b = false;
    }
    if (inner_a || inner_b) return true;
  }
  for (size_t i = 0; i < verts.size(); ++i) {
    const Vec2& va = verts[i];
    const Vec2& vb = verts[(i + 1) % verts.size()];
    auto params = seg_seg_params(a, b, va, vb);
    if (!params) continue;
    // Interior crossings only; endpoints resting exactly on the boundary are fine.
    if (params->first > 1e-9 && params->first < 1.0 - 1e-9) return true;
  }
  return false;
}

namespace {

// Separating-axis test for two convex polygons.
bool polys_overlap(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  auto axes_separate = [](const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    for (size_t i = 0; i < p.size(); ++i) {
      Vec2 edge = p[(i + 1) % p.size()] - p[i];
      Vec2 axis{edge.y, -edge.x};
      double pmin = std::numeric_limits<double>::max(), pmax = -pmin;
      for (const Vec2& v : p) {
        double d = dot(v, axis);
        pmin = std::min(pmin, d);
        pmax = std::max(pmax, d);
      }
      double qmin = std::numeric_limits<double>::max(), qmax = -qmin;
      for (const Vec2& v : q) {
        double d = dot(v, axis);
        qmin = std::min(qmin, d);
        qmax = std::max(qmax, d);
      }
      if (pmax < qmin + kEps || qmax < pmin + kEps) return true;
    }
    return false;
  };
  return !axes_separate(a, b) && !axes_separate(b, a);
}

double poly_point_distance(const std::vector<Vec2>& poly, const Vec2& p) {
  double best = std::numeric_limits<double>::max();
  for (size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  }
  return best;
}

bool point_in_poly(const std::vector<Vec2>& poly, const Vec2& p) {
  for (size_t i = 0; i < poly.size(); ++i) {
    if (cross(poly[(i + 1) % poly.size()] - poly[i], p - poly[i]) < -kEps) return false;
  }
  return true;
}

}  // namespace

bool PlacedFootprint::overlaps(const PlacedFootprint& o) const {
  if (is_disk && o.is_disk) {
    return distance(center, o.center) < radius + o.radius - kEps;
  }
  if (is_disk) {
    if (point_in_poly(o.verts, center)) return true;
    return poly_point_distance(o.verts, center) < radius - kEps;
  }
  if (o.is_disk) {
    if (point_in_poly(verts, o.center)) return true;
    return poly_point_distance(verts, o.center) < o.radius - kEps;
  }
  return polys_overlap(verts, o.verts);
}

bool PlacedFootprint::inside_rect(double length, double width) const {
  if (is_disk) {
    return center.x - radius >= -kEps && center.x + radius <= length + kEps &&
           center.y - radius >= -kEps && center.y + radius <= width + kEps;
  }
  for (const Vec2& v : verts) {
    if (v.x < -kEps || v.x > length + kEps || v.y < -kEps || v.y > width + kEps) return false;
  }
  return true;
}

}  // namespace minigolf
