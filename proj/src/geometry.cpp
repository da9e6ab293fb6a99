#include "scannav/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "scannav/errors.hpp"

namespace scannav {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this squared length two points count as coincident and the boundary
// segment between them is dropped.
constexpr double kZeroLenSq = 1e-24;
// On-line tolerance (meters) for boundary-inclusive triangle membership.
constexpr double kEdgeTol = 1e-12;

double wrap_angle(double a) {
  while (a < 0.0) a += kTwoPi;
  while (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// Applies f(a, b) to every non-degenerate boundary segment; stops early when f
// returns false. Returns false iff stopped early.
template <class F>
bool for_each_boundary_segment(const Scan& scan, F&& f) {
  const auto& pts = scan.points;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Point2& a = pts[i - 1];
    const Point2& b = pts[i];
    if (norm_sq(b - a) < kZeroLenSq) continue;
    if (!f(a, b)) return false;
  }
  return true;
}

bool point_in_fan_triangle(const Scan& scan, std::size_t wedge, Point2 q) {
  return point_in_triangle(q, scan.center, scan.points[wedge],
                           scan.points[wedge + 1]);
}

}  // namespace

double dist_point_segment(Point2 q, Point2 a, Point2 b) {
  const Vec2 ab = b - a;
  const double len_sq = norm_sq(ab);
  if (len_sq <= 0.0) return dist(q, a);
  const double t = std::clamp(dot(q - a, ab) / len_sq, 0.0, 1.0);
  return dist(q, a + t * ab);
}

bool segments_cross(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  const double d1 = cross(a2 - a1, b1 - a1);
  const double d2 = cross(a2 - a1, b2 - a1);
  const double d3 = cross(b2 - b1, a1 - b1);
  const double d4 = cross(b2 - b1, a2 - b1);
  return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

double dist_segment_segment(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  if (segments_cross(a1, a2, b1, b2)) return 0.0;
  const double d = std::min(
      std::min(dist_point_segment(a1, b1, b2), dist_point_segment(a2, b1, b2)),
      std::min(dist_point_segment(b1, a1, a2),
               dist_point_segment(b2, a1, a2)));
  return d;
}

bool point_in_triangle(Point2 q, Point2 a, Point2 b, Point2 c) {
  const double ab = norm(b - a);
  const double bc = norm(c - b);
  const double ca = norm(a - c);
  const double area2 = std::fabs(cross(b - a, c - a));
  const double longest = std::max({ab, bc, ca});
  if (area2 <= kEdgeTol * longest) {
    // Degenerate triangle: membership means lying on one of its edges.
    return dist_point_segment(q, a, b) <= kEdgeTol ||
           dist_point_segment(q, b, c) <= kEdgeTol ||
           dist_point_segment(q, c, a) <= kEdgeTol;
  }
  const double d1 = cross(b - a, q - a);
  const double d2 = cross(c - b, q - b);
  const double d3 = cross(a - c, q - c);
  const bool has_neg =
      d1 < -kEdgeTol * ab || d2 < -kEdgeTol * bc || d3 < -kEdgeTol * ca;
  const bool has_pos =
      d1 > kEdgeTol * ab || d2 > kEdgeTol * bc || d3 > kEdgeTol * ca;
  return !(has_neg && has_pos);
}

std::vector<Triangle> scan_polygon_triangles(const Scan& scan) {
  const auto& pts = scan.points;
  if (pts.size() < 3) {
    throw std::invalid_argument("scan needs at least 3 points (closed)");
  }
  if (pts.front() != pts.back()) {
    throw std::invalid_argument("scan point list is not closed");
  }
  std::vector<Triangle> fan;
  fan.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    fan.push_back({scan.center, pts[i - 1], pts[i]});
  }
  return fan;
}

bool point_in_scan_polygon(const Scan& scan, Point2 q) {
  const auto& pts = scan.points;
  if (pts.size() < 3) return false;
  const Point2 c = scan.center;
  if (norm_sq(q - c) < 1e-30) return true;

  const std::size_t wedges = pts.size() - 1;  // triangles in the fan
  if (wedges <= 32) {
    for (std::size_t i = 0; i < wedges; ++i) {
      if (point_in_fan_triangle(scan, i, q)) return true;
    }
    return false;
  }

  // Large scans are counter-clockwise monotone in angle about the center, so
  // the wedge containing q's direction can be found by binary search. A small
  // window around the hit absorbs ties and boundary roundoff.
  const double base = angle_of(pts[0] - c);
  auto rel = [&](Point2 p) { return wrap_angle(angle_of(p - c) - base); };
  const double aq = rel(q);
  std::size_t lo = 0;
  std::size_t hi = wedges - 1;  // exclude the closure duplicate
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (rel(pts[mid]) <= aq) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(wedges);
  for (std::ptrdiff_t off = -2; off <= 2; ++off) {
    std::ptrdiff_t w = static_cast<std::ptrdiff_t>(lo) + off;
    w = ((w % n) + n) % n;
    if (point_in_fan_triangle(scan, static_cast<std::size_t>(w), q)) {
      return true;
    }
  }
  return false;
}

std::vector<Segment> boundary_polyline(const Scan& scan) {
  std::vector<Segment> out;
  out.reserve(scan.points.size());
  for_each_boundary_segment(scan, [&](Point2 a, Point2 b) {
    out.push_back({a, b});
    return true;
  });
  return out;
}

bool eroded_contains(const Scan& scan, Point2 q, double inflation) {
  if (!point_in_scan_polygon(scan, q)) return false;
  if (inflation <= 0.0) return true;
  return for_each_boundary_segment(scan, [&](Point2 a, Point2 b) {
    return dist_point_segment(q, a, b) >= inflation;
  });
}

bool safe_segment(const Scan& scan, Point2 a, Point2 b, double inflation) {
  if (!eroded_contains(scan, a, inflation)) return false;
  if (!eroded_contains(scan, b, inflation)) return false;
  return for_each_boundary_segment(scan, [&](Point2 s1, Point2 s2) {
    if (segments_cross(a, b, s1, s2)) return false;
    if (inflation > 0.0 &&
        dist_segment_segment(a, b, s1, s2) < inflation) {
      return false;
    }
    return true;
  });
}

bool safepoly_contains(const Scan& scan, Point2 q, double inflation) {
  return safe_segment(scan, scan.center, q, inflation);
}

bool safepoly_contains_segment(const Scan& scan, Point2 a, Point2 b,
                               double inflation) {
  return safe_segment(scan, scan.center, a, inflation) &&
         safe_segment(scan, scan.center, b, inflation) &&
         safe_segment(scan, a, b, inflation);
}

SafePolygonView safepoly_boundary(const Scan& scan, double inflation,
                                  int angular_samples) {
  if (angular_samples < 4) {
    throw std::invalid_argument("angular_samples must be at least 4");
  }
  constexpr double kRadialTol = 1e-4;  // meters
  constexpr double kMinRadius = 1e-6;  // below this a direction is degenerate

  SafePolygonView view;
  view.scan_id = scan.id;
  view.center = scan.center;
  view.inflation = inflation;
  view.angular_samples = angular_samples;
  view.boundary.reserve(angular_samples);

  const Point2 c = scan.center;
  if (!eroded_contains(scan, c, inflation)) {
    throw EmptySafeRegion("scan center fails the eroded-containment test");
  }

  int degenerate = 0;
  for (int k = 0; k < angular_samples; ++k) {
    const double th = kTwoPi * k / angular_samples;
    const Vec2 u{std::cos(th), std::sin(th)};
    auto feasible = [&](double rho) {
      return safe_segment(scan, c, c + rho * u, inflation);
    };
    double rho;
    if (feasible(scan.r_max)) {
      rho = scan.r_max;
    } else {
      double lo = 0.0;
      double hi = scan.r_max;
      while (hi - lo > kRadialTol) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      rho = lo;
    }
    if (rho < kMinRadius) ++degenerate;
    view.boundary.push_back(c + rho * u);
  }
  if (degenerate == angular_samples) {
    throw EmptySafeRegion("safe region collapsed in every direction");
  }
  return view;
}

double dist2bnd(const SafePolygonView& view, Point2 q) {
  const auto& b = view.boundary;
  if (b.empty()) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Point2& p0 = b[i];
    const Point2& p1 = b[(i + 1) % b.size()];
    best = std::min(best, dist_point_segment(q, p0, p1));
  }
  return best;
}

double dist2obst(const Scan& scan, Point2 q) {
  const double cutoff = scan.r_max * (1.0 - 1e-6);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = scan.points.empty() ? 0 : scan.points.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = scan.points[i];
    if (dist(p, scan.center) < cutoff) best = std::min(best, dist(q, p));
  }
  return best;
}

void validate_scan(const Scan& scan, double robot_radius) {
  const auto& pts = scan.points;
  if (pts.size() < 4) {
    throw std::invalid_argument("scan " + std::to_string(scan.id) +
                                ": needs at least 4 points");
  }
  if (pts.front() != pts.back()) {
    throw std::invalid_argument("scan " + std::to_string(scan.id) +
                                ": point list is not closed");
  }
  const Point2 c = scan.center;
  const double range_cap = scan.r_max * (1.0 + 1e-9);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double r = dist(pts[i], c);
    if (r <= robot_radius) {
      throw std::invalid_argument("scan " + std::to_string(scan.id) +
                                  ": point inside the clearance radius");
    }
    if (r > range_cap) {
      throw std::invalid_argument("scan " + std::to_string(scan.id) +
                                  ": point beyond r_max");
    }
  }
  const double base = angle_of(pts[0] - c);
  double prev = 0.0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double a = wrap_angle(angle_of(pts[i] - c) - base);
    if (a < prev - 1e-9) {
      throw std::invalid_argument("scan " + std::to_string(scan.id) +
                                  ": points not in counter-clockwise order");
    }
    prev = a;
  }
}

}  // namespace scannav
