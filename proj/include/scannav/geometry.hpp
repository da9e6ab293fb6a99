#pragma once

#include <cmath>
#include <vector>

namespace scannav {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};
using Point2 = Vec2;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double norm(Vec2 v) { return std::sqrt(norm_sq(v)); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

struct Segment {
  Point2 a;
  Point2 b;
};

struct Triangle {
  Point2 a;
  Point2 b;
  Point2 c;
};

// A single range scan: center plus the polar trace of ray endpoints, stored in
// counter-clockwise angular order about the center and closed (first point
// repeated at the end). Points at range r_max are max-range returns, not
// obstacle hits.
struct Scan {
  int id = 0;
  Point2 center;
  std::vector<Point2> points;
  double r_max = 0.0;
};

// Discretized boundary of the inflation-eroded, center-visible region of a
// scan: one vertex per sample angle, counter-clockwise starting at angle 0.
struct SafePolygonView {
  int scan_id = 0;
  Point2 center;
  double inflation = 0.0;
  int angular_samples = 0;
  std::vector<Point2> boundary;
};

// --- primitive helpers -------------------------------------------------------

double dist_point_segment(Point2 q, Point2 a, Point2 b);
double dist_segment_segment(Point2 a1, Point2 a2, Point2 b1, Point2 b2);
// True iff the two segments cross transversally (interiors intersect on
// strictly opposite sides); touching endpoints or collinear overlap return
// false.
bool segments_cross(Point2 a1, Point2 a2, Point2 b1, Point2 b2);
// Boundary-inclusive point-in-triangle test; degenerate triangles collapse to
// their edge segments.
bool point_in_triangle(Point2 q, Point2 a, Point2 b, Point2 c);

// --- scan polygon ------------------------------------------------------------

// The triangle fan (center, p[i-1], p[i]) whose union is the scan polygon.
// Throws std::invalid_argument if the point list is not closed.
std::vector<Triangle> scan_polygon_triangles(const Scan& scan);

// Membership in the scan polygon (union of fan triangles), boundary inclusive.
bool point_in_scan_polygon(const Scan& scan, Point2 q);

// Boundary segments [p[i-1], p[i]]; zero-length segments from repeated points
// are dropped.
std::vector<Segment> boundary_polyline(const Scan& scan);

// q lies in the scan polygon with clearance >= inflation from every boundary
// segment (erosion by a disk of radius `inflation`, boundary inclusive).
bool eroded_contains(const Scan& scan, Point2 q, double inflation);

// The whole segment [a, b] lies in the eroded scan polygon: both endpoints
// pass eroded_contains, the segment crosses no boundary segment, and every
// boundary segment keeps distance >= inflation from [a, b].
bool safe_segment(const Scan& scan, Point2 a, Point2 b, double inflation);

// Membership in the safe polygon: the segment [center, q] lies in the eroded
// scan polygon.
bool safepoly_contains(const Scan& scan, Point2 q, double inflation);

// Containment of a whole segment in the safe polygon. Equivalent to the
// filled triangle (center, a, b) lying inside the eroded scan polygon, which
// reduces to safe-segment checks on its three edges.
bool safepoly_contains_segment(const Scan& scan, Point2 a, Point2 b,
                               double inflation);

// Radial discretization of the safe polygon boundary: for each of
// `angular_samples` evenly spaced directions, the largest safe radius found by
// bisection (radial tolerance 1e-4 m). Throws EmptySafeRegion when every
// direction collapses below 1e-6 m.
SafePolygonView safepoly_boundary(const Scan& scan, double inflation,
                                  int angular_samples = 720);

// Minimum distance from q to the closed boundary polyline of the view.
double dist2bnd(const SafePolygonView& view, Point2 q);

// Minimum distance from q to scan points at range strictly below r_max
// (tolerance 1e-6 * r_max); +infinity when the scan holds only max-range
// returns.
double dist2obst(const Scan& scan, Point2 q);

// Validates the scan storage invariants: closed point list of length >= 4,
// ranges in (robot_radius, r_max], counter-clockwise monotone angles about the
// center. Throws std::invalid_argument describing the first violation.
void validate_scan(const Scan& scan, double robot_radius);

}  // namespace scannav
