#include "scannav/policy.hpp"

#include <stdexcept>

#include "scannav/errors.hpp"

namespace scannav {

namespace {

void check_domain(const Scan& scan, Point2 x, Point2 y,
                  const ControlParams& params) {
  if (!safepoly_contains(scan, x, params.robot_radius)) {
    throw OutOfDomain("state x is outside the safe polygon");
  }
  if (!safepoly_contains(scan, y, params.robot_radius + params.margin_eps)) {
    throw OutOfDomain("goal y is outside the shrunk safe polygon");
  }
}

Vec2 clamp_speed(Vec2 v, double max_speed) {
  const double speed = norm(v);
  if (speed > max_speed && speed > 0.0) return (max_speed / speed) * v;
  return v;
}

}  // namespace

Vec2 move_through_center(const Scan& scan, Point2 x, Point2 y,
                         const ControlParams& params) {
  check_domain(scan, x, y, params);
  const Vec2 raw = safe_segment(scan, x, y, params.robot_radius)
                       ? params.gain * (y - x)
                       : params.gain * (scan.center - x);
  return clamp_speed(raw, params.max_speed);
}

Point2 projected_scan_goal(const Scan& scan, Point2 x, Point2 y,
                           const ControlParams& params) {
  check_domain(scan, x, y, params);
  const double r = params.robot_radius;
  if (safe_segment(scan, x, y, r)) return y;
  const Point2 c = scan.center;
  const Vec2 d = y - c;
  if (norm_sq(d) < 1e-30) return c;
  // alpha = 0 (the center) is always reachable from x by definition of the
  // safe polygon; the feasible set is an interval [0, alpha*].
  double lo = 0.0;
  double hi = 1.0;
  constexpr double kAlphaTol = 1e-6;
  constexpr int kMaxIter = 60;
  for (int it = 0; it < kMaxIter && hi - lo > kAlphaTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (safe_segment(scan, x, c + mid * d, r)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return c + lo * d;
}

Vec2 move_to_projected_goal(const Scan& scan, Point2 x, Point2 y,
                            const ControlParams& params) {
  const Point2 proj = projected_scan_goal(scan, x, y, params);
  return clamp_speed(params.gain * (proj - x), params.max_speed);
}

double navcost_center(const Scan& scan, Point2 x, Point2 y) {
  const Point2 c = scan.center;
  return dist(x, c) + dist(c, y) + dist(x, y);
}

double navcost_projected(const Scan& scan, Point2 x, Point2 y,
                         const ControlParams& params) {
  const Point2 proj = projected_scan_goal(scan, x, y, params);
  return dist(x, proj) + dist(proj, y);
}

double local_cost(LocalCostKind kind, const Scan& scan, Point2 x, Point2 y,
                  const ControlParams& params) {
  const Point2 c = scan.center;
  switch (kind) {
    case LocalCostKind::UniformConstant:
      return 1.0;
    case LocalCostKind::DistanceToGoal:
      return dist(x, y);
    case LocalCostKind::CentroidalDistance:
      return dist(x, c) + dist(c, y);
    case LocalCostKind::ProjectedGoalDistance: {
      const Point2 proj = projected_scan_goal(scan, x, y, params);
      return dist(x, proj) + dist(proj, y);
    }
    case LocalCostKind::CentroidalPerimeter:
      return dist(x, y) + dist(x, c) + dist(c, y);
    case LocalCostKind::ProjectedPerimeter: {
      const Point2 proj = projected_scan_goal(scan, x, y, params);
      return dist(x, y) + dist(x, proj) + dist(proj, y);
    }
    case LocalCostKind::SymmetricProjectedGoalDistance: {
      const Point2 proj_xy = projected_scan_goal(scan, x, y, params);
      const Point2 proj_yx = projected_scan_goal(scan, y, x, params);
      return dist(x, proj_xy) + dist(y, proj_yx);
    }
  }
  throw std::logic_error("unknown local cost kind");
}

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::MoveThroughCenter:
      return "MoveThroughCenter";
    case PolicyKind::MoveToProjectedGoal:
      return "MoveToProjectedGoal";
  }
  return "?";
}

const char* to_string(LocalCostKind kind) {
  switch (kind) {
    case LocalCostKind::UniformConstant:
      return "UniformConstant";
    case LocalCostKind::DistanceToGoal:
      return "DistanceToGoal";
    case LocalCostKind::CentroidalDistance:
      return "CentroidalDistance";
    case LocalCostKind::ProjectedGoalDistance:
      return "ProjectedGoalDistance";
    case LocalCostKind::CentroidalPerimeter:
      return "CentroidalPerimeter";
    case LocalCostKind::ProjectedPerimeter:
      return "ProjectedPerimeter";
    case LocalCostKind::SymmetricProjectedGoalDistance:
      return "SymmetricProjectedGoalDistance";
  }
  return "?";
}

}  // namespace scannav
