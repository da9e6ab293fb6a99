#pragma once

#include "scannav/geometry.hpp"

namespace scannav {

enum class PolicyKind {
  MoveThroughCenter,
  MoveToProjectedGoal,
};

enum class LocalCostKind {
  UniformConstant,
  DistanceToGoal,
  CentroidalDistance,
  ProjectedGoalDistance,
  CentroidalPerimeter,
  ProjectedPerimeter,
  SymmetricProjectedGoalDistance,
};

struct ControlParams {
  double gain = 1.8;        // 1/s
  double max_speed = 0.5;   // m/s
  double margin_eps = 1e-3; // m, shrink margin for goal containment
  double robot_radius = 0.25;
};

// Feedback law that pulls straight toward y when the segment [x, y] stays in
// the eroded scan polygon, and retreats toward the scan center otherwise.
// Output speed-clamped to params.max_speed. Throws OutOfDomain when x is
// outside the safe polygon or y is outside the shrunk safe polygon.
Vec2 move_through_center(const Scan& scan, Point2 x, Point2 y,
                         const ControlParams& params);

// The point on [center, y] closest to y whose segment from x stays in the
// eroded scan polygon, located by bisection (tolerance 1e-6 relative to
// |y - center|). Same domain requirements as the feedback laws.
Point2 projected_scan_goal(const Scan& scan, Point2 x, Point2 y,
                           const ControlParams& params);

// Feedback law pulling toward the projected scan goal, speed-clamped.
Vec2 move_to_projected_goal(const Scan& scan, Point2 x, Point2 y,
                            const ControlParams& params);

// |x - c| + |c - y| + |x - y|: non-increasing along move_through_center flows.
double navcost_center(const Scan& scan, Point2 x, Point2 y);

// |x - proj| + |proj - y| with proj the projected scan goal: strictly
// decreasing along move_to_projected_goal flows until the goal is reached.
double navcost_projected(const Scan& scan, Point2 x, Point2 y,
                         const ControlParams& params);

// Local traversal-cost menu used by the planner; projected variants evaluate
// projected_scan_goal internally and share its domain requirements.
double local_cost(LocalCostKind kind, const Scan& scan, Point2 x, Point2 y,
                  const ControlParams& params);

const char* to_string(PolicyKind kind);
const char* to_string(LocalCostKind kind);

}  // namespace scannav
