#pragma once

#include <vector>

#include "scannav/graph.hpp"
#include "scannav/policy.hpp"

namespace scannav {

// Priority extraction strategy for plan(); both produce identical results
// (ties broken by smallest scan index) — LinearScan exists as a debug oracle.
enum class PlanMethod {
  BinaryHeap,
  LinearScan,
};

// Output of the graph-wide cost propagation: per scan, the accumulated cost to
// the goal and the local navigation target handed to that scan's feedback law
// (the goal itself for goal-containing scans, otherwise the center of the
// next scan toward the goal).
struct PlanResult {
  Point2 goal;
  LocalCostKind cost_kind = LocalCostKind::CentroidalDistance;
  std::vector<double> scancost;   // +inf when unreached
  std::vector<Point2> scangoal;   // defaults to own center when unreached
};

// Propagates local traversal costs outward from every scan whose shrunk safe
// polygon contains the goal, relaxing each graph edge with the cost of
// crossing the settled scan from the neighbor's center to that scan's local
// goal. Throws GoalUnreachable when no scan contains the goal.
PlanResult plan(const ScanCollection& scans, const MotionGraph& graph,
                Point2 goal, LocalCostKind cost_kind,
                PlanMethod method = PlanMethod::BinaryHeap);

// Consistency audit of a plan: along every edge with finite costs in both
// directions, scancost(i) <= scancost(j) + localcost over scan j from c_i to
// scangoal(j) (tolerance 1e-9), strictly for scans containing the goal.
bool check_bellman(const ScanCollection& scans, const MotionGraph& graph,
                   const PlanResult& plan);

// The finite-cost scan of minimum scancost whose safe polygon contains x
// (ties to the smallest index). Throws NoActiveScan otherwise.
int active_scan(const ScanCollection& scans, const PlanResult& plan,
                Point2 x);

struct GlobalPolicy {
  ScanCollection scans;
  MotionGraph graph;
  PlanResult plan;
  PolicyKind policy_kind = PolicyKind::MoveToProjectedGoal;
  ControlParams params;
};

GlobalPolicy make_global_policy(ScanCollection scans, MotionGraph graph,
                                PlanResult plan, PolicyKind policy_kind,
                                ControlParams params);

// Velocity command at x: the active scan's feedback law toward that scan's
// local goal.
Vec2 global_velocity(const GlobalPolicy& policy, Point2 x);

struct TrajectorySample {
  double t = 0.0;
  Point2 position;
  Vec2 velocity;
  int active_scan = -1;  // 0-based scan index; -1 when unavailable
  double navcost = 0.0;
};

struct Trajectory {
  enum class Outcome { Success, Timeout, NoActiveScan };
  std::vector<TrajectorySample> samples;
  Outcome outcome = Outcome::Timeout;
  double elapsed = 0.0;
  double path_length = 0.0;
  Point2 final_position;
};

// Forward-Euler rollout of the global policy from x0 until |x - goal| <=
// goal_tol (Success), t exceeds t_max (Timeout), or no finite-cost scan
// contains x (NoActiveScan). Samples record the pre-step state each step plus
// a terminal row on success.
Trajectory simulate_navigation(const GlobalPolicy& policy, Point2 x0,
                               double dt = 1.0 / 30.0, double t_max = 120.0,
                               double goal_tol = 0.02);

}  // namespace scannav
