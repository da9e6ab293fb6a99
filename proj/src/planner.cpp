#include "scannav/planner.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "scannav/errors.hpp"

namespace scannav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ControlParams cost_params_for(const ScanCollection& scans) {
  ControlParams params;
  params.robot_radius = scans.robot_radius;
  params.margin_eps = scans.margin_eps;
  return params;
}

}  // namespace

PlanResult plan(const ScanCollection& scans, const MotionGraph& graph,
                Point2 goal, LocalCostKind cost_kind, PlanMethod method) {
  const int m = static_cast<int>(scans.scans.size());
  const ControlParams params = cost_params_for(scans);

  PlanResult result;
  result.goal = goal;
  result.cost_kind = cost_kind;
  result.scancost.assign(m, kInf);
  result.scangoal.resize(m);
  for (int i = 0; i < m; ++i) result.scangoal[i] = scans.scans[i].center;

  std::vector<char> in_list(m, 0);
  using HeapEntry = std::pair<double, int>;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>,
                      std::greater<HeapEntry>>
      heap;

  bool goal_covered = false;
  for (int i = 0; i < m; ++i) {
    const Scan& scan = scans.scans[i];
    if (safepoly_contains(scan, goal, scans.safer_inflation())) {
      result.scancost[i] = local_cost(cost_kind, scan, scan.center, goal,
                                      params);
      result.scangoal[i] = goal;
      in_list[i] = 1;
      heap.emplace(result.scancost[i], i);
      goal_covered = true;
    }
  }
  if (!goal_covered) {
    throw GoalUnreachable("no scan's shrunk safe polygon contains the goal");
  }

  auto extract_min = [&]() -> int {
    if (method == PlanMethod::LinearScan) {
      int best = -1;
      for (int i = 0; i < m; ++i) {
        if (in_list[i] &&
            (best < 0 || result.scancost[i] < result.scancost[best])) {
          best = i;
        }
      }
      return best;
    }
    while (!heap.empty()) {
      const auto [cost, i] = heap.top();
      if (!in_list[i] || cost != result.scancost[i]) {
        heap.pop();
        continue;
      }
      return i;
    }
    return -1;
  };

  while (true) {
    const int i = extract_min();
    if (i < 0) break;
    in_list[i] = 0;
    const Scan& scan_i = scans.scans[i];
    for (int j : graph.adjacency[i]) {
      const double tempcost =
          local_cost(cost_kind, scan_i, scans.scans[j].center,
                     result.scangoal[i], params);
      if (result.scancost[j] > result.scancost[i] + tempcost) {
        result.scancost[j] = result.scancost[i] + tempcost;
        result.scangoal[j] = scan_i.center;
        in_list[j] = 1;
        heap.emplace(result.scancost[j], j);
      }
    }
  }
  return result;
}

bool check_bellman(const ScanCollection& scans, const MotionGraph& graph,
                   const PlanResult& plan) {
  const ControlParams params = cost_params_for(scans);
  const double inflation = scans.safer_inflation();
  auto holds = [&](int a, int b) {
    if (std::isinf(plan.scancost[a]) || std::isinf(plan.scancost[b])) {
      return true;
    }
    const Scan& scan_b = scans.scans[b];
    const double rhs =
        plan.scancost[b] + local_cost(plan.cost_kind, scan_b,
                                      scans.scans[a].center, plan.scangoal[b],
                                      params);
    if (safepoly_contains(scans.scans[a], plan.goal, inflation)) {
      return plan.scancost[a] < rhs;
    }
    return plan.scancost[a] <= rhs + 1e-9;
  };
  for (const auto& [i, j] : graph.edges) {
    if (!holds(i, j) || !holds(j, i)) return false;
  }
  return true;
}

int active_scan(const ScanCollection& scans, const PlanResult& plan,
                Point2 x) {
  const double inflation = scans.safe_inflation();
  int best = -1;
  bool contained = false;
  for (int i = 0; i < static_cast<int>(scans.scans.size()); ++i) {
    if (!safepoly_contains(scans.scans[i], x, inflation)) continue;
    contained = true;
    if (std::isinf(plan.scancost[i])) continue;
    if (best < 0 || plan.scancost[i] < plan.scancost[best]) best = i;
  }
  if (best < 0) {
    throw NoActiveScan(contained
                           ? "every scan containing x has infinite cost"
                           : "no safe polygon contains x");
  }
  return best;
}

GlobalPolicy make_global_policy(ScanCollection scans, MotionGraph graph,
                                PlanResult plan, PolicyKind policy_kind,
                                ControlParams params) {
  if (params.robot_radius != scans.robot_radius ||
      params.margin_eps != scans.margin_eps) {
    throw std::invalid_argument(
        "control params and scan collection disagree on radius or margin");
  }
  GlobalPolicy policy;
  policy.scans = std::move(scans);
  policy.graph = std::move(graph);
  policy.plan = std::move(plan);
  policy.policy_kind = policy_kind;
  policy.params = params;
  return policy;
}

namespace {

double sample_navcost(const GlobalPolicy& policy, const Scan& scan, Point2 x,
                      Point2 local_goal) {
  if (policy.policy_kind == PolicyKind::MoveThroughCenter) {
    return navcost_center(scan, x, local_goal);
  }
  return navcost_projected(scan, x, local_goal, policy.params);
}

}  // namespace

Vec2 global_velocity(const GlobalPolicy& policy, Point2 x) {
  const int i = active_scan(policy.scans, policy.plan, x);
  const Scan& scan = policy.scans.scans[i];
  const Point2 y = policy.plan.scangoal[i];
  if (policy.policy_kind == PolicyKind::MoveThroughCenter) {
    return move_through_center(scan, x, y, policy.params);
  }
  return move_to_projected_goal(scan, x, y, policy.params);
}

Trajectory simulate_navigation(const GlobalPolicy& policy, Point2 x0,
                               double dt, double t_max, double goal_tol) {
  Trajectory traj;
  Point2 x = x0;
  double t = 0.0;
  const Point2 goal = policy.plan.goal;
  int last_active = -1;

  while (true) {
    if (dist(x, goal) <= goal_tol) {
      traj.outcome = Trajectory::Outcome::Success;
      break;
    }
    if (t > t_max) {
      traj.outcome = Trajectory::Outcome::Timeout;
      break;
    }
    int i;
    try {
      i = active_scan(policy.scans, policy.plan, x);
    } catch (const NoActiveScan&) {
      traj.outcome = Trajectory::Outcome::NoActiveScan;
      break;
    }
    last_active = i;
    const Scan& scan = policy.scans.scans[i];
    const Point2 y = policy.plan.scangoal[i];
    const Vec2 v = policy.policy_kind == PolicyKind::MoveThroughCenter
                       ? move_through_center(scan, x, y, policy.params)
                       : move_to_projected_goal(scan, x, y, policy.params);
    traj.samples.push_back(
        {t, x, v, i, sample_navcost(policy, scan, x, y)});
    x = x + dt * v;
    traj.path_length += dt * norm(v);
    t += dt;
  }

  if (traj.outcome == Trajectory::Outcome::Success) {
    int i = last_active;
    try {
      i = active_scan(policy.scans, policy.plan, x);
    } catch (const NoActiveScan&) {
      // keep the last known active scan for the terminal row
    }
    double navcost = 0.0;
    if (i >= 0) {
      try {
        navcost = sample_navcost(policy, policy.scans.scans[i], x,
                                 policy.plan.scangoal[i]);
      } catch (const OutOfDomain&) {
        navcost = 0.0;  // terminal row only; x can sit on a polygon edge
      }
    }
    traj.samples.push_back({t, x, Vec2{0.0, 0.0}, i, navcost});
  }
  traj.elapsed = t;
  traj.final_position = x;
  return traj;
}

}  // namespace scannav
