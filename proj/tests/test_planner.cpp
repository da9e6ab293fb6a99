#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "scannav/errors.hpp"
#include "scannav/planner.hpp"
#include "scannav/sensor.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace scannav;

namespace {

// scans 1-2-3 in a row plus a far disconnected scan 4; goal reachable only
// through scan 3
struct ChainFixture {
  ScanCollection scans;
  MotionGraph graph;
  Point2 goal{3.9, 0.0};

  ChainFixture() {
    scans.add(fixtures::disk_scan({0.0, 0.0}, 2.0, 360));
    scans.add(fixtures::disk_scan({1.5, 0.0}, 2.0, 360));
    scans.add(fixtures::disk_scan({3.0, 0.0}, 2.0, 360));
    scans.add(fixtures::disk_scan({10.0, 0.0}, 2.0, 360));
    graph = build_motion_graph(scans);
  }
};

}  // namespace

TEST_CASE("plan: single scan holding the goal") {
  ScanCollection scans;
  scans.add(fixtures::disk_scan({0.0, 0.0}, 2.0, 360));
  const MotionGraph graph = build_motion_graph(scans);
  const Point2 goal{0.5, 0.5};
  const PlanResult result =
      plan(scans, graph, goal, LocalCostKind::CentroidalDistance);
  REQUIRE(result.scancost.size() == 1);
  CHECK(result.scancost[0] ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(result.scangoal[0] == goal);
}

TEST_CASE("plan: chain relaxation and the disconnected scan") {
  const ChainFixture fx;
  REQUIRE(fx.graph.edges.size() == 2);  // 1-2 and 2-3 only

  const PlanResult result =
      plan(fx.scans, fx.graph, fx.goal, LocalCostKind::UniformConstant);
  CHECK(result.scancost[0] == doctest::Approx(3.0));
  CHECK(result.scancost[1] == doctest::Approx(2.0));
  CHECK(result.scancost[2] == doctest::Approx(1.0));
  CHECK(std::isinf(result.scancost[3]));
  CHECK(result.scangoal[0] == fx.scans.scans[1].center);
  CHECK(result.scangoal[1] == fx.scans.scans[2].center);
  CHECK(result.scangoal[2] == fx.goal);
  // unreached scans keep their own center as the local goal
  CHECK(result.scangoal[3] == fx.scans.scans[3].center);

  CHECK(check_bellman(fx.scans, fx.graph, result));
  PlanResult tampered = result;
  tampered.scancost[1] += 1.0;
  CHECK_FALSE(check_bellman(fx.scans, fx.graph, tampered));
}

TEST_CASE("plan: goal outside every safer polygon") {
  const ChainFixture fx;
  CHECK_THROWS_AS(
      plan(fx.scans, fx.graph, {8.0, 0.0}, LocalCostKind::UniformConstant),
      GoalUnreachable);
}

TEST_CASE("heap and linear extraction produce identical plans") {
  SensorConfig cfg;
  cfg.num_rays = 180;
  cfg.r_max = 2.0;
  const World world = fixtures::square_world(5.0);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> coord(-2.4, 2.4);
  for (int trial = 0; trial < 10; ++trial) {
    ScanCollection scans;
    const int m = 3 + trial % 5;
    for (int k = 0; k < m; ++k) {
      scans.add(take_scan(world, cfg, {coord(rng), coord(rng)}, 0));
    }
    const MotionGraph graph = build_motion_graph(scans);
    const Point2 anchor = scans.scans[trial % m].center;
    const Point2 goal = anchor + Vec2{0.3, -0.2};
    for (LocalCostKind kind : {LocalCostKind::UniformConstant,
                               LocalCostKind::CentroidalDistance,
                               LocalCostKind::DistanceToGoal}) {
      const PlanResult heap =
          plan(scans, graph, goal, kind, PlanMethod::BinaryHeap);
      const PlanResult linear =
          plan(scans, graph, goal, kind, PlanMethod::LinearScan);
      REQUIRE(heap.scancost.size() == linear.scancost.size());
      for (size_t i = 0; i < heap.scancost.size(); ++i) {
        if (std::isinf(heap.scancost[i])) {
          CHECK(std::isinf(linear.scancost[i]));
        } else {
          CHECK(heap.scancost[i] ==
                doctest::Approx(linear.scancost[i]).epsilon(1e-12));
        }
        CHECK(heap.scangoal[i] == linear.scangoal[i]);
      }
    }
  }
}

TEST_CASE("plan costs match exhaustive path enumeration") {
  SensorConfig cfg;
  cfg.num_rays = 180;
  cfg.r_max = 2.0;
  const World world = fixtures::square_world(5.0);
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> coord(-2.4, 2.4);
  for (int trial = 0; trial < 10; ++trial) {
    ScanCollection scans;
    const int m = 3 + trial % 4;
    for (int k = 0; k < m; ++k) {
      scans.add(take_scan(world, cfg, {coord(rng), coord(rng)}, 0));
    }
    const MotionGraph graph = build_motion_graph(scans);
    const Point2 goal = scans.scans[0].center + Vec2{0.2, 0.1};
    for (LocalCostKind kind : {LocalCostKind::UniformConstant,
                               LocalCostKind::CentroidalDistance}) {
      const PlanResult result = plan(scans, graph, goal, kind);
      const auto expected =
          oracles::enumerate_scancosts(scans, graph, goal, kind);
      for (int i = 0; i < m; ++i) {
        if (std::isinf(expected[i])) {
          CHECK(std::isinf(result.scancost[i]));
        } else {
          CHECK(std::abs(result.scancost[i] - expected[i]) <= 1e-9);
        }
      }
      CHECK(check_bellman(scans, graph, result));
    }
  }
}

TEST_CASE("active scan selection") {
  const ChainFixture fx;
  const PlanResult result =
      plan(fx.scans, fx.graph, fx.goal, LocalCostKind::UniformConstant);

  // overlap of scans 2 and 3: the cheaper scan 3 wins
  CHECK(active_scan(fx.scans, result, {2.2, 0.0}) == 2);
  // inside scan 1 only
  CHECK(active_scan(fx.scans, result, {-1.2, 0.0}) == 0);
  // outside every safe polygon
  CHECK_THROWS_AS(active_scan(fx.scans, result, {20.0, 0.0}), NoActiveScan);
  // inside a scan that never reaches the goal
  CHECK_THROWS_AS(active_scan(fx.scans, result, {10.0, 0.0}), NoActiveScan);
}

TEST_CASE("active scan ties break to the smallest index") {
  ScanCollection scans;
  scans.add(fixtures::disk_scan({0.0, 0.0}, 2.0, 360));
  scans.add(fixtures::disk_scan({1.0, 0.0}, 2.0, 360));
  const MotionGraph graph = build_motion_graph(scans);
  // goal in both safer polygons: both scans cost exactly 1
  const PlanResult result =
      plan(scans, graph, {0.5, 0.0}, LocalCostKind::UniformConstant);
  CHECK(result.scancost[0] == doctest::Approx(1.0));
  CHECK(result.scancost[1] == doctest::Approx(1.0));
  CHECK(active_scan(scans, result, {0.5, 0.2}) == 0);
}

TEST_CASE("global velocity follows the planned local goals") {
  const ChainFixture fx;
  ControlParams params;
  const PlanResult result =
      plan(fx.scans, fx.graph, fx.goal, LocalCostKind::UniformConstant);
  const GlobalPolicy policy =
      make_global_policy(fx.scans, fx.graph, result,
                         PolicyKind::MoveToProjectedGoal, params);

  // x in the goal scan with the goal visible: straightclamped pull
  const Vec2 near_goal = global_velocity(policy, {3.5, 0.0});
  CHECK(near_goal.x == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(near_goal.y == doctest::Approx(0.0));

  // x in a non-goal scan: velocity points at the next center on the plan
  const Vec2 toward_next = global_velocity(policy, {0.3, 0.0});
  CHECK(toward_next.x > 0.0);
  CHECK(toward_next.y == doctest::Approx(0.0));

  // at the goal: zero command
  const Vec2 at_goal = global_velocity(policy, fx.goal);
  CHECK(norm(at_goal) == doctest::Approx(0.0));
}

TEST_CASE("policy construction validates shared parameters") {
  const ChainFixture fx;
  const PlanResult result =
      plan(fx.scans, fx.graph, fx.goal, LocalCostKind::UniformConstant);
  ControlParams mismatched;
  mismatched.robot_radius = 0.3;
  CHECK_THROWS_AS(
      make_global_policy(fx.scans, fx.graph, result,
                         PolicyKind::MoveToProjectedGoal, mismatched),
      std::invalid_argument);
}

TEST_CASE("navigation simulation") {
  const ChainFixture fx;
  ControlParams params;
  const PlanResult result =
      plan(fx.scans, fx.graph, fx.goal, LocalCostKind::CentroidalDistance);
  const GlobalPolicy policy =
      make_global_policy(fx.scans, fx.graph, result,
                         PolicyKind::MoveToProjectedGoal, params);

  // starting at the goal succeeds immediately
  const Trajectory at_goal = simulate_navigation(policy, fx.goal);
  CHECK(at_goal.outcome == Trajectory::Outcome::Success);
  CHECK(at_goal.elapsed == doctest::Approx(0.0));
  CHECK(at_goal.final_position == fx.goal);
  REQUIRE(!at_goal.samples.empty());

  // full run from the far end of the chain
  const Trajectory run = simulate_navigation(policy, {-1.2, 0.0});
  CHECK(run.outcome == Trajectory::Outcome::Success);
  CHECK(dist(run.final_position, fx.goal) <= 0.02);
  CHECK(run.path_length > 4.0);

  // active-scan costs never increase, and strictly drop on each switch
  double prev_cost = std::numeric_limits<double>::infinity();
  int prev_scan = -1;
  int switches = 0;
  for (const TrajectorySample& sample : run.samples) {
    REQUIRE(sample.active_scan >= 0);
    const double cost = result.scancost[sample.active_scan];
    CHECK(cost <= prev_cost + 1e-12);
    if (prev_scan >= 0 && sample.active_scan != prev_scan) {
      ++switches;
      CHECK(cost < prev_cost);
    }
    prev_cost = cost;
    prev_scan = sample.active_scan;
  }
  CHECK(switches >= 1);
  const int m = static_cast<int>(fx.scans.scans.size());
  CHECK(switches <= m * m);

  // a start inside the disconnected scan fails with no active scan
  const Trajectory lost = simulate_navigation(policy, {10.0, 0.0});
  CHECK(lost.outcome == Trajectory::Outcome::NoActiveScan);

  // a tiny time budget forces a timeout
  const Trajectory slow =
      simulate_navigation(policy, {-1.2, 0.0}, 1.0 / 30.0, 0.5, 0.02);
  CHECK(slow.outcome == Trajectory::Outcome::Timeout);
}

TEST_CASE("trajectory stays inside the safe polygon union") {
  SensorConfig cfg;
  cfg.num_rays = 360;
  cfg.r_max = 3.0;
  const World world = fixtures::room_with_block();
  const ScanCollection scans = fixtures::collect_scans(
      world, cfg,
      {{-1.8, -1.8}, {-1.8, 0.0}, {-1.8, 1.8}, {0.0, 1.8},
       {1.8, 1.8}, {1.8, 0.0}, {1.8, -1.8}, {0.0, -1.8}});
  const MotionGraph graph = build_motion_graph(scans);
  const Point2 goal{1.8, -1.5};
  const PlanResult result =
      plan(scans, graph, goal, LocalCostKind::CentroidalDistance);
  ControlParams params;
  const GlobalPolicy policy = make_global_policy(
      scans, graph, result, PolicyKind::MoveToProjectedGoal, params);
  const Trajectory run = simulate_navigation(policy, {-1.8, -1.5});
  CHECK(run.outcome == Trajectory::Outcome::Success);
  for (const TrajectorySample& sample : run.samples) {
    CHECK(free_space_contains(world, sample.position));
    bool inside_union = false;
    for (const Scan& scan : scans.scans) {
      if (safepoly_contains(scan, sample.position, scans.robot_radius)) {
        inside_union = true;
        break;
      }
    }
    CHECK(inside_union);
  }
}
