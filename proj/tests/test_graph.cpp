#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "scannav/errors.hpp"
#include "scannav/graph.hpp"
#include "scannav/sensor.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace scannav;

namespace {

ScanCollection two_disks() {
  ScanCollection scans;
  scans.add(fixtures::disk_scan({0.0, 0.0}, 2.0, 360));
  scans.add(fixtures::disk_scan({1.0, 0.0}, 2.0, 360));
  return scans;
}

MotionGraph hand_graph(int vertices,
                       const std::vector<std::pair<int, int>>& edges) {
  MotionGraph g;
  g.vertex_count = vertices;
  g.edges = edges;
  g.weights.assign(edges.size(), 1.0);
  g.adjacency.assign(vertices, {});
  for (auto [i, j] : edges) {
    g.adjacency[i].push_back(j);
    g.adjacency[j].push_back(i);
  }
  return g;
}

// scans along the loop-world ring corridor; dropping ring slot 0 leaves a
// chain with a gap at (-2.75, -2.75)
ScanCollection ring_chain_scans() {
  SensorConfig cfg;
  cfg.num_rays = 360;
  cfg.r_max = 2.5;
  const World world = fixtures::loop_world();
  auto centers = fixtures::ring_centers(12);
  centers.erase(centers.begin());
  return fixtures::collect_scans(world, cfg, centers);
}

}  // namespace

TEST_CASE("motion graph edges require mutual center containment") {
  const ScanCollection close_pair = two_disks();
  const MotionGraph g = build_motion_graph(close_pair);
  CHECK(g.vertex_count == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == std::pair<int, int>{0, 1});
  CHECK(g.weights[0] == doctest::Approx(1.0).epsilon(1e-12));

  // wall between the centers: no edge even though ranges would allow one
  SensorConfig cfg;
  cfg.num_rays = 360;
  cfg.r_max = 3.0;
  const World blocked = fixtures::room_with_block();
  const ScanCollection separated = fixtures::collect_scans(
      blocked, cfg, {{-1.5, 0.0}, {1.5, 0.0}});
  CHECK(build_motion_graph(separated).edges.empty());

  ScanCollection single;
  single.add(fixtures::disk_scan({0.0, 0.0}, 2.0, 360));
  CHECK(build_motion_graph(single).edges.empty());
}

TEST_CASE("adjacency lists mirror the edge set") {
  const ScanCollection scans = ring_chain_scans();
  const MotionGraph g = build_motion_graph(scans);
  for (auto [i, j] : g.edges) {
    CHECK(std::count(g.adjacency[i].begin(), g.adjacency[i].end(), j) == 1);
    CHECK(std::count(g.adjacency[j].begin(), g.adjacency[j].end(), i) == 1);
  }
  size_t degree_sum = 0;
  for (const auto& adj : g.adjacency) degree_sum += adj.size();
  CHECK(degree_sum == 2 * g.edges.size());
}

TEST_CASE("edge embedding") {
  const ScanCollection pair = two_disks();
  const MotionGraph g = build_motion_graph(pair);
  const auto segments = embedding_segments(pair, g);
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].a == pair.scans[0].center);
  CHECK(segments[0].b == pair.scans[1].center);

  ScanCollection single;
  single.add(fixtures::disk_scan({0.0, 0.0}, 2.0, 360));
  CHECK(embedding_segments(single, build_motion_graph(single)).empty());

  // triangle of real scans: every embedding segment stays in free space
  SensorConfig cfg;
  cfg.num_rays = 360;
  cfg.r_max = 3.0;
  const World world = fixtures::square_world(5.0);
  const ScanCollection triangle = fixtures::collect_scans(
      world, cfg, {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}});
  const MotionGraph tg = build_motion_graph(triangle);
  REQUIRE(tg.edges.size() == 3);
  for (const Segment& seg : embedding_segments(triangle, tg)) {
    const int n = static_cast<int>(std::ceil(dist(seg.a, seg.b) / 1e-2));
    for (int k = 0; k <= n; ++k) {
      const Point2 q =
          seg.a + (static_cast<double>(k) / n) * (seg.b - seg.a);
      CHECK(free_space_contains(world, q));
    }
  }
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(hand_graph(2, {})));
  CHECK(is_connected(hand_graph(1, {})));
  CHECK(is_connected(hand_graph(3, {{0, 1}, {1, 2}})));
  CHECK(is_connected(hand_graph(0, {})));

  const MotionGraph chain = hand_graph(3, {{0, 1}, {1, 2}});
  CHECK(is_connected(chain, std::vector<int>{0, 1}));
  CHECK_FALSE(is_connected(chain, std::vector<int>{0, 2}));
  CHECK(is_connected(chain, std::vector<int>{}));
  CHECK(is_connected(chain, std::vector<int>{2}));
}

TEST_CASE("cycle rank") {
  CHECK(cycle_rank(hand_graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 1);
  CHECK(cycle_rank(hand_graph(4, {{0, 1}, {1, 2}, {2, 3}})) == 0);
  // two components, one holding a triangle
  CHECK(cycle_rank(hand_graph(5, {{0, 1}, {1, 2}, {0, 2}})) == 1);
  CHECK(cycle_rank(hand_graph(12, [] {
          std::vector<std::pair<int, int>> ring;
          for (int k = 0; k < 12; ++k) ring.push_back({std::min(k, (k + 1) % 12),
                                                       std::max(k, (k + 1) % 12)});
          return ring;
        }())) == 1);
}

TEST_CASE("scan-constrained subgraph") {
  SensorConfig cfg;
  cfg.num_rays = 360;
  cfg.r_max = 3.0;
  const World world = fixtures::square_world(5.0);
  const ScanCollection triangle = fixtures::collect_scans(
      world, cfg, {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}});
  const MotionGraph g = build_motion_graph(triangle);

  // probing with a member scan keeps it and its neighbors, connected
  for (int i = 0; i < 3; ++i) {
    const ConstrainedGraph sub =
        scan_constrained_subgraph(triangle, g, triangle.scans[i]);
    CHECK(std::count(sub.vertices.begin(), sub.vertices.end(), i) == 1);
    CHECK(sub.vertices.size() == 3);
    CHECK(is_connected(sub));
  }

  // probe far away from every scan: empty, connected by convention
  const Scan far = fixtures::disk_scan({40.0, 40.0}, 2.0, 90);
  const ConstrainedGraph empty = scan_constrained_subgraph(triangle, g, far);
  CHECK(empty.vertices.empty());
  CHECK(is_connected(empty));
}

TEST_CASE("position-constrained subgraph") {
  const ScanCollection pair = two_disks();
  const MotionGraph g = build_motion_graph(pair);

  const ConstrainedGraph at_center =
      position_constrained_subgraph(pair, g, pair.scans[0].center);
  CHECK(std::count(at_center.vertices.begin(), at_center.vertices.end(), 0) ==
        1);

  const ConstrainedGraph overlap =
      position_constrained_subgraph(pair, g, {0.5, 0.0});
  CHECK(overlap.vertices == std::vector<int>{0, 1});
  REQUIRE(overlap.edges.size() == 1);
  CHECK(is_connected(overlap));

  const ConstrainedGraph nowhere =
      position_constrained_subgraph(pair, g, {30.0, 0.0});
  CHECK(nowhere.vertices.empty());
}

TEST_CASE("ring gap splits the constrained subgraphs") {
  const ScanCollection scans = ring_chain_scans();
  const MotionGraph g = build_motion_graph(scans);
  // eleven consecutive corridor scans form a path
  CHECK(g.edges.size() == scans.scans.size() - 1);
  CHECK(is_connected(g));
  CHECK(cycle_rank(g) == 0);

  // the removed slot: both chain ends contain it, but no edge joins them
  const Point2 gap{-2.75, -2.75};
  const ConstrainedGraph sub = position_constrained_subgraph(scans, g, gap);
  CHECK(sub.vertices.size() == 2);
  CHECK(sub.edges.empty());
  CHECK_FALSE(is_connected(sub));
}

TEST_CASE("center triangle safety checks") {
  SensorConfig cfg;
  cfg.num_rays = 360;
  cfg.r_max = 3.0;

  const World empty_room = fixtures::square_world(5.0);
  const ScanCollection open = fixtures::collect_scans(
      empty_room, cfg, {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}});
  const auto all_safe = center_triangle_checks(
      open.scans[0], open.scans[1], open.scans[2], open.robot_radius);
  CHECK(all_safe[0]);
  CHECK(all_safe[1]);
  CHECK(all_safe[2]);

  // hull covering the block: every check fails
  const World blocked = fixtures::room_with_block();
  const ScanCollection around = fixtures::collect_scans(
      blocked, cfg, {{-1.2, 0.0}, {1.2, 0.0}, {0.0, 1.2}});
  const auto all_blocked = center_triangle_checks(
      around.scans[0], around.scans[1], around.scans[2], around.robot_radius);
  CHECK_FALSE(all_blocked[0]);
  CHECK_FALSE(all_blocked[1]);
  CHECK_FALSE(all_blocked[2]);

  const ScanCollection spread = fixtures::collect_scans(
      empty_room, cfg, {{0.0, 0.0}, {2.8, 0.0}, {1.4, 1.0}});
  CHECK_THROWS_AS(center_triangle_checks(spread.scans[0], spread.scans[1],
                                         spread.scans[2],
                                         spread.robot_radius),
                  HypothesisViolated);
}

TEST_CASE("triangle checks agree with the hull-sampling oracle") {
  SensorConfig cfg;
  cfg.num_rays = 360;
  cfg.r_max = 2.0;
  const World world = fixtures::room_with_block();
  std::mt19937 rng(29);
  const double bound = cfg.r_max - world.robot_radius;

  int retained = 0;
  int attempts = 0;
  while (retained < 30 && attempts < 4000) {
    ++attempts;
    Point2 centers[3];
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      try {
        centers[k] = oracles::sample_point(
            rng, -2.75, 2.75, -2.75, 2.75,
            [&](Point2 q) {
              if (!free_space_contains(world, q)) return false;
              for (int j = 0; j < k; ++j) {
                if (dist(q, centers[j]) > bound) return false;
              }
              return true;
            },
            200);
      } catch (const std::runtime_error&) {
        ok = false;
      }
    }
    if (!ok) continue;

    const auto probe = oracles::probe_hull(world, centers[0], centers[1],
                                           centers[2], world.robot_radius);
    if (std::abs(probe.min_clearance - world.robot_radius) < 2e-2) continue;
    ++retained;

    ScanCollection trio;
    trio.robot_radius = world.robot_radius;
    for (Point2 c : centers) trio.add(take_scan(world, cfg, c, 0));
    const auto checks = center_triangle_checks(
        trio.scans[0], trio.scans[1], trio.scans[2], trio.robot_radius);
    CHECK(checks[0] == checks[1]);
    CHECK(checks[1] == checks[2]);
    CHECK(checks[0] == probe.safe);
  }
  CHECK(retained >= 30);
}
