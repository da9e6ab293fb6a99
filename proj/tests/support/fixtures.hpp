#pragma once

// Shared worlds and scans for the test suite.

#include <cmath>
#include <vector>

#include "scannav/explore.hpp"
#include "scannav/sensor.hpp"

namespace fixtures {

using namespace scannav;

// Hand-built diamond: center origin, four unit-range points on the axes.
inline Scan diamond_scan() {
  Scan scan;
  scan.id = 1;
  scan.center = {0.0, 0.0};
  scan.points = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}};
  scan.r_max = 3.0;
  return scan;
}

// Synthetic all-max-range scan (disk-like safe polygon).
inline Scan disk_scan(Point2 center, double r_max, int rays = 90, int id = 1) {
  Scan scan;
  scan.id = id;
  scan.center = center;
  scan.r_max = r_max;
  scan.points.reserve(rays + 1);
  for (int k = 0; k < rays; ++k) {
    const double th = 2.0 * M_PI * k / rays;
    scan.points.push_back(center + r_max * Vec2{std::cos(th), std::sin(th)});
  }
  scan.points.push_back(scan.points.front());
  return scan;
}

inline World square_world(double half, double robot_radius = 0.25) {
  World world;
  world.workspace = {{-half, -half}, {half, -half}, {half, half},
                     {-half, half}};
  world.robot_radius = robot_radius;
  return world;
}

// L-shaped room: a 4x4 square missing its top-right 2x2 quadrant.
inline World l_room_world() {
  World world;
  world.workspace = {{0.0, 0.0}, {4.0, 0.0}, {4.0, 2.0},
                     {2.0, 2.0}, {2.0, 4.0}, {0.0, 4.0}};
  world.robot_radius = 0.25;
  return world;
}

// 6x6 room with a 1.5x1.5 block in the middle.
inline World room_with_block() {
  World world = square_world(3.0);
  world.obstacles.push_back(
      {{-0.75, -0.75}, {0.75, -0.75}, {0.75, 0.75}, {-0.75, 0.75}});
  return world;
}

// 16x6 office: three rooms separated by 0.2 m walls with 1.4 m doorways
// centered on y = 0.
inline World office_world() {
  World world;
  world.workspace = {{-8.0, -3.0}, {8.0, -3.0}, {8.0, 3.0}, {-8.0, 3.0}};
  world.robot_radius = 0.25;
  auto wall = [](double x0, double x1, double y0, double y1) {
    return std::vector<Point2>{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  };
  world.obstacles.push_back(wall(-2.6, -2.4, -3.0, -0.7));
  world.obstacles.push_back(wall(-2.6, -2.4, 0.7, 3.0));
  world.obstacles.push_back(wall(2.4, 2.6, -3.0, -0.7));
  world.obstacles.push_back(wall(2.4, 2.6, 0.7, 3.0));
  return world;
}

// Scan centers giving full office coverage: room grids plus doorway scans.
inline std::vector<Point2> office_centers() {
  std::vector<Point2> centers;
  for (double x : {-6.5, -4.0}) {
    for (double y : {-1.3, 1.3}) centers.push_back({x, y});
  }
  centers.push_back({-2.5, 0.0});
  for (double x : {-1.0, 1.0}) {
    for (double y : {-1.3, 1.3}) centers.push_back({x, y});
  }
  centers.push_back({2.5, 0.0});
  for (double x : {4.0, 6.5}) {
    for (double y : {-1.3, 1.3}) centers.push_back({x, y});
  }
  return centers;
}

// 7x7 room with a 4x4 central block: a square ring corridor of width 1.5.
inline World loop_world() {
  World world = square_world(3.5);
  world.obstacles.push_back(
      {{-2.0, -2.0}, {2.0, -2.0}, {2.0, 2.0}, {-2.0, 2.0}});
  return world;
}

// Centers along the corridor centerline (radius 2.75 square ring), spaced
// evenly; `count` positions starting at angle `phase` (fraction of the ring).
inline std::vector<Point2> ring_centers(int count, double phase = 0.0) {
  std::vector<Point2> centers;
  const double side = 5.5;
  const double perimeter = 4.0 * side;
  for (int k = 0; k < count; ++k) {
    double s = std::fmod(phase * perimeter + perimeter * k / count, perimeter);
    Point2 p;
    if (s < side) {
      p = {-2.75 + s, -2.75};
    } else if (s < 2 * side) {
      p = {2.75, -2.75 + (s - side)};
    } else if (s < 3 * side) {
      p = {2.75 - (s - 2 * side), 2.75};
    } else {
      p = {-2.75, 2.75 - (s - 3 * side)};
    }
    centers.push_back(p);
  }
  return centers;
}

inline ScanCollection collect_scans(const World& world,
                                    const SensorConfig& config,
                                    const std::vector<Point2>& centers,
                                    double margin_eps = 1e-3) {
  ScanCollection scans;
  scans.robot_radius = world.robot_radius;
  scans.margin_eps = margin_eps;
  for (Point2 c : centers) {
    scans.add(take_scan(world, config, c, 0));
  }
  return scans;
}

}  // namespace fixtures
