#pragma once

#include <vector>

#include "scannav/geometry.hpp"

namespace scannav {

// Polygonal environment: a simple workspace polygon (counter-clockwise) minus
// simple polygonal obstacles, with a disk robot of radius robot_radius.
// Polygons are stored without a closing duplicate vertex.
struct World {
  std::vector<Point2> workspace;
  std::vector<std::vector<Point2>> obstacles;
  double robot_radius = 0.25;
};

struct SensorConfig {
  int num_rays = 1081;
  double r_max = 3.0;
};

// True iff the closed disk of radius robot_radius around q lies inside the
// workspace and outside every obstacle: q is interior to the workspace with
// boundary clearance >= robot_radius, outside each obstacle with clearance
// >= robot_radius.
bool free_space_contains(const World& world, Point2 q);

// Distance from origin along direction `angle` to the first boundary hit
// (workspace or obstacle edges), clamped to r_max when nothing is hit closer.
double ray_cast(const World& world, Point2 origin, double angle, double r_max);

// Casts num_rays evenly spaced rays (angles 2*pi*k/num_rays) from center and
// returns the closed scan. Throws InvalidScanCenter when the center is not in
// free space, std::invalid_argument when num_rays < 16.
Scan take_scan(const World& world, const SensorConfig& config, Point2 center,
               int id);

// Even-odd membership test for a simple polygon (no closing duplicate).
bool point_in_simple_polygon(const std::vector<Point2>& polygon, Point2 q);

// Minimum distance from q to the polygon's boundary edges.
double polygon_boundary_distance(const std::vector<Point2>& polygon, Point2 q);

}  // namespace scannav
