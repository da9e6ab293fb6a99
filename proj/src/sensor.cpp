#include "scannav/sensor.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "scannav/errors.hpp"

namespace scannav {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class F>
void for_each_world_edge(const World& world, F&& f) {
  auto polygon_edges = [&](const std::vector<Point2>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      f(poly[i], poly[(i + 1) % n]);
    }
  };
  polygon_edges(world.workspace);
  for (const auto& obstacle : world.obstacles) polygon_edges(obstacle);
}

}  // namespace

bool point_in_simple_polygon(const std::vector<Point2>& polygon, Point2 q) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& pi = polygon[i];
    const Point2& pj = polygon[j];
    if ((pi.y > q.y) != (pj.y > q.y)) {
      const double x_cross =
          (pj.x - pi.x) * (q.y - pi.y) / (pj.y - pi.y) + pi.x;
      if (q.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

double polygon_boundary_distance(const std::vector<Point2>& polygon,
                                 Point2 q) {
  const std::size_t n = polygon.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, dist_point_segment(q, polygon[i],
                                             polygon[(i + 1) % n]));
  }
  return best;
}

bool free_space_contains(const World& world, Point2 q) {
  if (world.workspace.size() < 3) return false;
  if (!point_in_simple_polygon(world.workspace, q)) return false;
  if (polygon_boundary_distance(world.workspace, q) < world.robot_radius) {
    return false;
  }
  for (const auto& obstacle : world.obstacles) {
    if (point_in_simple_polygon(obstacle, q)) return false;
    if (polygon_boundary_distance(obstacle, q) < world.robot_radius) {
      return false;
    }
  }
  return true;
}

double ray_cast(const World& world, Point2 origin, double angle,
                double r_max) {
  const Vec2 d{std::cos(angle), std::sin(angle)};
  double t_min = r_max;
  for_each_world_edge(world, [&](Point2 a, Point2 b) {
    const Vec2 e = b - a;
    const double den = cross(d, e);
    if (std::fabs(den) < 1e-15) return;  // parallel ray, grazing ignored
    const Vec2 ao = a - origin;
    const double t = cross(ao, e) / den;
    const double s = cross(ao, d) / den;
    if (t > 1e-12 && t < t_min && s >= -1e-12 && s <= 1.0 + 1e-12) {
      t_min = t;
    }
  });
  return t_min;
}

Scan take_scan(const World& world, const SensorConfig& config, Point2 center,
               int id) {
  if (config.num_rays < 3) {
    throw std::invalid_argument("num_rays must be at least 3");
  }
  if (config.r_max <= 0.0) {
    throw std::invalid_argument("r_max must be positive");
  }
  if (!free_space_contains(world, center)) {
    throw InvalidScanCenter("scan center (" + std::to_string(center.x) + ", " +
                            std::to_string(center.y) +
                            ") is not in free space");
  }
  Scan scan;
  scan.id = id;
  scan.center = center;
  scan.r_max = config.r_max;
  scan.points.reserve(config.num_rays + 1);
  for (int k = 0; k < config.num_rays; ++k) {
    const double th = kTwoPi * k / config.num_rays;
    const double r = ray_cast(world, center, th, config.r_max);
    scan.points.push_back(center + r * Vec2{std::cos(th), std::sin(th)});
  }
  scan.points.push_back(scan.points.front());
  return scan;
}

}  // namespace scannav
