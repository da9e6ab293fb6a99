#pragma once

#include <string>
#include <vector>

#include "scannav/explore.hpp"
#include "scannav/serialize.hpp"

namespace scannav {

// Tiny SVG scene builder in world coordinates (y grows upward; the canvas
// flips it for screen space).
class SvgCanvas {
 public:
  SvgCanvas(double min_x, double min_y, double max_x, double max_y,
            double pixels_per_meter = 80.0);

  void polyline(const std::vector<Point2>& points, const std::string& stroke,
                double width_px, bool closed = false,
                const std::string& fill = "none", double fill_opacity = 1.0);
  void segment(Point2 a, Point2 b, const std::string& stroke, double width_px);
  void circle(Point2 center, double radius_px, const std::string& fill,
              const std::string& stroke = "none", double stroke_px = 0.0);
  void arrow(Point2 base, Vec2 direction, double length_m,
             const std::string& color, double width_px);
  void label(Point2 at, const std::string& text, double size_px,
             const std::string& fill = "#333");
  std::string finish() const;

 private:
  double px(double x) const;
  double py(double y) const;
  double min_x_, min_y_, max_x_, max_y_, scale_, pad_;
  std::string body_;
};

// Color for the k-th scan (cycled palette).
std::string scan_color(int index);

void draw_world(SvgCanvas& canvas, const World& world);
void draw_scan_polygons(SvgCanvas& canvas, const ScanCollection& scans);
void draw_safer_boundaries(SvgCanvas& canvas,
                           const std::vector<SafePolygonView>& views);
void draw_graph(SvgCanvas& canvas, const ScanCollection& scans,
                const MotionGraph& graph);
void draw_trajectory(SvgCanvas& canvas, const Trajectory& trajectory,
                     const std::string& color = "#d62728");
void draw_field(SvgCanvas& canvas, const std::vector<FieldSample>& samples,
                double arrow_scale);

// Bounds of the workspace padded by `margin` meters.
SvgCanvas canvas_for_world(const World& world, double margin = 0.5);

std::string render_navigation_svg(const World& world,
                                  const ScanCollection& scans,
                                  const MotionGraph& graph,
                                  const Trajectory& trajectory, Point2 goal);
std::string render_exploration_svg(const World& world,
                                   const ExplorationState& state);
std::string render_field_svg(const World& world, const ScanCollection& scans,
                             const std::vector<FieldSample>& samples,
                             Point2 goal, double arrow_scale);

}  // namespace scannav
