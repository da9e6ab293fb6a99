#include "scannav/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace scannav {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

}  // namespace

SvgCanvas::SvgCanvas(double min_x, double min_y, double max_x, double max_y,
                     double pixels_per_meter)
    : min_x_(min_x),
      min_y_(min_y),
      max_x_(max_x),
      max_y_(max_y),
      scale_(pixels_per_meter),
      pad_(16.0) {}

double SvgCanvas::px(double x) const { return pad_ + (x - min_x_) * scale_; }
double SvgCanvas::py(double y) const { return pad_ + (max_y_ - y) * scale_; }

void SvgCanvas::polyline(const std::vector<Point2>& points,
                         const std::string& stroke, double width_px,
                         bool closed, const std::string& fill,
                         double fill_opacity) {
  if (points.size() < 2) return;
  std::string d = "M " + num(px(points[0].x)) + " " + num(py(points[0].y));
  for (std::size_t i = 1; i < points.size(); ++i) {
    d += " L " + num(px(points[i].x)) + " " + num(py(points[i].y));
  }
  if (closed) d += " Z";
  body_ += "<path d=\"" + d + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
           num(width_px) + "\" fill=\"" + fill + "\"";
  if (fill != "none" && fill_opacity < 1.0) {
    body_ += " fill-opacity=\"" + num(fill_opacity) + "\"";
  }
  body_ += "/>\n";
}

void SvgCanvas::segment(Point2 a, Point2 b, const std::string& stroke,
                        double width_px) {
  body_ += "<line x1=\"" + num(px(a.x)) + "\" y1=\"" + num(py(a.y)) +
           "\" x2=\"" + num(px(b.x)) + "\" y2=\"" + num(py(b.y)) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width_px) +
           "\"/>\n";
}

void SvgCanvas::circle(Point2 center, double radius_px,
                       const std::string& fill, const std::string& stroke,
                       double stroke_px) {
  body_ += "<circle cx=\"" + num(px(center.x)) + "\" cy=\"" +
           num(py(center.y)) + "\" r=\"" + num(radius_px) + "\" fill=\"" +
           fill + "\"";
  if (stroke != "none" && stroke_px > 0.0) {
    body_ += " stroke=\"" + stroke + "\" stroke-width=\"" + num(stroke_px) +
             "\"";
  }
  body_ += "/>\n";
}

void SvgCanvas::arrow(Point2 base, Vec2 direction, double length_m,
                      const std::string& color, double width_px) {
  const double n = norm(direction);
  if (n < 1e-12 || length_m <= 0.0) {
    circle(base, 1.2, color);
    return;
  }
  const Vec2 u = (1.0 / n) * direction;
  const Point2 tip = base + length_m * u;
  segment(base, tip, color, width_px);
  const Vec2 left{-u.y, u.x};
  const double head = 0.3 * length_m;
  segment(tip, tip + head * (left - u), color, width_px);
  segment(tip, tip + head * ((-1.0) * left - u), color, width_px);
}

void SvgCanvas::label(Point2 at, const std::string& text, double size_px,
                      const std::string& fill) {
  body_ += "<text x=\"" + num(px(at.x)) + "\" y=\"" + num(py(at.y)) +
           "\" font-size=\"" + num(size_px) +
           "\" font-family=\"sans-serif\" fill=\"" + fill + "\">" + text +
           "</text>\n";
}

std::string SvgCanvas::finish() const {
  const double w = 2 * pad_ + (max_x_ - min_x_) * scale_;
  const double h = 2 * pad_ + (max_y_ - min_y_) * scale_;
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
         "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " +
         num(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n" +
         body_ + "</svg>\n";
}

std::string scan_color(int index) {
  const int n = static_cast<int>(sizeof kPalette / sizeof kPalette[0]);
  return kPalette[((index % n) + n) % n];
}

void draw_world(SvgCanvas& canvas, const World& world) {
  canvas.polyline(world.workspace, "#222", 2.0, true, "#f4f4f4");
  for (const auto& obstacle : world.obstacles) {
    canvas.polyline(obstacle, "#444", 1.5, true, "#999", 0.9);
  }
}

void draw_scan_polygons(SvgCanvas& canvas, const ScanCollection& scans) {
  for (std::size_t i = 0; i < scans.scans.size(); ++i) {
    canvas.polyline(scans.scans[i].points, scan_color(static_cast<int>(i)),
                    1.0, false, scan_color(static_cast<int>(i)), 0.08);
  }
}

void draw_safer_boundaries(SvgCanvas& canvas,
                           const std::vector<SafePolygonView>& views) {
  for (std::size_t i = 0; i < views.size(); ++i) {
    if (views[i].boundary.size() < 2) continue;
    std::vector<Point2> closed = views[i].boundary;
    closed.push_back(closed.front());
    canvas.polyline(closed, scan_color(static_cast<int>(i)), 0.8);
  }
}

void draw_graph(SvgCanvas& canvas, const ScanCollection& scans,
                const MotionGraph& graph) {
  for (const auto& [i, j] : graph.edges) {
    canvas.segment(scans.scans[i].center, scans.scans[j].center, "#333", 1.5);
  }
  for (std::size_t i = 0; i < scans.scans.size(); ++i) {
    canvas.circle(scans.scans[i].center, 4.0,
                  scan_color(static_cast<int>(i)), "#222", 1.0);
  }
}

void draw_trajectory(SvgCanvas& canvas, const Trajectory& trajectory,
                     const std::string& color) {
  std::vector<Point2> points;
  points.reserve(trajectory.samples.size());
  for (const TrajectorySample& s : trajectory.samples) {
    points.push_back(s.position);
  }
  canvas.polyline(points, color, 2.0);
  if (!points.empty()) {
    canvas.circle(points.front(), 3.0, color);
    canvas.circle(points.back(), 3.0, "#fff", color, 2.0);
  }
}

void draw_field(SvgCanvas& canvas, const std::vector<FieldSample>& samples,
                double arrow_scale) {
  for (const FieldSample& s : samples) {
    const double speed = norm(s.velocity);
    canvas.arrow(s.position, s.velocity, speed * arrow_scale,
                 scan_color(s.scan_id - 1), 1.0);
  }
}

SvgCanvas canvas_for_world(const World& world, double margin) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (Point2 p : world.workspace) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  return SvgCanvas(min_x - margin, min_y - margin, max_x + margin,
                   max_y + margin);
}

std::string render_navigation_svg(const World& world,
                                  const ScanCollection& scans,
                                  const MotionGraph& graph,
                                  const Trajectory& trajectory, Point2 goal) {
  SvgCanvas canvas = canvas_for_world(world);
  draw_world(canvas, world);
  draw_scan_polygons(canvas, scans);
  draw_graph(canvas, scans, graph);
  draw_trajectory(canvas, trajectory);
  canvas.circle(goal, 5.0, "none", "#d62728", 2.0);
  return canvas.finish();
}

std::string render_exploration_svg(const World& world,
                                   const ExplorationState& state) {
  SvgCanvas canvas = canvas_for_world(world);
  draw_world(canvas, world);
  draw_scan_polygons(canvas, state.scans);
  draw_safer_boundaries(canvas, state.safer_views);
  for (const Trajectory& traj : state.trajectory_log) {
    draw_trajectory(canvas, traj, "#d6272880");
  }
  draw_graph(canvas, state.scans, state.graph);
  canvas.circle(state.robot_position, 4.0, "#d62728", "#222", 1.0);
  return canvas.finish();
}

std::string render_field_svg(const World& world, const ScanCollection& scans,
                             const std::vector<FieldSample>& samples,
                             Point2 goal, double arrow_scale) {
  SvgCanvas canvas = canvas_for_world(world);
  draw_world(canvas, world);
  draw_scan_polygons(canvas, scans);
  draw_field(canvas, samples, arrow_scale);
  canvas.circle(goal, 5.0, "none", "#d62728", 2.0);
  return canvas.finish();
}

}  // namespace scannav
