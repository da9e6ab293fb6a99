#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scannav/explore.hpp"

namespace scannav {

// World files: { "workspace": [[x,y],...], "obstacles": [[[x,y],...],...],
//               "robot_radius": number }
// Loading normalizes the workspace to counter-clockwise order.
World load_world(const std::filesystem::path& path);
void save_world(const World& world, const std::filesystem::path& path);

// Scan sets: { robot_radius, margin_eps,
//              scans: [{id, center, r_max, points}] }
// Loading validates every scan (closure, range bounds, angular order).
ScanCollection load_scan_set(const std::filesystem::path& path);
void save_scan_set(const ScanCollection& scans,
                   const std::filesystem::path& path);

// Graphs: { vertices: [{id, center}], edges: [{i, j, weight}] } where i/j are
// scan ids. Loading maps ids back to 0-based indices by vertex order.
MotionGraph load_graph(const std::filesystem::path& path);
void save_graph(const ScanCollection& scans, const MotionGraph& graph,
                const std::filesystem::path& path);

// Plans: { goal, cost_kind, scans: {"<id>": {cost: number|null, goal}} }
// where a null cost marks an unreachable scan.
PlanResult load_plan(const std::filesystem::path& path);
void save_plan(const ScanCollection& scans, const PlanResult& plan,
               const std::filesystem::path& path);

// Time series CSV "t,x,y,vx,vy,active_scan,navcost"; active_scan is the
// 1-based scan id, 0 when no scan was available.
std::string trajectory_csv(const ScanCollection& scans,
                           const Trajectory& trajectory);

struct FieldSample {
  Point2 position;
  Vec2 velocity;
  int scan_id = 0;  // 1-based, 0 = outside every safe polygon
};

// Vector field CSV "x,y,vx,vy,active_scan" (same id convention).
std::string field_csv(const std::vector<FieldSample>& samples);

// Exploration report: run summary plus per-step records.
void save_explore_report(const ExplorationState& state,
                         const std::filesystem::path& path);

std::string to_string(CandidateKind kind);
std::string to_string(ExploreStatus status);
LocalCostKind parse_cost_kind(const std::string& name);
PolicyKind parse_policy_kind(const std::string& name);

// Run configuration consumed by the CLI. Relative paths resolve against the
// config file's directory.
struct RunConfig {
  std::filesystem::path world_path;
  SensorConfig sensor;
  ControlParams control;  // robot_radius is overwritten from the world file
  PolicyKind policy = PolicyKind::MoveToProjectedGoal;
  LocalCostKind cost_kind = LocalCostKind::CentroidalDistance;
  double dt = 1.0 / 30.0;
  double t_max = 120.0;
  double goal_tol = 0.02;
  unsigned seed = 0;
  bool has_start = false;
  Point2 start;
  bool has_goal = false;
  Point2 goal;
  std::vector<Point2> scan_centers;
  std::filesystem::path scan_set_path;  // empty: take scans at scan_centers
  ExploreParams explore;
  double grid_step = 0.05;
  std::filesystem::path out_dir;  // empty: directory named after the config
};

RunConfig load_run_config(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace scannav
