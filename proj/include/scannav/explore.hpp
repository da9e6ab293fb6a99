#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scannav/planner.hpp"
#include "scannav/sensor.hpp"

namespace scannav {

enum class CandidateKind {
  Frontier,
  Bridging,
};

enum class ExploreStatus {
  FrontierPhase,
  BridgingPhase,
  Complete,
};

struct ExploreParams {
  double frontier_eps = 0.05;     // max boundary distance for frontier points
  double frontier_delta = 0.5;    // min obstacle distance for frontier points
  int boundary_samples = 72;      // candidate vertices per scan
  double cluster_link_radius = 0; // <= 0: auto, 2x mean candidate spacing
  int view_samples = 720;         // boundary discretization for dist2bnd
  double observation_inset = 0.05;// pull-back of the navigation goal (m)
  bool bridging_enabled = true;   // false: frontier-only ablation
  int max_steps = 200;
  double goal_tol = 0.02;
  double dt = 1.0 / 30.0;
  double nav_t_max = 120.0;
};

struct BoundaryPoint {
  Point2 position;
  int source_scan = -1;  // index of the scan whose boundary produced it
};

struct CandidateSet {
  std::vector<BoundaryPoint> points;
  double mean_spacing = 0.0;  // mean consecutive-vertex spacing pre-dedup
};

struct Cluster {
  std::vector<int> members;  // indices into the classified candidate list
  int medoid = -1;           // index into the same list
};

struct ObservationChoice {
  Point2 point;
  CandidateKind kind = CandidateKind::Frontier;
  int source_scan = -1;
  double travel_cost = 0.0;
  int cluster_index = -1;
};

struct ExploreStepRecord {
  int step = 0;
  bool selected = false;
  Point2 selected_point;
  CandidateKind kind = CandidateKind::Frontier;
  int scan_id = 0;  // 1-based id of the scan taken this step, 0 if none
  int graph_edges = 0;
  int graph_cycle_rank = 0;
  double path_length = 0.0;
  double travel_cost = 0.0;
  bool frontier_available = false;
  int frontier_candidates = 0;
  int bridging_candidates = 0;
  std::string note;
};

struct ExplorationState {
  ScanCollection scans;
  MotionGraph graph;
  std::vector<SafePolygonView> safer_views;  // aligned with scans
  Point2 robot_position;
  std::vector<Point2> visited_observation_points;
  std::vector<Point2> blocked_observation_points;
  std::vector<Trajectory> trajectory_log;
  std::vector<ExploreStepRecord> step_log;
  ExploreStatus status = ExploreStatus::FrontierPhase;
};

// Safer-polygon boundary vertices of every scan (boundary_samples per scan,
// deduplicated at 1e-3 m), each kept only if some scan's shrunk safe polygon
// contains it. Scans whose safe region is empty contribute nothing. The
// overload with views reuses cached discretizations (subsampling them when the
// sample counts divide evenly).
CandidateSet boundary_candidates(const ScanCollection& scans,
                                 const ExploreParams& params);
CandidateSet boundary_candidates(const ScanCollection& scans,
                                 const std::vector<SafePolygonView>& views,
                                 const ExploreParams& params);

// q is a frontier position: over all scans whose shrunk safe polygon contains
// q, the max distance to the discretized safer boundary stays within
// frontier_eps and the min obstacle distance stays at least frontier_delta.
bool is_frontier(const ScanCollection& scans,
                 const std::vector<SafePolygonView>& views, Point2 q,
                 const ExploreParams& params);

// q is a bridging position: its position-constrained subgraph has at least
// two vertices and is disconnected.
bool is_bridging_position(const ScanCollection& scans,
                          const MotionGraph& graph, Point2 q);

// A scan taken at a bridging position: its scan-constrained subgraph has at
// least two vertices and is disconnected.
bool is_bridging_scan(const ScanCollection& scans, const MotionGraph& graph,
                      const Scan& probe);

// Single-linkage clustering: points within link_radius (transitively) share a
// cluster; the medoid minimizes the total distance to its cluster (ties to
// the lowest index). Clusters are ordered by their smallest member index.
std::vector<Cluster> cluster_candidates(
    const std::vector<BoundaryPoint>& points, double link_radius);

// Picks the next observation point: frontier cluster medoids take priority;
// bridging medoids are considered only when no frontier positives exist.
// Among eligible medoids (not within 0.1 m of a visited or blocked point,
// plannable from the robot position) the minimum plan cost wins, ties to the
// lowest cluster index. Empty optional when nothing is selectable.
std::optional<ObservationChoice> select_observation_point(
    const ExplorationState& state, const std::vector<BoundaryPoint>& frontier,
    const std::vector<BoundaryPoint>& bridging, const ExploreParams& params,
    const ControlParams& control, LocalCostKind cost_kind);

// One sense-plan-act cycle: classify boundary candidates, select an
// observation point (none -> status Complete), navigate to it (goal inset
// toward the source scan center), take a scan there, rebuild the graph.
// Failed navigation or scanning blocks the medoid and leaves a diagnostic in
// the step record.
ExploreStepRecord explore_step(ExplorationState& state, const World& world,
                               const SensorConfig& sensor,
                               const ExploreParams& params,
                               const ControlParams& control,
                               LocalCostKind cost_kind,
                               PolicyKind policy_kind);

// Initial state for an exploration run: one scan taken at start, its safer
// view cached, the single-vertex graph built. Throws InvalidScanCenter when
// start is not in free space.
ExplorationState seed_exploration(const World& world, Point2 start,
                                  const SensorConfig& sensor,
                                  const ExploreParams& params,
                                  const ControlParams& control);

// Full exploration from a starting position: seed scan, then explore_step
// until Complete. Throws InvalidScanCenter when start is not in free space
// and IterationCapExceeded when max_steps cycles pass without completion.
ExplorationState explore(const World& world, Point2 start,
                         const SensorConfig& sensor,
                         const ExploreParams& params,
                         const ControlParams& control,
                         LocalCostKind cost_kind, PolicyKind policy_kind);

}  // namespace scannav
