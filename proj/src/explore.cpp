#include "scannav/explore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scannav/errors.hpp"

namespace scannav {

namespace {

constexpr double kDedupRadius = 1e-3;    // m, candidate deduplication
constexpr double kVisitedRadius = 0.1;   // m, observation-point blacklist

std::vector<BoundaryPoint> view_candidates(const SafePolygonView& view,
                                           int source, int boundary_samples,
                                           double* spacing_sum,
                                           int* spacing_count) {
  std::vector<BoundaryPoint> out;
  const int n = static_cast<int>(view.boundary.size());
  if (n == 0) return out;
  const int stride = (n % boundary_samples == 0) ? n / boundary_samples : 1;
  for (int k = 0; k < n; k += stride) {
    out.push_back({view.boundary[k], source});
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Point2 a = out[k].position;
    const Point2 b = out[(k + 1) % out.size()].position;
    *spacing_sum += dist(a, b);
    ++(*spacing_count);
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool near_any(Point2 q, const std::vector<Point2>& points, double radius) {
  for (const Point2& p : points) {
    if (dist(q, p) <= radius) return true;
  }
  return false;
}

}  // namespace

CandidateSet boundary_candidates(const ScanCollection& scans,
                                 const std::vector<SafePolygonView>& views,
                                 const ExploreParams& params) {
  CandidateSet set;
  double spacing_sum = 0.0;
  int spacing_count = 0;
  std::vector<BoundaryPoint> raw;
  for (std::size_t i = 0; i < scans.scans.size(); ++i) {
    const SafePolygonView* view = i < views.size() ? &views[i] : nullptr;
    SafePolygonView local;
    if (view == nullptr ||
        view->angular_samples % params.boundary_samples != 0) {
      try {
        local = safepoly_boundary(scans.scans[i], scans.safer_inflation(),
                                  params.boundary_samples);
      } catch (const EmptySafeRegion&) {
        continue;  // a collapsed scan contributes no candidates
      }
      view = &local;
    }
    auto pts = view_candidates(*view, static_cast<int>(i),
                               params.boundary_samples, &spacing_sum,
                               &spacing_count);
    raw.insert(raw.end(), pts.begin(), pts.end());
  }
  set.mean_spacing = spacing_count > 0 ? spacing_sum / spacing_count : 0.0;

  const double inflation = scans.safer_inflation();
  for (const BoundaryPoint& bp : raw) {
    bool duplicate = false;
    for (const BoundaryPoint& kept : set.points) {
      if (dist(bp.position, kept.position) <= kDedupRadius) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    bool retained =
        safepoly_contains(scans.scans[bp.source_scan], bp.position, inflation);
    if (!retained) {
      for (std::size_t i = 0; i < scans.scans.size() && !retained; ++i) {
        if (static_cast<int>(i) == bp.source_scan) continue;
        retained = safepoly_contains(scans.scans[i], bp.position, inflation);
      }
    }
    if (retained) set.points.push_back(bp);
  }
  return set;
}

CandidateSet boundary_candidates(const ScanCollection& scans,
                                 const ExploreParams& params) {
  std::vector<SafePolygonView> views;
  views.reserve(scans.scans.size());
  for (const Scan& scan : scans.scans) {
    try {
      views.push_back(safepoly_boundary(scan, scans.safer_inflation(),
                                        params.view_samples));
    } catch (const EmptySafeRegion&) {
      views.push_back(SafePolygonView{});  // empty view; skipped downstream
    }
  }
  return boundary_candidates(scans, views, params);
}

bool is_frontier(const ScanCollection& scans,
                 const std::vector<SafePolygonView>& views, Point2 q,
                 const ExploreParams& params) {
  const double inflation = scans.safer_inflation();
  double max_bnd = -std::numeric_limits<double>::infinity();
  double min_obst = std::numeric_limits<double>::infinity();
  bool contained = false;
  for (std::size_t i = 0; i < scans.scans.size(); ++i) {
    if (i >= views.size() || views[i].boundary.empty()) continue;
    if (!safepoly_contains(scans.scans[i], q, inflation)) continue;
    contained = true;
    max_bnd = std::max(max_bnd, dist2bnd(views[i], q));
    min_obst = std::min(min_obst, dist2obst(scans.scans[i], q));
  }
  if (!contained) return false;
  return max_bnd <= params.frontier_eps && min_obst >= params.frontier_delta;
}

bool is_bridging_position(const ScanCollection& scans,
                          const MotionGraph& graph, Point2 q) {
  const ConstrainedGraph sub = position_constrained_subgraph(scans, graph, q);
  return sub.vertices.size() >= 2 && !is_connected(sub);
}

bool is_bridging_scan(const ScanCollection& scans, const MotionGraph& graph,
                      const Scan& probe) {
  const ConstrainedGraph sub = scan_constrained_subgraph(scans, graph, probe);
  return sub.vertices.size() >= 2 && !is_connected(sub);
}

std::vector<Cluster> cluster_candidates(
    const std::vector<BoundaryPoint>& points, double link_radius) {
  const int n = static_cast<int>(points.size());
  std::vector<Cluster> clusters;
  if (n == 0) return clusters;
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist(points[i].position, points[j].position) <= link_radius) {
        uf.unite(i, j);
      }
    }
  }
  std::vector<int> root_to_cluster(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (root_to_cluster[root] < 0) {
      root_to_cluster[root] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    clusters[root_to_cluster[root]].members.push_back(i);
  }
  for (Cluster& cluster : clusters) {
    double best_sum = std::numeric_limits<double>::infinity();
    for (int candidate : cluster.members) {
      double sum = 0.0;
      for (int other : cluster.members) {
        sum += dist(points[candidate].position, points[other].position);
      }
      if (sum < best_sum) {
        best_sum = sum;
        cluster.medoid = candidate;
      }
    }
  }
  return clusters;
}

std::optional<ObservationChoice> select_observation_point(
    const ExplorationState& state, const std::vector<BoundaryPoint>& frontier,
    const std::vector<BoundaryPoint>& bridging, const ExploreParams& params,
    const ControlParams& control, LocalCostKind cost_kind) {
  (void)control;
  auto choose = [&](const std::vector<BoundaryPoint>& points,
                    CandidateKind kind) -> std::optional<ObservationChoice> {
    double radius = params.cluster_link_radius;
    if (radius <= 0.0) {
      // Callers normally resolve the auto radius from the candidate set's
      // mean spacing; for ad-hoc point lists fall back to twice the mean
      // nearest-neighbor distance.
      double sum = 0.0;
      int count = 0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < points.size(); ++j) {
          if (i == j) continue;
          nearest = std::min(nearest, dist(points[i].position,
                                           points[j].position));
        }
        if (std::isfinite(nearest)) {
          sum += nearest;
          ++count;
        }
      }
      radius = count > 0 ? 2.0 * (sum / count) : kDedupRadius;
    }
    const auto clusters = cluster_candidates(points, radius);
    std::optional<ObservationChoice> best;
    for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
      const BoundaryPoint& medoid = points[clusters[ci].medoid];
      if (near_any(medoid.position, state.visited_observation_points,
                   kVisitedRadius) ||
          near_any(medoid.position, state.blocked_observation_points,
                   kVisitedRadius)) {
        continue;
      }
      double cost;
      try {
        const PlanResult pr = plan(state.scans, state.graph, medoid.position,
                                   cost_kind);
        const int at = active_scan(state.scans, pr, state.robot_position);
        cost = pr.scancost[at];
      } catch (const ScanNavError&) {
        continue;  // unreachable from here; skip this cluster
      }
      if (!best || cost < best->travel_cost) {
        best = ObservationChoice{medoid.position, kind, medoid.source_scan,
                                 cost, static_cast<int>(ci)};
      }
    }
    return best;
  };

  if (!frontier.empty()) return choose(frontier, CandidateKind::Frontier);
  if (!bridging.empty()) return choose(bridging, CandidateKind::Bridging);
  return std::nullopt;
}

namespace {

Point2 inset_goal(Point2 medoid, Point2 center, double inset) {
  const Vec2 d = center - medoid;
  const double len = norm(d);
  if (len <= inset) return center;
  return medoid + (inset / len) * d;
}

}  // namespace

ExploreStepRecord explore_step(ExplorationState& state, const World& world,
                               const SensorConfig& sensor,
                               const ExploreParams& params,
                               const ControlParams& control,
                               LocalCostKind cost_kind,
                               PolicyKind policy_kind) {
  ExploreStepRecord record;
  record.step = static_cast<int>(state.step_log.size()) + 1;
  record.graph_edges = static_cast<int>(state.graph.edges.size());
  record.graph_cycle_rank = cycle_rank(state.graph);

  const CandidateSet candidates =
      boundary_candidates(state.scans, state.safer_views, params);
  std::vector<BoundaryPoint> frontier;
  std::vector<BoundaryPoint> bridging;
  for (const BoundaryPoint& bp : candidates.points) {
    if (is_frontier(state.scans, state.safer_views, bp.position, params)) {
      frontier.push_back(bp);
    } else if (params.bridging_enabled &&
               is_bridging_position(state.scans, state.graph, bp.position)) {
      bridging.push_back(bp);
    }
  }
  record.frontier_available = !frontier.empty();
  record.frontier_candidates = static_cast<int>(frontier.size());
  record.bridging_candidates = static_cast<int>(bridging.size());

  ExploreParams selection = params;
  if (selection.cluster_link_radius <= 0.0) {
    selection.cluster_link_radius = 2.0 * candidates.mean_spacing;
  }
  const auto choice = select_observation_point(
      state, frontier, bridging, selection, control, cost_kind);
  if (!choice) {
    state.status = ExploreStatus::Complete;
    record.note = "no selectable observation point";
    state.step_log.push_back(record);
    return record;
  }

  state.status = choice->kind == CandidateKind::Frontier
                     ? ExploreStatus::FrontierPhase
                     : ExploreStatus::BridgingPhase;
  record.selected = true;
  record.selected_point = choice->point;
  record.kind = choice->kind;
  record.travel_cost = choice->travel_cost;

  const Point2 source_center =
      state.scans.scans[choice->source_scan].center;
  const Point2 goal =
      inset_goal(choice->point, source_center, params.observation_inset);

  Trajectory traj;
  try {
    const PlanResult pr = plan(state.scans, state.graph, goal, cost_kind);
    GlobalPolicy policy = make_global_policy(state.scans, state.graph, pr,
                                             policy_kind, control);
    traj = simulate_navigation(policy, state.robot_position, params.dt,
                               params.nav_t_max, params.goal_tol);
  } catch (const ScanNavError& err) {
    state.blocked_observation_points.push_back(choice->point);
    record.note = std::string("planning failed: ") + err.what();
    state.step_log.push_back(record);
    return record;
  }
  state.trajectory_log.push_back(traj);
  record.path_length = traj.path_length;
  if (traj.outcome != Trajectory::Outcome::Success) {
    state.blocked_observation_points.push_back(choice->point);
    record.note = traj.outcome == Trajectory::Outcome::Timeout
                      ? "navigation timed out"
                      : "navigation lost scan containment";
    state.step_log.push_back(record);
    return record;
  }
  state.robot_position = traj.final_position;

  Scan scan;
  SafePolygonView view;
  try {
    scan = take_scan(world, sensor, state.robot_position,
                     static_cast<int>(state.scans.scans.size()) + 1);
    view = safepoly_boundary(scan, state.scans.safer_inflation(),
                             params.view_samples);
  } catch (const ScanNavError& err) {
    state.blocked_observation_points.push_back(choice->point);
    record.note = std::string("scan failed: ") + err.what();
    state.step_log.push_back(record);
    return record;
  }
  state.scans.add(std::move(scan));
  state.safer_views.push_back(std::move(view));
  state.graph = build_motion_graph(state.scans);
  state.visited_observation_points.push_back(choice->point);

  record.scan_id = static_cast<int>(state.scans.scans.size());
  record.graph_edges = static_cast<int>(state.graph.edges.size());
  record.graph_cycle_rank = cycle_rank(state.graph);
  state.step_log.push_back(record);
  return record;
}

ExplorationState seed_exploration(const World& world, Point2 start,
                                  const SensorConfig& sensor,
                                  const ExploreParams& params,
                                  const ControlParams& control) {
  if (control.robot_radius != world.robot_radius) {
    throw std::invalid_argument(
        "control robot_radius must match the world robot_radius");
  }
  ExplorationState state;
  state.scans.robot_radius = world.robot_radius;
  state.scans.margin_eps = control.margin_eps;
  state.robot_position = start;

  Scan seed = take_scan(world, sensor, start, 1);
  state.safer_views.push_back(safepoly_boundary(
      seed, state.scans.safer_inflation(), params.view_samples));
  state.scans.add(std::move(seed));
  state.graph = build_motion_graph(state.scans);
  state.visited_observation_points.push_back(start);
  return state;
}

ExplorationState explore(const World& world, Point2 start,
                         const SensorConfig& sensor,
                         const ExploreParams& params,
                         const ControlParams& control,
                         LocalCostKind cost_kind, PolicyKind policy_kind) {
  ExplorationState state =
      seed_exploration(world, start, sensor, params, control);
  for (int step = 0; step < params.max_steps; ++step) {
    explore_step(state, world, sensor, params, control, cost_kind,
                 policy_kind);
    if (state.status == ExploreStatus::Complete) return state;
  }
  throw IterationCapExceeded("exploration exceeded " +
                             std::to_string(params.max_steps) + " steps");
}

}  // namespace scannav
