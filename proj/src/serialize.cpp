#include "scannav/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "scannav/errors.hpp"

namespace scannav {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ParseError(std::string(what) + " must be a [x, y] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point2> polygon_from_json(const json& j, const char* what) {
  if (!j.is_array()) {
    throw ParseError(std::string(what) + " must be an array of [x, y] pairs");
  }
  std::vector<Point2> out;
  out.reserve(j.size());
  for (const json& entry : j) out.push_back(point_from_json(entry, what));
  return out;
}

json polygon_to_json(const std::vector<Point2>& polygon) {
  json j = json::array();
  for (Point2 p : polygon) j.push_back(point_to_json(p));
  return j;
}

double signed_area(const std::vector<Point2>& polygon) {
  double twice = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[(i + 1) % n];
    twice += a.x * b.y - a.y * b.x;
  }
  return 0.5 * twice;
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::exception& err) {
    throw ParseError(path.string() + ": " + err.what());
  }
}

void dump_file(const json& j, const std::filesystem::path& path) {
  write_text_file(path, j.dump(2) + "\n");
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ParseError(std::string("missing or non-numeric field '") + key +
                     "'");
  }
  return j[key].get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    throw ParseError(std::string("field '") + key + "' must be a number");
  }
  return j[key].get<double>();
}

int int_or(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) {
    throw ParseError(std::string("field '") + key + "' must be an integer");
  }
  return j[key].get<int>();
}

bool bool_or(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) {
    throw ParseError(std::string("field '") + key + "' must be a boolean");
  }
  return j[key].get<bool>();
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(std::string("missing or non-string field '") + key +
                     "'");
  }
  return j[key].get<std::string>();
}

}  // namespace

World load_world(const std::filesystem::path& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("workspace")) {
    throw ParseError(path.string() + ": world needs a 'workspace' polygon");
  }
  World world;
  world.workspace = polygon_from_json(j["workspace"], "workspace vertex");
  if (world.workspace.size() < 3) {
    throw ParseError(path.string() + ": workspace needs at least 3 vertices");
  }
  if (signed_area(world.workspace) < 0.0) {
    std::reverse(world.workspace.begin(), world.workspace.end());
  }
  if (j.contains("obstacles")) {
    if (!j["obstacles"].is_array()) {
      throw ParseError(path.string() + ": 'obstacles' must be an array");
    }
    for (const json& entry : j["obstacles"]) {
      auto polygon = polygon_from_json(entry, "obstacle vertex");
      if (polygon.size() < 3) {
        throw ParseError(path.string() +
                         ": obstacle needs at least 3 vertices");
      }
      world.obstacles.push_back(std::move(polygon));
    }
  }
  world.robot_radius = number_or(j, "robot_radius", 0.25);
  if (world.robot_radius <= 0.0) {
    throw ParseError(path.string() + ": robot_radius must be positive");
  }
  return world;
}

void save_world(const World& world, const std::filesystem::path& path) {
  json j;
  j["workspace"] = polygon_to_json(world.workspace);
  j["obstacles"] = json::array();
  for (const auto& obstacle : world.obstacles) {
    j["obstacles"].push_back(polygon_to_json(obstacle));
  }
  j["robot_radius"] = world.robot_radius;
  dump_file(j, path);
}

ScanCollection load_scan_set(const std::filesystem::path& path) {
  const json j = parse_file(path);
  ScanCollection scans;
  scans.robot_radius = require_number(j, "robot_radius");
  scans.margin_eps = number_or(j, "margin_eps", 1e-3);
  if (!j.contains("scans") || !j["scans"].is_array()) {
    throw ParseError(path.string() + ": 'scans' must be an array");
  }
  for (const json& entry : j["scans"]) {
    Scan scan;
    scan.id = int_or(entry, "id", static_cast<int>(scans.scans.size()) + 1);
    scan.center = point_from_json(entry.value("center", json()), "center");
    scan.r_max = require_number(entry, "r_max");
    scan.points = polygon_from_json(entry.value("points", json()), "point");
    try {
      validate_scan(scan, scans.robot_radius);
    } catch (const std::invalid_argument& err) {
      throw ParseError(path.string() + ": " + err.what());
    }
    scans.scans.push_back(std::move(scan));
  }
  return scans;
}

void save_scan_set(const ScanCollection& scans,
                   const std::filesystem::path& path) {
  json j;
  j["robot_radius"] = scans.robot_radius;
  j["margin_eps"] = scans.margin_eps;
  j["scans"] = json::array();
  for (const Scan& scan : scans.scans) {
    json entry;
    entry["id"] = scan.id;
    entry["center"] = point_to_json(scan.center);
    entry["r_max"] = scan.r_max;
    entry["points"] = polygon_to_json(scan.points);
    j["scans"].push_back(std::move(entry));
  }
  dump_file(j, path);
}

MotionGraph load_graph(const std::filesystem::path& path) {
  const json j = parse_file(path);
  if (!j.contains("vertices") || !j["vertices"].is_array() ||
      !j.contains("edges") || !j["edges"].is_array()) {
    throw ParseError(path.string() + ": graph needs 'vertices' and 'edges'");
  }
  MotionGraph graph;
  std::map<int, int> id_to_index;
  for (const json& entry : j["vertices"]) {
    const int id = int_or(entry, "id", -1);
    if (id < 0) throw ParseError(path.string() + ": vertex without id");
    id_to_index[id] = graph.vertex_count++;
  }
  graph.adjacency.assign(graph.vertex_count, {});
  for (const json& entry : j["edges"]) {
    const int id_i = int_or(entry, "i", -1);
    const int id_j = int_or(entry, "j", -1);
    const auto it_i = id_to_index.find(id_i);
    const auto it_j = id_to_index.find(id_j);
    if (it_i == id_to_index.end() || it_j == id_to_index.end()) {
      throw ParseError(path.string() + ": edge references unknown vertex id");
    }
    const int a = it_i->second;
    const int b = it_j->second;
    graph.edges.emplace_back(std::min(a, b), std::max(a, b));
    graph.weights.push_back(require_number(entry, "weight"));
    graph.adjacency[a].push_back(b);
    graph.adjacency[b].push_back(a);
  }
  return graph;
}

void save_graph(const ScanCollection& scans, const MotionGraph& graph,
                const std::filesystem::path& path) {
  json j;
  j["vertices"] = json::array();
  for (const Scan& scan : scans.scans) {
    json entry;
    entry["id"] = scan.id;
    entry["center"] = point_to_json(scan.center);
    j["vertices"].push_back(std::move(entry));
  }
  j["edges"] = json::array();
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    json entry;
    entry["i"] = scans.scans[graph.edges[e].first].id;
    entry["j"] = scans.scans[graph.edges[e].second].id;
    entry["weight"] = graph.weights[e];
    j["edges"].push_back(std::move(entry));
  }
  dump_file(j, path);
}

PlanResult load_plan(const std::filesystem::path& path) {
  const json j = parse_file(path);
  PlanResult plan;
  plan.goal = point_from_json(j.value("goal", json()), "goal");
  plan.cost_kind = parse_cost_kind(require_string(j, "cost_kind"));
  if (!j.contains("scans") || !j["scans"].is_object()) {
    throw ParseError(path.string() + ": plan needs a 'scans' object");
  }
  std::map<int, std::pair<double, Point2>> rows;
  for (const auto& [key, value] : j["scans"].items()) {
    int id = 0;
    try {
      id = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError(path.string() + ": non-numeric scan id '" + key + "'");
    }
    double cost = std::numeric_limits<double>::infinity();
    if (!value.contains("cost") ||
        (!value["cost"].is_null() && !value["cost"].is_number())) {
      throw ParseError(path.string() + ": plan rows need a numeric or null 'cost'");
    }
    if (!value["cost"].is_null()) cost = value["cost"].get<double>();
    rows[id] = {cost, point_from_json(value.value("goal", json()), "goal")};
  }
  int expect = 1;
  for (const auto& [id, row] : rows) {
    if (id != expect++) {
      throw ParseError(path.string() + ": plan scan ids must be 1..n");
    }
    plan.scancost.push_back(row.first);
    plan.scangoal.push_back(row.second);
  }
  return plan;
}

void save_plan(const ScanCollection& scans, const PlanResult& plan,
               const std::filesystem::path& path) {
  json j;
  j["goal"] = point_to_json(plan.goal);
  j["cost_kind"] = to_string(plan.cost_kind);
  json rows = json::object();
  for (std::size_t i = 0; i < plan.scancost.size(); ++i) {
    json row;
    if (std::isfinite(plan.scancost[i])) {
      row["cost"] = plan.scancost[i];
    } else {
      row["cost"] = nullptr;
    }
    row["goal"] = point_to_json(plan.scangoal[i]);
    rows[std::to_string(scans.scans[i].id)] = std::move(row);
  }
  j["scans"] = std::move(rows);
  dump_file(j, path);
}

std::string trajectory_csv(const ScanCollection& scans,
                           const Trajectory& trajectory) {
  std::string out = "t,x,y,vx,vy,active_scan,navcost\n";
  for (const TrajectorySample& s : trajectory.samples) {
    const int id = s.active_scan >= 0 &&
                           s.active_scan < static_cast<int>(scans.scans.size())
                       ? scans.scans[s.active_scan].id
                       : 0;
    out += fmt17(s.t) + "," + fmt17(s.position.x) + "," + fmt17(s.position.y) +
           "," + fmt17(s.velocity.x) + "," + fmt17(s.velocity.y) + "," +
           std::to_string(id) + "," + fmt17(s.navcost) + "\n";
  }
  return out;
}

std::string field_csv(const std::vector<FieldSample>& samples) {
  std::string out = "x,y,vx,vy,active_scan\n";
  for (const FieldSample& s : samples) {
    out += fmt17(s.position.x) + "," + fmt17(s.position.y) + "," +
           fmt17(s.velocity.x) + "," + fmt17(s.velocity.y) + "," +
           std::to_string(s.scan_id) + "\n";
  }
  return out;
}

std::string to_string(CandidateKind kind) {
  return kind == CandidateKind::Frontier ? "frontier" : "bridging";
}

std::string to_string(ExploreStatus status) {
  switch (status) {
    case ExploreStatus::FrontierPhase:
      return "frontier_phase";
    case ExploreStatus::BridgingPhase:
      return "bridging_phase";
    case ExploreStatus::Complete:
      return "complete";
  }
  return "unknown";
}

void save_explore_report(const ExplorationState& state,
                         const std::filesystem::path& path) {
  json j;
  j["status"] = to_string(state.status);
  j["scan_count"] = state.scans.scans.size();
  j["graph_edge_count"] = state.graph.edges.size();
  j["graph_cycle_rank"] = cycle_rank(state.graph);
  j["robot_position"] = point_to_json(state.robot_position);
  j["steps"] = json::array();
  for (const ExploreStepRecord& rec : state.step_log) {
    json entry;
    entry["step"] = rec.step;
    entry["selected"] = rec.selected;
    if (rec.selected) {
      entry["selected_point"] = point_to_json(rec.selected_point);
      entry["kind"] = to_string(rec.kind);
    } else {
      entry["selected_point"] = nullptr;
      entry["kind"] = nullptr;
    }
    entry["scan_id"] = rec.scan_id;
    entry["graph_edge_count"] = rec.graph_edges;
    entry["graph_cycle_rank"] = rec.graph_cycle_rank;
    entry["path_length"] = rec.path_length;
    entry["travel_cost"] = rec.travel_cost;
    entry["frontier_available"] = rec.frontier_available;
    entry["frontier_candidates"] = rec.frontier_candidates;
    entry["bridging_candidates"] = rec.bridging_candidates;
    entry["note"] = rec.note;
    j["steps"].push_back(std::move(entry));
  }
  dump_file(j, path);
}

LocalCostKind parse_cost_kind(const std::string& name) {
  static const std::pair<const char*, LocalCostKind> kTable[] = {
      {"UniformConstant", LocalCostKind::UniformConstant},
      {"DistanceToGoal", LocalCostKind::DistanceToGoal},
      {"CentroidalDistance", LocalCostKind::CentroidalDistance},
      {"ProjectedGoalDistance", LocalCostKind::ProjectedGoalDistance},
      {"CentroidalPerimeter", LocalCostKind::CentroidalPerimeter},
      {"ProjectedPerimeter", LocalCostKind::ProjectedPerimeter},
      {"SymmetricProjectedGoalDistance",
       LocalCostKind::SymmetricProjectedGoalDistance},
  };
  for (const auto& [key, kind] : kTable) {
    if (name == key) return kind;
  }
  throw ParseError("unknown cost kind '" + name + "'");
}

PolicyKind parse_policy_kind(const std::string& name) {
  if (name == "MoveThroughCenter") return PolicyKind::MoveThroughCenter;
  if (name == "MoveToProjectedGoal") return PolicyKind::MoveToProjectedGoal;
  throw ParseError("unknown policy kind '" + name + "'");
}

RunConfig load_run_config(const std::filesystem::path& path) {
  const json j = parse_file(path);
  if (!j.is_object()) {
    throw ParseError(path.string() + ": config must be a JSON object");
  }
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&](const std::string& rel) {
    std::filesystem::path p(rel);
    return p.is_absolute() ? p : base / p;
  };

  RunConfig config;
  config.world_path = resolve(require_string(j, "world"));

  if (j.contains("sensor")) {
    const json& s = j["sensor"];
    config.sensor.num_rays = int_or(s, "num_rays", config.sensor.num_rays);
    config.sensor.r_max = number_or(s, "r_max", config.sensor.r_max);
  }
  if (config.sensor.num_rays < 16) {
    throw ParseError("sensor.num_rays must be at least 16");
  }
  if (config.sensor.r_max <= 0.0) {
    throw ParseError("sensor.r_max must be positive");
  }
  if (j.contains("control")) {
    const json& c = j["control"];
    config.control.gain = number_or(c, "gain", config.control.gain);
    config.control.max_speed =
        number_or(c, "max_speed", config.control.max_speed);
    config.control.margin_eps =
        number_or(c, "margin_eps", config.control.margin_eps);
  }
  if (j.contains("policy")) {
    config.policy = parse_policy_kind(require_string(j, "policy"));
  }
  if (j.contains("cost_kind")) {
    config.cost_kind = parse_cost_kind(require_string(j, "cost_kind"));
  }
  config.dt = number_or(j, "dt", config.dt);
  config.t_max = number_or(j, "t_max", config.t_max);
  config.goal_tol = number_or(j, "goal_tol", config.goal_tol);
  config.seed = static_cast<unsigned>(int_or(j, "seed", 0));
  if (j.contains("start")) {
    config.start = point_from_json(j["start"], "start");
    config.has_start = true;
  }
  if (j.contains("goal")) {
    config.goal = point_from_json(j["goal"], "goal");
    config.has_goal = true;
  }
  if (j.contains("scan_centers")) {
    config.scan_centers =
        polygon_from_json(j["scan_centers"], "scan center");
  }
  if (j.contains("scan_set")) {
    config.scan_set_path = resolve(require_string(j, "scan_set"));
  }

  config.explore.goal_tol = config.goal_tol;
  config.explore.dt = config.dt;
  config.explore.nav_t_max = config.t_max;
  if (j.contains("explore")) {
    const json& e = j["explore"];
    ExploreParams& ep = config.explore;
    ep.frontier_eps = number_or(e, "frontier_eps", ep.frontier_eps);
    ep.frontier_delta = number_or(e, "frontier_delta", ep.frontier_delta);
    ep.boundary_samples = int_or(e, "boundary_samples", ep.boundary_samples);
    ep.cluster_link_radius =
        number_or(e, "cluster_link_radius", ep.cluster_link_radius);
    ep.view_samples = int_or(e, "view_samples", ep.view_samples);
    ep.observation_inset =
        number_or(e, "observation_inset", ep.observation_inset);
    ep.bridging_enabled = bool_or(e, "bridging_enabled", ep.bridging_enabled);
    ep.max_steps = int_or(e, "max_steps", ep.max_steps);
    ep.goal_tol = number_or(e, "goal_tol", ep.goal_tol);
    ep.dt = number_or(e, "dt", ep.dt);
    ep.nav_t_max = number_or(e, "nav_t_max", ep.nav_t_max);
  }
  config.grid_step = number_or(j, "grid_step", config.grid_step);
  if (j.contains("out_dir")) {
    config.out_dir = resolve(require_string(j, "out_dir"));
  }
  return config;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write " + path.string());
  }
  out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace scannav
