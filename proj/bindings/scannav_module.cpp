#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "scannav/errors.hpp"
#include "scannav/serialize.hpp"
#include "scannav/svg.hpp"

namespace py = pybind11;
using namespace scannav;

namespace {

std::string point_repr(Point2 p) {
  std::ostringstream ss;
  ss << "Vec2(" << p.x << ", " << p.y << ")";
  return ss.str();
}

}  // namespace

PYBIND11_MODULE(_scannav, m) {
  m.doc() = "scan-based navigation and exploration core";

  auto err_base = py::register_exception<ScanNavError>(m, "ScanNavError");
  py::register_exception<InvalidScanCenter>(m, "InvalidScanCenter",
                                            err_base.ptr());
  py::register_exception<EmptySafeRegion>(m, "EmptySafeRegion",
                                          err_base.ptr());
  py::register_exception<OutOfDomain>(m, "OutOfDomain", err_base.ptr());
  py::register_exception<GoalUnreachable>(m, "GoalUnreachable",
                                          err_base.ptr());
  py::register_exception<NoActiveScan>(m, "NoActiveScan", err_base.ptr());
  py::register_exception<HypothesisViolated>(m, "HypothesisViolated",
                                             err_base.ptr());
  py::register_exception<IterationCapExceeded>(m, "IterationCapExceeded",
                                               err_base.ptr());
  py::register_exception<ParseError>(m, "ParseError", err_base.ptr());

  py::class_<Vec2>(m, "Vec2")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Vec2{x, y}; }),
           py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("y", &Vec2::y)
      .def("__repr__", &point_repr)
      .def("__eq__",
           [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; });
  m.attr("Point2") = m.attr("Vec2");

  py::class_<Scan>(m, "Scan")
      .def(py::init<>())
      .def_readwrite("id", &Scan::id)
      .def_readwrite("center", &Scan::center)
      .def_readwrite("points", &Scan::points)
      .def_readwrite("r_max", &Scan::r_max);

  py::class_<SafePolygonView>(m, "SafePolygonView")
      .def_readonly("scan_id", &SafePolygonView::scan_id)
      .def_readonly("center", &SafePolygonView::center)
      .def_readonly("inflation", &SafePolygonView::inflation)
      .def_readonly("angular_samples", &SafePolygonView::angular_samples)
      .def_readonly("boundary", &SafePolygonView::boundary);

  py::class_<World>(m, "World")
      .def(py::init<>())
      .def_readwrite("workspace", &World::workspace)
      .def_readwrite("obstacles", &World::obstacles)
      .def_readwrite("robot_radius", &World::robot_radius);

  py::class_<SensorConfig>(m, "SensorConfig")
      .def(py::init<>())
      .def_readwrite("num_rays", &SensorConfig::num_rays)
      .def_readwrite("r_max", &SensorConfig::r_max);

  py::enum_<PolicyKind>(m, "PolicyKind")
      .value("MoveThroughCenter", PolicyKind::MoveThroughCenter)
      .value("MoveToProjectedGoal", PolicyKind::MoveToProjectedGoal);

  py::enum_<LocalCostKind>(m, "LocalCostKind")
      .value("UniformConstant", LocalCostKind::UniformConstant)
      .value("DistanceToGoal", LocalCostKind::DistanceToGoal)
      .value("CentroidalDistance", LocalCostKind::CentroidalDistance)
      .value("ProjectedGoalDistance", LocalCostKind::ProjectedGoalDistance)
      .value("CentroidalPerimeter", LocalCostKind::CentroidalPerimeter)
      .value("ProjectedPerimeter", LocalCostKind::ProjectedPerimeter)
      .value("SymmetricProjectedGoalDistance",
             LocalCostKind::SymmetricProjectedGoalDistance);

  py::class_<ControlParams>(m, "ControlParams")
      .def(py::init<>())
      .def_readwrite("gain", &ControlParams::gain)
      .def_readwrite("max_speed", &ControlParams::max_speed)
      .def_readwrite("margin_eps", &ControlParams::margin_eps)
      .def_readwrite("robot_radius", &ControlParams::robot_radius);

  py::class_<ScanCollection>(m, "ScanCollection")
      .def(py::init<>())
      .def_readwrite("scans", &ScanCollection::scans)
      .def_readwrite("robot_radius", &ScanCollection::robot_radius)
      .def_readwrite("margin_eps", &ScanCollection::margin_eps)
      .def("safe_inflation", &ScanCollection::safe_inflation)
      .def("safer_inflation", &ScanCollection::safer_inflation)
      .def("add", &ScanCollection::add, py::arg("scan"));

  py::class_<MotionGraph>(m, "MotionGraph")
      .def(py::init<>())
      .def_readonly("vertex_count", &MotionGraph::vertex_count)
      .def_readonly("edges", &MotionGraph::edges)
      .def_readonly("weights", &MotionGraph::weights)
      .def_readonly("adjacency", &MotionGraph::adjacency);

  py::class_<PlanResult>(m, "PlanResult")
      .def_readonly("goal", &PlanResult::goal)
      .def_readonly("cost_kind", &PlanResult::cost_kind)
      .def_readonly("scancost", &PlanResult::scancost)
      .def_readonly("scangoal", &PlanResult::scangoal);

  py::class_<GlobalPolicy>(m, "GlobalPolicy")
      .def_readonly("plan", &GlobalPolicy::plan)
      .def_readonly("policy_kind", &GlobalPolicy::policy_kind)
      .def_readonly("params", &GlobalPolicy::params);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("t", &TrajectorySample::t)
      .def_readonly("position", &TrajectorySample::position)
      .def_readonly("velocity", &TrajectorySample::velocity)
      .def_readonly("active_scan", &TrajectorySample::active_scan)
      .def_readonly("navcost", &TrajectorySample::navcost);

  py::class_<Trajectory> trajectory(m, "Trajectory");
  py::enum_<Trajectory::Outcome>(trajectory, "Outcome")
      .value("Success", Trajectory::Outcome::Success)
      .value("Timeout", Trajectory::Outcome::Timeout)
      .value("NoActiveScan", Trajectory::Outcome::NoActiveScan);
  trajectory.def_readonly("samples", &Trajectory::samples)
      .def_readonly("outcome", &Trajectory::outcome)
      .def_readonly("elapsed", &Trajectory::elapsed)
      .def_readonly("path_length", &Trajectory::path_length)
      .def_readonly("final_position", &Trajectory::final_position);

  py::enum_<CandidateKind>(m, "CandidateKind")
      .value("Frontier", CandidateKind::Frontier)
      .value("Bridging", CandidateKind::Bridging);

  py::enum_<ExploreStatus>(m, "ExploreStatus")
      .value("FrontierPhase", ExploreStatus::FrontierPhase)
      .value("BridgingPhase", ExploreStatus::BridgingPhase)
      .value("Complete", ExploreStatus::Complete);

  py::class_<ExploreParams>(m, "ExploreParams")
      .def(py::init<>())
      .def_readwrite("frontier_eps", &ExploreParams::frontier_eps)
      .def_readwrite("frontier_delta", &ExploreParams::frontier_delta)
      .def_readwrite("boundary_samples", &ExploreParams::boundary_samples)
      .def_readwrite("cluster_link_radius",
                     &ExploreParams::cluster_link_radius)
      .def_readwrite("view_samples", &ExploreParams::view_samples)
      .def_readwrite("observation_inset", &ExploreParams::observation_inset)
      .def_readwrite("bridging_enabled", &ExploreParams::bridging_enabled)
      .def_readwrite("max_steps", &ExploreParams::max_steps)
      .def_readwrite("goal_tol", &ExploreParams::goal_tol)
      .def_readwrite("dt", &ExploreParams::dt)
      .def_readwrite("nav_t_max", &ExploreParams::nav_t_max);

  py::class_<ExploreStepRecord>(m, "ExploreStepRecord")
      .def_readonly("step", &ExploreStepRecord::step)
      .def_readonly("selected", &ExploreStepRecord::selected)
      .def_readonly("selected_point", &ExploreStepRecord::selected_point)
      .def_readonly("kind", &ExploreStepRecord::kind)
      .def_readonly("scan_id", &ExploreStepRecord::scan_id)
      .def_readonly("graph_edges", &ExploreStepRecord::graph_edges)
      .def_readonly("graph_cycle_rank", &ExploreStepRecord::graph_cycle_rank)
      .def_readonly("path_length", &ExploreStepRecord::path_length)
      .def_readonly("travel_cost", &ExploreStepRecord::travel_cost)
      .def_readonly("frontier_available",
                    &ExploreStepRecord::frontier_available)
      .def_readonly("frontier_candidates",
                    &ExploreStepRecord::frontier_candidates)
      .def_readonly("bridging_candidates",
                    &ExploreStepRecord::bridging_candidates)
      .def_readonly("note", &ExploreStepRecord::note);

  py::class_<ExplorationState>(m, "ExplorationState")
      .def_readonly("scans", &ExplorationState::scans)
      .def_readonly("graph", &ExplorationState::graph)
      .def_readonly("robot_position", &ExplorationState::robot_position)
      .def_readonly("visited_observation_points",
                    &ExplorationState::visited_observation_points)
      .def_readonly("step_log", &ExplorationState::step_log)
      .def_readonly("status", &ExplorationState::status);

  // geometry
  m.def("point_in_scan_polygon", &point_in_scan_polygon, py::arg("scan"),
        py::arg("q"));
  m.def("safe_segment", &safe_segment, py::arg("scan"), py::arg("a"),
        py::arg("b"), py::arg("inflation"));
  m.def("safepoly_contains", &safepoly_contains, py::arg("scan"),
        py::arg("q"), py::arg("inflation"));
  m.def("safepoly_contains_segment", &safepoly_contains_segment,
        py::arg("scan"), py::arg("a"), py::arg("b"), py::arg("inflation"));
  m.def("safepoly_boundary", &safepoly_boundary, py::arg("scan"),
        py::arg("inflation"), py::arg("angular_samples") = 720);
  m.def("dist2bnd", &dist2bnd, py::arg("view"), py::arg("q"));
  m.def("dist2obst", &dist2obst, py::arg("scan"), py::arg("q"));
  m.def("validate_scan", &validate_scan, py::arg("scan"),
        py::arg("robot_radius"));

  // sensor
  m.def("free_space_contains", &free_space_contains, py::arg("world"),
        py::arg("q"));
  m.def("ray_cast", &ray_cast, py::arg("world"), py::arg("origin"),
        py::arg("angle"), py::arg("r_max"));
  m.def("take_scan", &take_scan, py::arg("world"), py::arg("config"),
        py::arg("center"), py::arg("id"));

  // policy
  m.def("move_through_center", &move_through_center, py::arg("scan"),
        py::arg("x"), py::arg("y"), py::arg("params"));
  m.def("move_to_projected_goal", &move_to_projected_goal, py::arg("scan"),
        py::arg("x"), py::arg("y"), py::arg("params"));
  m.def("projected_scan_goal", &projected_scan_goal, py::arg("scan"),
        py::arg("x"), py::arg("y"), py::arg("params"));
  m.def("navcost_center", &navcost_center, py::arg("scan"), py::arg("x"),
        py::arg("y"));
  m.def("navcost_projected", &navcost_projected, py::arg("scan"),
        py::arg("x"), py::arg("y"), py::arg("params"));
  m.def("local_cost", &local_cost, py::arg("kind"), py::arg("scan"),
        py::arg("x"), py::arg("y"), py::arg("params"));

  // graph
  m.def("build_motion_graph", &build_motion_graph, py::arg("scans"));
  m.def("cycle_rank", &cycle_rank, py::arg("graph"));
  m.def("is_connected",
        py::overload_cast<const MotionGraph&>(&is_connected),
        py::arg("graph"));
  m.def("center_triangle_checks", &center_triangle_checks, py::arg("scan_i"),
        py::arg("scan_j"), py::arg("scan_k"), py::arg("robot_radius"));

  // planner
  py::enum_<PlanMethod>(m, "PlanMethod")
      .value("BinaryHeap", PlanMethod::BinaryHeap)
      .value("LinearScan", PlanMethod::LinearScan);
  m.def("plan", &plan, py::arg("scans"), py::arg("graph"), py::arg("goal"),
        py::arg("cost_kind"), py::arg("method") = PlanMethod::BinaryHeap);
  m.def("check_bellman", &check_bellman, py::arg("scans"), py::arg("graph"),
        py::arg("plan"));
  m.def("active_scan", &active_scan, py::arg("scans"), py::arg("plan"),
        py::arg("x"));
  m.def("make_global_policy", &make_global_policy, py::arg("scans"),
        py::arg("graph"), py::arg("plan"), py::arg("policy_kind"),
        py::arg("params"));
  m.def("global_velocity", &global_velocity, py::arg("policy"), py::arg("x"));
  m.def("simulate_navigation", &simulate_navigation, py::arg("policy"),
        py::arg("x0"), py::arg("dt") = 1.0 / 30.0, py::arg("t_max") = 120.0,
        py::arg("goal_tol") = 0.02);

  // exploration
  m.def("explore", &explore, py::arg("world"), py::arg("start"),
        py::arg("sensor"), py::arg("params"), py::arg("control"),
        py::arg("cost_kind") = LocalCostKind::CentroidalDistance,
        py::arg("policy_kind") = PolicyKind::MoveToProjectedGoal);

  // serialization
  m.def("load_world", &load_world, py::arg("path"));
  m.def("save_world", &save_world, py::arg("world"), py::arg("path"));
  m.def("load_scan_set", &load_scan_set, py::arg("path"));
  m.def("save_scan_set", &save_scan_set, py::arg("scans"), py::arg("path"));
  m.def("save_graph", &save_graph, py::arg("scans"), py::arg("graph"),
        py::arg("path"));
  m.def("trajectory_csv", &trajectory_csv, py::arg("scans"),
        py::arg("trajectory"));
}
