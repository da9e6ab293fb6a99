#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scannav/errors.hpp"
#include "scannav/serialize.hpp"
#include "scannav/svg.hpp"

namespace fs = std::filesystem;
using namespace scannav;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPlanner = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitIterationCap = 4;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::vector<double> start;
  std::vector<double> goal;
};

fs::path resolve_out_dir(const RunConfig& config, const CommonArgs& args) {
  if (!args.out_dir.empty()) return fs::path(args.out_dir);
  if (!config.out_dir.empty()) return config.out_dir;
  return fs::current_path() / "scannav_out";
}

// Loads config + world and aligns the control radius with the world.
RunConfig load_inputs(const CommonArgs& args, World* world) {
  RunConfig config = load_run_config(args.config_path);
  *world = load_world(config.world_path);
  config.control.robot_radius = world->robot_radius;
  if (args.start.size() == 2) {
    config.start = {args.start[0], args.start[1]};
    config.has_start = true;
  }
  if (args.goal.size() == 2) {
    config.goal = {args.goal[0], args.goal[1]};
    config.has_goal = true;
  }
  return config;
}

// Scan collection for navigate/field: a saved scan set wins over fresh scans
// at the configured centers. Adopting a saved set also adopts its radius and
// margin into the control parameters so policy domains stay consistent.
ScanCollection assemble_scans(const World& world, RunConfig& config) {
  if (!config.scan_set_path.empty()) {
    ScanCollection scans = load_scan_set(config.scan_set_path);
    config.control.robot_radius = scans.robot_radius;
    config.control.margin_eps = scans.margin_eps;
    return scans;
  }
  if (config.scan_centers.empty()) {
    throw ParseError("config needs 'scan_centers' or 'scan_set'");
  }
  ScanCollection scans;
  scans.robot_radius = world.robot_radius;
  scans.margin_eps = config.control.margin_eps;
  for (Point2 center : config.scan_centers) {
    scans.add(take_scan(world, config.sensor, center,
                        static_cast<int>(scans.scans.size()) + 1));
  }
  return scans;
}

int cmd_navigate(const CommonArgs& args) {
  World world;
  RunConfig config = load_inputs(args, &world);
  if (!config.has_start || !config.has_goal) {
    std::fprintf(stderr, "navigate needs a start and a goal\n");
    return kExitParse;
  }
  const fs::path out = resolve_out_dir(config, args);

  ScanCollection scans = assemble_scans(world, config);
  const MotionGraph graph = build_motion_graph(scans);
  save_scan_set(scans, out / "scans.json");
  save_graph(scans, graph, out / "graph.json");

  PlanResult planned;
  try {
    planned = plan(scans, graph, config.goal, config.cost_kind);
  } catch (const GoalUnreachable& err) {
    std::fprintf(stderr, "planning failed: %s\n", err.what());
    return kExitPlanner;
  }
  save_plan(scans, planned, out / "plan.json");

  const GlobalPolicy policy = make_global_policy(scans, graph, planned,
                                                 config.policy,
                                                 config.control);
  Trajectory trajectory;
  try {
    trajectory = simulate_navigation(policy, config.start, config.dt,
                                     config.t_max, config.goal_tol);
  } catch (const OutOfDomain& err) {
    std::fprintf(stderr, "start rejected: %s\n", err.what());
    return kExitPlanner;
  }
  write_text_file(out / "trajectory.csv", trajectory_csv(scans, trajectory));
  write_text_file(out / "navigation.svg",
                  render_navigation_svg(world, scans, graph, trajectory,
                                        config.goal));
  switch (trajectory.outcome) {
    case Trajectory::Outcome::Success:
      std::printf("goal reached after %.2f s (path %.3f m)\n",
                  trajectory.elapsed, trajectory.path_length);
      return kExitOk;
    case Trajectory::Outcome::Timeout:
      std::fprintf(stderr, "timed out after %.2f s\n", trajectory.elapsed);
      return kExitTimeout;
    case Trajectory::Outcome::NoActiveScan:
      std::fprintf(stderr, "no active scan at t=%.2f s\n",
                   trajectory.elapsed);
      return kExitPlanner;
  }
  return kExitPlanner;
}

int cmd_explore(const CommonArgs& args, bool frontier_only) {
  World world;
  RunConfig config = load_inputs(args, &world);
  if (!config.has_start) {
    std::fprintf(stderr, "explore needs a start position\n");
    return kExitParse;
  }
  const fs::path out = resolve_out_dir(config, args);
  ExploreParams params = config.explore;
  if (frontier_only) params.bridging_enabled = false;

  ExplorationState state = seed_exploration(world, config.start,
                                            config.sensor, params,
                                            config.control);
  const fs::path frames = out / "frames";
  char name[32];
  std::snprintf(name, sizeof name, "step_%03d.svg", 0);
  write_text_file(frames / name, render_exploration_svg(world, state));

  bool complete = false;
  for (int step = 0; step < params.max_steps; ++step) {
    explore_step(state, world, config.sensor, params, config.control,
                 config.cost_kind, config.policy);
    std::snprintf(name, sizeof name, "step_%03d.svg",
                  static_cast<int>(state.step_log.size()));
    write_text_file(frames / name, render_exploration_svg(world, state));
    if (state.status == ExploreStatus::Complete) {
      complete = true;
      break;
    }
  }

  save_scan_set(state.scans, out / "scans.json");
  save_graph(state.scans, state.graph, out / "graph.json");
  save_explore_report(state, out / "report.json");
  write_text_file(out / "exploration.svg",
                  render_exploration_svg(world, state));
  if (!complete) {
    std::fprintf(stderr, "exploration hit the %d-step cap\n",
                 params.max_steps);
    return kExitIterationCap;
  }
  std::printf("exploration complete: %zu scans, %zu edges, cycle rank %d\n",
              state.scans.scans.size(), state.graph.edges.size(),
              cycle_rank(state.graph));
  return kExitOk;
}

int cmd_field(const CommonArgs& args, double grid_step_override) {
  World world;
  RunConfig config = load_inputs(args, &world);
  if (!config.has_goal) {
    std::fprintf(stderr, "field needs a goal\n");
    return kExitParse;
  }
  if (grid_step_override > 0.0) config.grid_step = grid_step_override;
  const fs::path out = resolve_out_dir(config, args);

  ScanCollection scans = assemble_scans(world, config);
  const MotionGraph graph = build_motion_graph(scans);
  save_scan_set(scans, out / "scans.json");
  save_graph(scans, graph, out / "graph.json");

  PlanResult planned;
  try {
    planned = plan(scans, graph, config.goal, config.cost_kind);
  } catch (const GoalUnreachable& err) {
    std::fprintf(stderr, "planning failed: %s\n", err.what());
    return kExitPlanner;
  }
  save_plan(scans, planned, out / "plan.json");
  const GlobalPolicy policy = make_global_policy(scans, graph, planned,
                                                 config.policy,
                                                 config.control);

  double min_x = world.workspace[0].x, max_x = min_x;
  double min_y = world.workspace[0].y, max_y = min_y;
  for (Point2 p : world.workspace) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  std::vector<FieldSample> samples;
  for (double y = min_y; y <= max_y + 1e-12; y += config.grid_step) {
    for (double x = min_x; x <= max_x + 1e-12; x += config.grid_step) {
      const Point2 q{x, y};
      try {
        const int active = active_scan(scans, planned, q);
        samples.push_back(
            {q, global_velocity(policy, q), scans.scans[active].id});
      } catch (const NoActiveScan&) {
        // grid point outside every reachable safe polygon: omitted
      }
    }
  }
  write_text_file(out / "field.csv", field_csv(samples));
  write_text_file(out / "field.svg",
                  render_field_svg(world, scans, samples, config.goal,
                                   config.grid_step * 1.6));
  std::printf("field sampled at %zu grid points\n", samples.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scan-based navigation and exploration"};
  app.require_subcommand(1);

  CommonArgs args;
  bool frontier_only = false;
  double grid_step = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", args.config_path, "run configuration JSON")
        ->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--start", args.start, "start position override (x y)")
        ->expected(2);
    cmd->add_option("--goal", args.goal, "goal position override (x y)")
        ->expected(2);
  };

  CLI::App* navigate =
      app.add_subcommand("navigate", "plan and simulate a navigation run");
  add_common(navigate);
  CLI::App* explore_cmd =
      app.add_subcommand("explore", "autonomously map the world");
  add_common(explore_cmd);
  explore_cmd->add_flag("--frontier-only", frontier_only,
                        "disable the bridging phase");
  CLI::App* field =
      app.add_subcommand("field", "rasterize the global velocity field");
  add_common(field);
  field->add_option("--grid-step", grid_step, "grid spacing in meters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (navigate->parsed()) return cmd_navigate(args);
    if (explore_cmd->parsed()) return cmd_explore(args, frontier_only);
    if (field->parsed()) return cmd_field(args, grid_step);
  } catch (const ParseError& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitParse;
  } catch (const InvalidScanCenter& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitParse;
  } catch (const GoalUnreachable& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitPlanner;
  } catch (const NoActiveScan& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitPlanner;
  } catch (const IterationCapExceeded& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitIterationCap;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitParse;
  }
  return kExitParse;
}
