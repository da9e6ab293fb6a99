#include "scannav/graph.hpp"

#include <algorithm>
#include <queue>

#include "scannav/errors.hpp"

namespace scannav {

namespace {

void rebuild_adjacency(MotionGraph& graph) {
  graph.adjacency.assign(graph.vertex_count, {});
  for (const auto& [i, j] : graph.edges) {
    graph.adjacency[i].push_back(j);
    graph.adjacency[j].push_back(i);
  }
}

// BFS component count over an explicit vertex set with an edge list.
int component_count(const std::vector<int>& vertices,
                    const std::vector<std::pair<int, int>>& edges) {
  if (vertices.empty()) return 0;
  const int max_v = *std::max_element(vertices.begin(), vertices.end());
  std::vector<char> present(max_v + 1, 0);
  for (int v : vertices) present[v] = 1;
  std::vector<std::vector<int>> adj(max_v + 1);
  for (const auto& [i, j] : edges) {
    if (i <= max_v && j <= max_v && present[i] && present[j]) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  }
  std::vector<char> seen(max_v + 1, 0);
  int components = 0;
  for (int v : vertices) {
    if (seen[v]) continue;
    ++components;
    std::queue<int> frontier;
    frontier.push(v);
    seen[v] = 1;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
  }
  return components;
}

std::vector<int> all_vertices(const MotionGraph& graph) {
  std::vector<int> v(graph.vertex_count);
  for (int i = 0; i < graph.vertex_count; ++i) v[i] = i;
  return v;
}

}  // namespace

MotionGraph build_motion_graph(const ScanCollection& scans) {
  MotionGraph graph;
  graph.vertex_count = static_cast<int>(scans.scans.size());
  const double inflation = scans.safer_inflation();
  for (int i = 0; i < graph.vertex_count; ++i) {
    for (int j = i + 1; j < graph.vertex_count; ++j) {
      const Scan& si = scans.scans[i];
      const Scan& sj = scans.scans[j];
      if (safepoly_contains(sj, si.center, inflation) &&
          safepoly_contains(si, sj.center, inflation)) {
        graph.edges.emplace_back(i, j);
        graph.weights.push_back(dist(si.center, sj.center));
      }
    }
  }
  rebuild_adjacency(graph);
  return graph;
}

std::vector<Segment> embedding_segments(const ScanCollection& scans,
                                        const MotionGraph& graph) {
  std::vector<Segment> out;
  out.reserve(graph.edges.size());
  for (const auto& [i, j] : graph.edges) {
    out.push_back({scans.scans[i].center, scans.scans[j].center});
  }
  return out;
}

bool is_connected(const MotionGraph& graph) {
  if (graph.vertex_count <= 1) return true;
  return component_count(all_vertices(graph), graph.edges) <= 1;
}

bool is_connected(const MotionGraph& graph,
                  const std::vector<int>& restrict_to) {
  if (restrict_to.size() <= 1) return true;
  return component_count(restrict_to, graph.edges) <= 1;
}

bool is_connected(const ConstrainedGraph& graph) {
  if (graph.vertices.size() <= 1) return true;
  return component_count(graph.vertices, graph.edges) <= 1;
}

ConstrainedGraph scan_constrained_subgraph(const ScanCollection& scans,
                                           const MotionGraph& graph,
                                           const Scan& probe) {
  const double inflation = scans.safer_inflation();
  ConstrainedGraph out;
  std::vector<char> kept(graph.vertex_count, 0);
  for (int i = 0; i < graph.vertex_count; ++i) {
    const Scan& si = scans.scans[i];
    if (safepoly_contains(probe, si.center, inflation) &&
        safepoly_contains(si, probe.center, inflation)) {
      out.vertices.push_back(i);
      kept[i] = 1;
    }
  }
  for (const auto& [i, j] : graph.edges) {
    if (!kept[i] || !kept[j]) continue;
    const Point2 ci = scans.scans[i].center;
    const Point2 cj = scans.scans[j].center;
    if (safepoly_contains_segment(probe, ci, cj, inflation) &&
        safepoly_contains_segment(scans.scans[j], probe.center, ci,
                                  inflation) &&
        safepoly_contains_segment(scans.scans[i], probe.center, cj,
                                  inflation)) {
      out.edges.emplace_back(i, j);
    }
  }
  return out;
}

ConstrainedGraph position_constrained_subgraph(const ScanCollection& scans,
                                               const MotionGraph& graph,
                                               Point2 q) {
  const double inflation = scans.safer_inflation();
  ConstrainedGraph out;
  std::vector<char> kept(graph.vertex_count, 0);
  for (int i = 0; i < graph.vertex_count; ++i) {
    if (safepoly_contains(scans.scans[i], q, inflation)) {
      out.vertices.push_back(i);
      kept[i] = 1;
    }
  }
  for (const auto& [i, j] : graph.edges) {
    if (!kept[i] || !kept[j]) continue;
    const Point2 ci = scans.scans[i].center;
    const Point2 cj = scans.scans[j].center;
    if (safe_segment(scans.scans[j], q, ci, inflation) &&
        safe_segment(scans.scans[i], q, cj, inflation)) {
      out.edges.emplace_back(i, j);
    }
  }
  return out;
}

std::array<bool, 3> center_triangle_checks(const Scan& scan_i,
                                           const Scan& scan_j,
                                           const Scan& scan_k,
                                           double robot_radius) {
  const Point2 ci = scan_i.center;
  const Point2 cj = scan_j.center;
  const Point2 ck = scan_k.center;
  const double d_max =
      std::max({dist(ci, cj), dist(ci, ck), dist(cj, ck)});
  const double bound =
      std::min({scan_i.r_max, scan_j.r_max, scan_k.r_max}) - robot_radius;
  if (d_max > bound) {
    throw HypothesisViolated(
        "pairwise center distance exceeds min(r_max) - robot_radius");
  }
  return {safe_segment(scan_k, ci, cj, robot_radius),
          safe_segment(scan_j, ci, ck, robot_radius),
          safe_segment(scan_i, cj, ck, robot_radius)};
}

int cycle_rank(const MotionGraph& graph) {
  if (graph.vertex_count == 0) return 0;
  const int components = component_count(all_vertices(graph), graph.edges);
  return static_cast<int>(graph.edges.size()) - graph.vertex_count +
         components;
}

}  // namespace scannav
