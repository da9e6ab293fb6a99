#pragma once

#include <array>
#include <utility>
#include <vector>

#include "scannav/geometry.hpp"

namespace scannav {

// Ordered set of scans sharing one robot radius and shrink margin. Scan ids
// are 1-based and follow insertion order; graph and planner structures index
// scans by 0-based vector position.
struct ScanCollection {
  std::vector<Scan> scans;
  double robot_radius = 0.25;
  double margin_eps = 1e-3;

  double safe_inflation() const { return robot_radius; }
  double safer_inflation() const { return robot_radius + margin_eps; }
  // Appends the scan, stamping the next 1-based id onto it.
  void add(Scan scan) {
    scan.id = static_cast<int>(scans.size()) + 1;
    scans.push_back(std::move(scan));
  }
};

// Undirected graph over scan indices; edge (i, j) exists iff each center lies
// in the other scan's shrunk safe polygon. Edges are stored with i < j in
// lexicographic order; weights are center distances.
struct MotionGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;
  std::vector<std::vector<int>> adjacency;
};

// A vertex/edge subset of a motion graph, with vertices kept in original
// index space.
struct ConstrainedGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
};

MotionGraph build_motion_graph(const ScanCollection& scans);

// The straight segments between centers of adjacent scans (the geometric
// embedding of the edges).
std::vector<Segment> embedding_segments(const ScanCollection& scans,
                                        const MotionGraph& graph);

// Connectivity over all vertices (empty and single-vertex graphs count as
// connected).
bool is_connected(const MotionGraph& graph);
// Connectivity of the subgraph induced by restrict_to.
bool is_connected(const MotionGraph& graph,
                  const std::vector<int>& restrict_to);
bool is_connected(const ConstrainedGraph& graph);

// Vertices: scans i whose center lies in the probe's shrunk safe polygon and
// vice versa. Edges: graph edges (i, j) whose center segment stays in the
// probe's shrunk safe polygon and whose probe-center segments stay in the
// other scan's shrunk safe polygon.
ConstrainedGraph scan_constrained_subgraph(const ScanCollection& scans,
                                           const MotionGraph& graph,
                                           const Scan& probe);

// Vertices: scans whose shrunk safe polygon contains q. Edges: graph edges
// (i, j) with [q, c_i] safe in scan j and [q, c_j] safe in scan i.
ConstrainedGraph position_constrained_subgraph(const ScanCollection& scans,
                                               const MotionGraph& graph,
                                               Point2 q);

// For three scans whose pairwise center distances all stay within
// min(r_max) - robot_radius, the three segment-safety checks
// ([c_i,c_j] in scan k, [c_i,c_k] in scan j, [c_j,c_k] in scan i) agree, and
// each certifies that the triangle spanned by the centers lies in free space.
// Returns the three booleans in that order. Throws HypothesisViolated when
// the distance bound fails.
std::array<bool, 3> center_triangle_checks(const Scan& scan_i,
                                           const Scan& scan_j,
                                           const Scan& scan_k,
                                           double robot_radius);

// |E| - |V| + (number of connected components): the number of independent
// cycles.
int cycle_rank(const MotionGraph& graph);

}  // namespace scannav
