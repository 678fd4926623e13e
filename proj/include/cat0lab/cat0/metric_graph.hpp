//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_CAT0_METRIC_GRAPH_HPP_
#define CAT0LAB_CAT0_METRIC_GRAPH_HPP_

#include <vector>

#include "cat0lab/graph.hpp"

namespace cat0lab::cat0 {

/// A point of a metric graph: `offset` is measured from edge(edge).u.
struct Position {
  int edge = 0;
  double offset = 0.0;
};

/// Geometric realization of a graph: every edge is a segment of its length.
/// Shortest paths between arbitrary points go through one of the four
/// endpoint pairs (or stay on a shared edge); ties are broken in a fixed
/// order so that paths are deterministic.
class MetricGraph {
 public:
  explicit MetricGraph(graph::Graph g);

  const graph::Graph& graph() const { return graph_; }
  double length(int e) const { return graph_.edge(e).length; }
  double vertex_distance(int a, int b) const { return dist_[a][b]; }

  /// A position representing vertex v (on its first incident edge).
  Position vertex(int v) const;
  /// Vertex at the position, if the offset is an endpoint within 1e-12 L.
  std::optional<int> as_vertex(const Position& p) const;
  void check(const Position& p) const;

  double distance(const Position& x, const Position& y) const;
  double distance_to_vertex(const Position& x, int v) const;
  /// Point at arc length t along the chosen shortest path from x to y.
  Position along(const Position& x, const Position& y, double t) const;

 private:
  struct Route {
    double length;
    int exit;   // vertex leaving x's edge, or -1 for the direct route
    int entry;  // vertex entering y's edge
  };
  Route route(const Position& x, const Position& y) const;
  double to_end(const Position& p, int end_vertex) const;

  graph::Graph graph_;
  std::vector<std::vector<double>> dist_;
  std::vector<std::vector<graph::Incidence>> next_;  // first hop on a shortest path
};

}  // namespace cat0lab::cat0

#endif  // CAT0LAB_CAT0_METRIC_GRAPH_HPP_
