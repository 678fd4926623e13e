//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/cat0/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cat0lab/error.hpp"

namespace cat0lab::cat0 {

MetricGraph::MetricGraph(graph::Graph g) : graph_(std::move(g)) {
  dist_ = graph_.metric_distances();
  const int n = graph_.vertex_count();
  next_.assign(n, std::vector<graph::Incidence>(n, graph::Incidence{-1, -1}));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const double target = dist_[a][b];
      const double slack = 1e-12 * (1.0 + target);
      graph::Incidence best{-1, -1};
      for (const graph::Incidence& inc : graph_.incident(a)) {
        if (length(inc.edge) + dist_[inc.to][b] > target + slack) continue;
        if (best.to < 0 || inc.to < best.to ||
            (inc.to == best.to && inc.edge < best.edge)) {
          best = inc;
        }
      }
      next_[a][b] = best;
    }
  }
}

Position MetricGraph::vertex(int v) const {
  require(v >= 0 && v < graph_.vertex_count(), "metric graph: vertex out of range");
  const graph::Incidence& inc = graph_.incident(v)[0];
  const graph::Edge& e = graph_.edge(inc.edge);
  return {inc.edge, e.u == v ? 0.0 : e.length};
}

std::optional<int> MetricGraph::as_vertex(const Position& p) const {
  const graph::Edge& e = graph_.edge(p.edge);
  if (p.offset <= 1e-12 * e.length) return e.u;
  if (p.offset >= e.length * (1.0 - 1e-12)) return e.v;
  return std::nullopt;
}

void MetricGraph::check(const Position& p) const {
  require(p.edge >= 0 && p.edge < graph_.edge_count(), "position: edge out of range");
  const double len = length(p.edge);
  require(p.offset >= -1e-12 * len && p.offset <= len * (1.0 + 1e-12),
          "position: offset outside [0, length]");
}

double MetricGraph::to_end(const Position& p, int end_vertex) const {
  const graph::Edge& e = graph_.edge(p.edge);
  return end_vertex == e.u ? p.offset : e.length - p.offset;
}

MetricGraph::Route MetricGraph::route(const Position& x, const Position& y) const {
  Route best{std::numeric_limits<double>::infinity(), -1, -1};
  if (x.edge == y.edge) best = {std::abs(x.offset - y.offset), -1, -1};
  const graph::Edge& ex = graph_.edge(x.edge);
  const graph::Edge& ey = graph_.edge(y.edge);
  for (int a : {ex.u, ex.v}) {
    for (int b : {ey.u, ey.v}) {
      const double len = to_end(x, a) + dist_[a][b] + to_end(y, b);
      if (len < best.length) best = {len, a, b};
    }
  }
  return best;
}

double MetricGraph::distance(const Position& x, const Position& y) const {
  return route(x, y).length;
}

double MetricGraph::distance_to_vertex(const Position& x, int v) const {
  const graph::Edge& e = graph_.edge(x.edge);
  return std::min(x.offset + dist_[e.u][v], e.length - x.offset + dist_[e.v][v]);
}

Position MetricGraph::along(const Position& x, const Position& y, double t) const {
  const Route r = route(x, y);
  t = std::clamp(t, 0.0, r.length);
  if (r.exit < 0) {
    return {x.edge, x.offset + (y.offset >= x.offset ? t : -t)};
  }
  // Leg 1: along x's edge to the exit vertex.
  const graph::Edge& ex = graph_.edge(x.edge);
  const double first = to_end(x, r.exit);
  if (t <= first) return {x.edge, r.exit == ex.u ? x.offset - t : x.offset + t};
  t -= first;
  // Leg 2: vertex path exit -> entry.
  int w = r.exit;
  while (w != r.entry) {
    const graph::Incidence hop = next_[w][r.entry];
    const graph::Edge& e = graph_.edge(hop.edge);
    if (t <= e.length) return {hop.edge, e.u == w ? t : e.length - t};
    t -= e.length;
    w = hop.to;
  }
  // Leg 3: from the entry vertex into y's edge.
  const graph::Edge& ey = graph_.edge(y.edge);
  t = std::min(t, to_end(y, r.entry));
  return {y.edge, r.entry == ey.u ? t : ey.length - t};
}

}  // namespace cat0lab::cat0
