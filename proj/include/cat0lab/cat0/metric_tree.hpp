//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_CAT0_METRIC_TREE_HPP_
#define CAT0LAB_CAT0_METRIC_TREE_HPP_

#include <vector>

#include "cat0lab/cat0/metric_graph.hpp"
#include "cat0lab/cat0/pod.hpp"

namespace cat0lab::cat0 {

/// Finite metric tree. The tangent cone at a vertex of degree d is the
/// d-pod (leg k follows the k-th incident edge); at an edge interior point
/// it is the 2-pod (leg 0 toward edge.u, leg 1 toward edge.v).
class MetricTree {
 public:
  using Point = Position;

  explicit MetricTree(graph::Graph g);

  const MetricGraph& metric() const { return metric_; }
  const graph::Graph& graph() const { return metric_.graph(); }
  Point vertex(int v) const { return metric_.vertex(v); }

  double distance(const Point& x, const Point& y) const;
  Point geodesic_point(const Point& x, const Point& y, double s) const;
  /// Exact minimizer: on every edge the objective is piecewise quadratic in
  /// the offset with breakpoints where a support point's route changes.
  Point barycenter(const std::vector<Point>& pts, const std::vector<double>& w) const;

  Pod tangent_cone(const Point& p) const;
  Pod::Point log_map(const Point& p, const Point& q) const;

 private:
  MetricGraph metric_;
};

/// Brute-force minimizer over offsets 0, h, 2h, ... on every edge (plus the
/// far endpoint), restricted to the ball of radius diam(support) around the
/// first support point.
Position barycenter_oracle(const MetricTree& tree, const std::vector<Position>& pts,
                           const std::vector<double>& w, double h);
Pod::Point barycenter_oracle(const Pod& pod, const std::vector<Pod::Point>& pts,
                             const std::vector<double>& w, double h);

}  // namespace cat0lab::cat0

#endif  // CAT0LAB_CAT0_METRIC_TREE_HPP_
