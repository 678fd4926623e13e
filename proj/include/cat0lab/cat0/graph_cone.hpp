//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_CAT0_GRAPH_CONE_HPP_
#define CAT0LAB_CAT0_GRAPH_CONE_HPP_

#include <vector>

#include "cat0lab/cat0/metric_graph.hpp"

namespace cat0lab::cat0 {

/// Euclidean cone C(S) over a metric graph S:
///   d((u,t), (u',t'))^2 = t^2 + t'^2 - 2 t t' cos min{d_S(u,u'), pi}.
/// C(S) is CAT(0) exactly when every cycle of S has length >= 2 pi, which
/// the constructor checks.
class GraphCone {
 public:
  struct Point {
    Position direction;
    double radius = 0.0;  // 0 is the apex; the direction is then ignored
  };

  explicit GraphCone(graph::Graph directions);

  const MetricGraph& directions() const { return metric_; }
  Point origin() const { return {Position{0, 0.0}, 0.0}; }
  Point vertex_point(int v, double radius) const { return {metric_.vertex(v), radius}; }

  /// min{d_S(u, u'), pi}.
  double angle(const Position& x, const Position& y) const;

  double distance(const Point& x, const Point& y) const;
  /// Unfolds the two rays into a planar sector when the angle is below pi;
  /// otherwise the geodesic passes through the apex (also at exactly pi).
  Point geodesic_point(const Point& x, const Point& y, double s) const;
  /// Exact minimizer. For a fixed direction u the objective is
  /// rho^2 - 2 rho g(u) + const with g(u) = sum t_i r_i cos angle(u, u_i),
  /// so the barycenter is (argmax g, max g) when max g > 0, else the apex.
  /// g is maximized piecewise in closed form along every edge of S.
  Point barycenter(const std::vector<Point>& pts, const std::vector<double>& w) const;

  /// Apex inner product t t' cos angle.
  double inner(const Point& x, const Point& y) const;
  double norm(const Point& x) const { return x.radius; }

  /// The tangent cone at the apex is the cone itself. Other base points are
  /// unsupported.
  GraphCone tangent_cone(const Point& p) const;
  Point log_map(const Point& p, const Point& q) const;

 private:
  void check(const Point& p) const;
  double pull(const std::vector<Point>& pts, const std::vector<double>& w,
              const Position& u) const;

  MetricGraph metric_;
};

/// Brute force over directions spaced h apart on every edge of S and radii
/// 0, h, 2h, ... up to the largest support radius.
GraphCone::Point barycenter_oracle(const GraphCone& cone,
                                   const std::vector<GraphCone::Point>& pts,
                                   const std::vector<double>& w, double h);

/// Length of the shortest cycle of a metric graph (infinity for trees).
double metric_girth(const graph::Graph& g);

}  // namespace cat0lab::cat0

#endif  // CAT0LAB_CAT0_GRAPH_CONE_HPP_
