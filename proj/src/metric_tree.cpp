//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/cat0/metric_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cat0lab/error.hpp"

namespace cat0lab::cat0 {

namespace {

template <class Space>
double objective(const Space& space, const std::vector<typename Space::Point>& pts,
                 const std::vector<double>& w, const typename Space::Point& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = space.distance(pts[i], x);
    total += w[i] * d * d;
  }
  return total;
}

template <class Space>
double support_diameter(const Space& space, const std::vector<typename Space::Point>& pts) {
  double diam = 0.0;
  for (const auto& p : pts) {
    for (const auto& q : pts) diam = std::max(diam, space.distance(p, q));
  }
  return diam;
}

}  // namespace

MetricTree::MetricTree(graph::Graph g) : metric_(std::move(g)) {
  require(graph().is_tree() && !graph().is_multigraph(), "metric tree: graph has a cycle");
}

double MetricTree::distance(const Point& x, const Point& y) const {
  metric_.check(x);
  metric_.check(y);
  return metric_.distance(x, y);
}

MetricTree::Point MetricTree::geodesic_point(const Point& x, const Point& y, double s) const {
  check_fraction(s);
  if (s == 0.0) return x;
  if (s == 1.0) return y;
  return metric_.along(x, y, s * distance(x, y));
}

MetricTree::Point MetricTree::barycenter(const std::vector<Point>& pts,
                                         const std::vector<double>& w) const {
  const graph::Graph& g = graph();
  Point best{0, 0.0};
  double best_value = std::numeric_limits<double>::infinity();
  const std::size_t m = pts.size();
  double mass = 0.0;
  for (double t : w) mass += t;

  for (int e = 0; e < g.edge_count(); ++e) {
    const graph::Edge& edge = g.edge(e);
    const double len = edge.length;
    // d_i(s) = min(s + a_i, len - s + b_i), or |s - s_i| on the same edge.
    std::vector<double> a(m), b(m), breaks{0.0, len};
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = metric_.distance_to_vertex(pts[i], edge.u);
      b[i] = metric_.distance_to_vertex(pts[i], edge.v);
      if (pts[i].edge == e) {
        breaks.push_back(pts[i].offset);
      } else {
        breaks.push_back(0.5 * (len + b[i] - a[i]));
      }
    }
    for (double& x : breaks) x = std::clamp(x, 0.0, len);
    std::sort(breaks.begin(), breaks.end());

    auto consider = [&](double s) {
      const Point x{e, std::clamp(s, 0.0, len)};
      const double value = objective(*this, pts, w, x);
      if (value < best_value) {
        best_value = value;
        best = x;
      }
    };
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      const double lo = breaks[k];
      const double hi = breaks[k + 1];
      consider(lo);
      if (hi <= lo) continue;
      // On (lo, hi) each d_i = sigma_i s + c_i; stationary point of the sum.
      const double mid = 0.5 * (lo + hi);
      double linear = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        double sigma;
        double c;
        if (pts[i].edge == e) {
          sigma = mid >= pts[i].offset ? 1.0 : -1.0;
          c = -sigma * pts[i].offset;
        } else if (mid + a[i] <= len - mid + b[i]) {
          sigma = 1.0;
          c = a[i];
        } else {
          sigma = -1.0;
          c = len + b[i];
        }
        linear += w[i] * sigma * c;
      }
      consider(std::clamp(-linear / mass, lo, hi));
    }
    consider(len);
  }
  return best;
}

Pod MetricTree::tangent_cone(const Point& p) const {
  if (const auto v = metric_.as_vertex(p)) return Pod(graph().degree(*v));
  return Pod(2);
}

Pod::Point MetricTree::log_map(const Point& p, const Point& q) const {
  const double d = distance(p, q);
  if (d == 0.0) return {0, 0.0};
  // Step a little along the geodesic; the step stays inside the first edge.
  double room = std::numeric_limits<double>::infinity();
  const auto v = metric_.as_vertex(p);
  if (v) {
    for (const graph::Incidence& inc : graph().incident(*v)) {
      room = std::min(room, metric_.length(inc.edge));
    }
  } else {
    room = std::min(p.offset, metric_.length(p.edge) - p.offset);
  }
  const Point z = metric_.along(p, q, 0.5 * std::min(d, room));
  if (v) {
    const auto inc = graph().incident(*v);
    for (std::size_t k = 0; k < inc.size(); ++k) {
      if (inc[k].edge == z.edge) return {static_cast<int>(k), d};
    }
    fail(ErrorKind::kDiscrepancy, "log_map: geodesic left the star of the vertex");
  }
  return {z.offset < p.offset ? 0 : 1, d};
}

Position barycenter_oracle(const MetricTree& tree, const std::vector<Position>& pts,
                           const std::vector<double>& w, double h) {
  require(h > 0.0, "barycenter_oracle: h must be positive");
  const double radius = support_diameter(tree, pts);
  const graph::Graph& g = tree.graph();
  Position best = pts[0];
  double best_value = objective(tree, pts, w, best);
  for (int e = 0; e < g.edge_count(); ++e) {
    const double len = g.edge(e).length;
    const int steps = static_cast<int>(std::ceil(len / h));
    for (int k = 0; k <= steps; ++k) {
      const Position x{e, std::min(k * h, len)};
      if (tree.distance(pts[0], x) > radius) continue;
      const double value = objective(tree, pts, w, x);
      if (value < best_value) {
        best_value = value;
        best = x;
      }
    }
  }
  return best;
}

Pod::Point barycenter_oracle(const Pod& pod, const std::vector<Pod::Point>& pts,
                             const std::vector<double>& w, double h) {
  require(h > 0.0, "barycenter_oracle: h must be positive");
  double radius = 0.0;
  for (const auto& p : pts) radius = std::max(radius, p.radius);
  const int steps = static_cast<int>(std::ceil(radius / h));
  Pod::Point best = pod.origin();
  double best_value = objective(pod, pts, w, best);
  for (int leg = 0; leg < pod.legs(); ++leg) {
    for (int k = 1; k <= steps; ++k) {
      const Pod::Point x{leg, k * h};
      const double value = objective(pod, pts, w, x);
      if (value < best_value) {
        best_value = value;
        best = x;
      }
    }
  }
  return best;
}

}  // namespace cat0lab::cat0
