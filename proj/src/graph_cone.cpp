//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/cat0/graph_cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "cat0lab/cat0/euclidean.hpp"
#include "cat0lab/error.hpp"

namespace cat0lab::cat0 {

namespace {

constexpr double kPi = std::numbers::pi;

double objective(const GraphCone& cone, const std::vector<GraphCone::Point>& pts,
                 const std::vector<double>& w, const GraphCone::Point& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = cone.distance(pts[i], x);
    total += w[i] * d * d;
  }
  return total;
}

}  // namespace

double metric_girth(const graph::Graph& g) {
  const int n = g.vertex_count();
  double best = std::numeric_limits<double>::infinity();
  using Item = std::pair<double, int>;
  for (int skip = 0; skip < g.edge_count(); ++skip) {
    const graph::Edge& e = g.edge(skip);
    if (e.u == e.v) {
      best = std::min(best, e.length);
      continue;
    }
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[e.u] = 0.0;
    heap.push({0.0, e.u});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u] || d + e.length >= best) continue;
      for (const graph::Incidence& inc : g.incident(u)) {
        if (inc.edge == skip) continue;
        const double nd = d + g.edge(inc.edge).length;
        if (nd < dist[inc.to]) {
          dist[inc.to] = nd;
          heap.push({nd, inc.to});
        }
      }
    }
    best = std::min(best, e.length + dist[e.v]);
  }
  return best;
}

GraphCone::GraphCone(graph::Graph directions) : metric_(std::move(directions)) {
  const double girth = metric_girth(metric_.graph());
  require(girth >= 2.0 * kPi * (1.0 - 1e-12),
          "graph cone: direction graph has a cycle shorter than 2 pi");
}

void GraphCone::check(const Point& p) const {
  require(p.radius >= 0.0 && std::isfinite(p.radius), "graph cone: negative radius");
  metric_.check(p.direction);
}

double GraphCone::angle(const Position& x, const Position& y) const {
  return std::min(metric_.distance(x, y), kPi);
}

double GraphCone::distance(const Point& x, const Point& y) const {
  check(x);
  check(y);
  if (x.radius == 0.0 || y.radius == 0.0) return std::abs(x.radius - y.radius);
  const double c = std::cos(angle(x.direction, y.direction));
  const double sq = x.radius * x.radius + y.radius * y.radius - 2.0 * x.radius * y.radius * c;
  return std::sqrt(std::max(sq, 0.0));
}

GraphCone::Point GraphCone::geodesic_point(const Point& x, const Point& y, double s) const {
  check_fraction(s);
  check(x);
  check(y);
  if (s == 0.0) return x;
  if (s == 1.0) return y;
  if (x.radius == 0.0) return {y.direction, s * y.radius};
  if (y.radius == 0.0) return {x.direction, (1.0 - s) * x.radius};
  const double phi = metric_.distance(x.direction, y.direction);
  if (phi >= kPi) {
    const double t = s * (x.radius + y.radius);
    if (t <= x.radius) return {x.direction, x.radius - t};
    return {y.direction, t - x.radius};
  }
  const double px = (1.0 - s) * x.radius + s * y.radius * std::cos(phi);
  const double py = s * y.radius * std::sin(phi);
  const double theta = std::clamp(std::atan2(py, px), 0.0, phi);
  return {metric_.along(x.direction, y.direction, theta), std::hypot(px, py)};
}

double GraphCone::pull(const std::vector<Point>& pts, const std::vector<double>& w,
                       const Position& u) const {
  double g = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].radius == 0.0) continue;
    g += w[i] * pts[i].radius * std::cos(angle(u, pts[i].direction));
  }
  return g;
}

GraphCone::Point GraphCone::barycenter(const std::vector<Point>& pts,
                                       const std::vector<double>& w) const {
  const graph::Graph& s_graph = metric_.graph();
  const std::size_t m = pts.size();
  for (const Point& p : pts) check(p);

  double best_g = -std::numeric_limits<double>::infinity();
  Position best_u{0, 0.0};
  for (int e = 0; e < s_graph.edge_count(); ++e) {
    const graph::Edge& edge = s_graph.edge(e);
    const double len = edge.length;
    // Distance from offset s to u_i is the minimum of the lines s + a_i,
    // len - s + b_i and, on the same edge, |s - s_i|.
    std::vector<double> a(m), b(m);
    std::vector<double> breaks{0.0, len};
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = metric_.distance_to_vertex(pts[i].direction, edge.u);
      b[i] = metric_.distance_to_vertex(pts[i].direction, edge.v);
      breaks.insert(breaks.end(), {0.5 * (len + b[i] - a[i]), kPi - a[i], len + b[i] - kPi});
      if (pts[i].direction.edge == e) {
        const double si = pts[i].direction.offset;
        breaks.insert(breaks.end(),
                      {si, 0.5 * (si - a[i]), 0.5 * (len + b[i] + si), si + kPi, si - kPi});
      }
    }
    for (double& x : breaks) x = std::clamp(x, 0.0, len);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto consider = [&](double s) {
      const Position u{e, std::clamp(s, 0.0, len)};
      const double g = pull(pts, w, u);
      if (g > best_g) {
        best_g = g;
        best_u = u;
      }
    };
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      const double lo = breaks[k];
      const double hi = breaks[k + 1];
      consider(lo);
      // On (lo, hi), g(s) = alpha cos s + beta sin s + const.
      const double mid = 0.5 * (lo + hi);
      double alpha = 0.0;
      double beta = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (pts[i].radius == 0.0) continue;
        double sigma = 1.0;
        double c = a[i];
        double d = mid + a[i];
        if (len - mid + b[i] < d) {
          sigma = -1.0;
          c = len + b[i];
          d = len - mid + b[i];
        }
        if (pts[i].direction.edge == e) {
          const double si = pts[i].direction.offset;
          if (std::abs(mid - si) < d) {
            sigma = mid >= si ? 1.0 : -1.0;
            c = -sigma * si;
            d = std::abs(mid - si);
          }
        }
        if (d >= kPi) continue;
        const double weight = w[i] * pts[i].radius;
        alpha += weight * std::cos(c);
        beta -= weight * sigma * std::sin(c);
      }
      const double peak = std::atan2(beta, alpha);
      for (int turn = -1; turn <= 2; ++turn) {
        const double s = peak + 2.0 * kPi * turn;
        if (s > lo && s < hi) consider(s);
      }
    }
    consider(len);
  }
  if (best_g <= 0.0) return origin();
  return {best_u, best_g};
}

double GraphCone::inner(const Point& x, const Point& y) const {
  if (x.radius == 0.0 || y.radius == 0.0) return 0.0;
  return x.radius * y.radius * std::cos(angle(x.direction, y.direction));
}

GraphCone GraphCone::tangent_cone(const Point& p) const {
  if (p.radius != 0.0) {
    fail(ErrorKind::kUnsupported, "graph cone: tangent cone away from the apex");
  }
  return *this;
}

GraphCone::Point GraphCone::log_map(const Point& p, const Point& q) const {
  if (p.radius != 0.0) fail(ErrorKind::kUnsupported, "graph cone: log_map away from the apex");
  return q;
}

GraphCone::Point barycenter_oracle(const GraphCone& cone,
                                   const std::vector<GraphCone::Point>& pts,
                                   const std::vector<double>& w, double h) {
  require(h > 0.0, "barycenter_oracle: h must be positive");
  double radius = 0.0;
  for (const auto& p : pts) radius = std::max(radius, p.radius);
  const int radial_steps = static_cast<int>(std::ceil(radius / h));
  const graph::Graph& s_graph = cone.directions().graph();
  GraphCone::Point best = cone.origin();
  double best_value = objective(cone, pts, w, best);
  for (int e = 0; e < s_graph.edge_count(); ++e) {
    const double len = s_graph.edge(e).length;
    const int steps = static_cast<int>(std::ceil(len / h));
    for (int k = 0; k <= steps; ++k) {
      const Position u{e, std::min(k * h, len)};
      for (int j = 1; j <= radial_steps; ++j) {
        const GraphCone::Point x{u, j * h};
        const double value = objective(cone, pts, w, x);
        if (value < best_value) {
          best_value = value;
          best = x;
        }
      }
    }
  }
  return best;
}

}  // namespace cat0lab::cat0
