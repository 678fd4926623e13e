//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_CAT0_POD_HPP_
#define CAT0LAB_CAT0_POD_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "cat0lab/cat0/euclidean.hpp"
#include "cat0lab/error.hpp"

namespace cat0lab::cat0 {

/// The m-pod: m half-lines glued at their endpoints. It is the cone over m
/// points at mutual angle pi, so <v, v'> = t t' on one leg and -t t' across.
class Pod {
 public:
  struct Point {
    int leg = 0;
    double radius = 0.0;
  };

  explicit Pod(int legs) : legs_(legs) { require(legs >= 1, "pod: need at least one leg"); }

  int legs() const { return legs_; }
  Point origin() const { return {0, 0.0}; }

  double distance(const Point& x, const Point& y) const {
    check(x);
    check(y);
    return same_ray(x, y) ? std::abs(x.radius - y.radius) : x.radius + y.radius;
  }

  Point geodesic_point(const Point& x, const Point& y, double s) const {
    check_fraction(s);
    if (same_ray(x, y)) {
      const int leg = x.radius > 0.0 ? x.leg : y.leg;
      return {leg, (1.0 - s) * x.radius + s * y.radius};
    }
    const double t = s * (x.radius + y.radius);
    if (t <= x.radius) return {x.leg, x.radius - t};
    return {y.leg, t - x.radius};
  }

  /// Closed form: on leg j the objective is rho^2 - 2 rho m_j + const with
  /// m_j = (mass-weighted radius on j) - (on the other legs). At most one
  /// m_j is positive; otherwise the apex wins.
  Point barycenter(const std::vector<Point>& pts, const std::vector<double>& w) const {
    std::vector<double> on_leg(legs_, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      check(pts[i]);
      on_leg[pts[i].leg] += w[i] * pts[i].radius;
      total += w[i] * pts[i].radius;
    }
    Point best = origin();
    for (int j = 0; j < legs_; ++j) {
      const double m = 2.0 * on_leg[j] - total;
      if (m > best.radius) best = {j, m};
    }
    return best;
  }

  double inner(const Point& x, const Point& y) const {
    const double prod = x.radius * y.radius;
    return x.leg == y.leg ? prod : -prod;
  }
  double norm(const Point& x) const { return x.radius; }

  /// Tangent cone at the apex is the pod itself; elsewhere it is a line,
  /// realized as the 2-pod (leg 0 toward the apex).
  Pod tangent_cone(const Point& p) const { return p.radius == 0.0 ? *this : Pod(2); }
  Point log_map(const Point& p, const Point& q) const {
    if (p.radius == 0.0) return q;
    const double d = distance(p, q);
    if (same_ray(p, q) && q.radius > p.radius) return {1, d};
    return {0, d};
  }

 private:
  bool same_ray(const Point& x, const Point& y) const {
    return x.leg == y.leg || x.radius == 0.0 || y.radius == 0.0;
  }
  void check(const Point& x) const {
    require(x.leg >= 0 && x.leg < legs_ && x.radius >= 0.0, "pod: invalid point");
  }

  int legs_;
};

}  // namespace cat0lab::cat0

#endif  // CAT0LAB_CAT0_POD_HPP_
