//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_CAT0_EUCLIDEAN_HPP_
#define CAT0LAB_CAT0_EUCLIDEAN_HPP_

#include <vector>

#include <Eigen/Dense>

#include "cat0lab/error.hpp"

namespace cat0lab::cat0 {

inline void check_fraction(double s) {
  require(s >= 0.0 && s <= 1.0, "geodesic_point: s must lie in [0, 1]");
}

/// R^d. Also its own tangent cone at every point.
class Euclidean {
 public:
  using Point = Eigen::VectorXd;

  explicit Euclidean(int dimension) : dimension_(dimension) {
    require(dimension >= 1, "euclidean: dimension must be positive");
  }

  int dimension() const { return dimension_; }
  Point origin() const { return Point::Zero(dimension_); }

  double distance(const Point& x, const Point& y) const {
    check(x);
    check(y);
    return (x - y).norm();
  }
  Point geodesic_point(const Point& x, const Point& y, double s) const {
    check_fraction(s);
    return (1.0 - s) * x + s * y;
  }
  Point barycenter(const std::vector<Point>& pts, const std::vector<double>& w) const {
    Point out = origin();
    for (std::size_t i = 0; i < pts.size(); ++i) out += w[i] * pts[i];
    return out;
  }
  double inner(const Point& x, const Point& y) const { return x.dot(y); }
  double norm(const Point& x) const { return x.norm(); }

  Euclidean tangent_cone(const Point&) const { return *this; }
  Point log_map(const Point& p, const Point& q) const { return q - p; }

 private:
  void check(const Point& x) const {
    require(x.size() == dimension_, "euclidean: point of wrong dimension");
  }

  int dimension_;
};

}  // namespace cat0lab::cat0

#endif  // CAT0LAB_CAT0_EUCLIDEAN_HPP_
