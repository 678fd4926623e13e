//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_CAT0_MEASURE_HPP_
#define CAT0LAB_CAT0_MEASURE_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cat0lab/error.hpp"

namespace cat0lab::cat0 {

/// A geodesic metric space with unique geodesics.
template <class S>
concept GeodesicSpace = requires(const S& space, const typename S::Point& p, double s) {
  { space.distance(p, p) } -> std::convertible_to<double>;
  { space.geodesic_point(p, p, s) } -> std::same_as<typename S::Point>;
};

/// A space that can compute the barycenter of a finite measure.
template <class S>
concept BarycentricSpace = GeodesicSpace<S> && requires(
    const S& space, const std::vector<typename S::Point>& pts, const std::vector<double>& w) {
  { space.barycenter(pts, w) } -> std::same_as<typename S::Point>;
};

/// A metric cone with the inner product <v, v'> = t t' cos(angle).
template <class S>
concept ConeSpace = BarycentricSpace<S> && requires(const S& space, const typename S::Point& p) {
  { space.inner(p, p) } -> std::convertible_to<double>;
  { space.norm(p) } -> std::convertible_to<double>;
  { space.origin() } -> std::same_as<typename S::Point>;
};

inline constexpr double kWeightTolerance = 1e-12;

/// Finitely supported probability measure sum_i t_i Dirac_{p_i}.
template <class P>
struct FiniteMeasure {
  std::vector<P> support;
  std::vector<double> weights;

  FiniteMeasure() = default;
  FiniteMeasure(std::vector<P> pts, std::vector<double> w)
      : support(std::move(pts)), weights(std::move(w)) {
    validate();
  }

  static FiniteMeasure uniform(std::vector<P> pts) {
    std::vector<double> w(pts.size(), 1.0 / static_cast<double>(pts.size()));
    return FiniteMeasure(std::move(pts), std::move(w));
  }

  std::size_t size() const { return support.size(); }

  void validate() const {
    require(!support.empty(), "measure: empty support");
    require(support.size() == weights.size(), "measure: weight count mismatch");
    double total = 0.0;
    for (double w : weights) {
      require(w > 0.0 && std::isfinite(w), "measure: weights must be positive");
      total += w;
    }
    require(std::abs(total - 1.0) <= kWeightTolerance * support.size() + kWeightTolerance,
            "measure: weights must sum to 1");
  }
};

template <BarycentricSpace S>
typename S::Point barycenter(const S& space, const FiniteMeasure<typename S::Point>& m) {
  m.validate();
  return space.barycenter(m.support, m.weights);
}

/// q -> sum_i t_i d(p_i, q)^2.
template <GeodesicSpace S>
double weighted_sq_distance(const S& space, const FiniteMeasure<typename S::Point>& m,
                            const typename S::Point& q) {
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double d = space.distance(m.support[i], q);
    total += m.weights[i] * d * d;
  }
  return total;
}

struct InductiveMeanOptions {
  int max_passes = 100000;
  double tolerance = 1e-9;
  unsigned seed = 1;
};

template <class P>
struct InductiveMeanResult {
  P point;
  int passes = 0;
  double last_displacement = 0.0;
};

/// Iterated geodesic averaging: fold support points in one at a time along
/// geodesics with weight t_i / (cumulative weight), repeating shuffled passes
/// with the cumulative weight carried across passes. Stops once a full pass
/// moves the estimate less than the tolerance. The error decays like 1/N in
/// the pass count while the per-pass displacement decays like 1/N^2.
template <GeodesicSpace S>
InductiveMeanResult<typename S::Point> inductive_mean(
    const S& space, const FiniteMeasure<typename S::Point>& m,
    InductiveMeanOptions options = {}) {
  m.validate();
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);

  auto x = m.support[0];
  double cumulative = m.weights[0];
  for (std::size_t i = 1; i < m.size(); ++i) {
    cumulative += m.weights[i];
    x = space.geodesic_point(x, m.support[i], m.weights[i] / cumulative);
  }
  InductiveMeanResult<typename S::Point> result{x, 1, 0.0};
  for (int pass = 2; pass <= options.max_passes; ++pass) {
    std::shuffle(order.begin(), order.end(), rng);
    const auto previous = x;
    for (std::size_t i : order) {
      cumulative += m.weights[i];
      x = space.geodesic_point(x, m.support[i], m.weights[i] / cumulative);
    }
    result.point = x;
    result.passes = pass;
    result.last_displacement = space.distance(previous, x);
    if (pass >= 16 && result.last_displacement < options.tolerance) return result;
  }
  fail(ErrorKind::kConvergence,
       "inductive_mean: no convergence after " + std::to_string(options.max_passes) +
           " passes, last displacement " + std::to_string(result.last_displacement));
}

/// Both sides of the variance inequalities
///   (1) sum t_i d(v_i, w)^2 >= sum t_i d(v_i, bar)^2 + d(bar, w)^2,
///   (2) 1/2 sum_ij t_i t_j d(v_i, v_j)^2 >= sum t_i d(v_i, bar)^2.
struct VarianceReport {
  double lhs1 = 0.0;
  double rhs1 = 0.0;
  double lhs2 = 0.0;
  double rhs2 = 0.0;
  double slack1() const { return lhs1 - rhs1; }
  double slack2() const { return lhs2 - rhs2; }
  bool holds(double tol = 1e-8) const { return slack1() >= -tol && slack2() >= -tol; }
};

template <BarycentricSpace S>
VarianceReport variance_report(const S& space, const FiniteMeasure<typename S::Point>& m,
                               const typename S::Point& w) {
  const auto bar = barycenter(space, m);
  VarianceReport r;
  const double spread = weighted_sq_distance(space, m, bar);
  const double dbw = space.distance(bar, w);
  r.lhs1 = weighted_sq_distance(space, m, w);
  r.rhs1 = spread + dbw * dbw;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double d = space.distance(m.support[i], m.support[j]);
      r.lhs2 += 0.5 * m.weights[i] * m.weights[j] * d * d;
    }
  }
  r.rhs2 = spread;
  return r;
}

/// <bar, w> - sum t_i <v_i, w> (must be >= 0) and the equality defect
/// |bar|^2 - sum t_i <v_i, bar> (must vanish).
struct InnerProductReport {
  double slack = 0.0;
  double equality_defect = 0.0;
  bool holds(double tol = 1e-8) const {
    return slack >= -tol && std::abs(equality_defect) <= tol;
  }
};

template <ConeSpace S>
InnerProductReport tangent_inner_product_check(const S& cone,
                                               const FiniteMeasure<typename S::Point>& m,
                                               const typename S::Point& w) {
  const auto bar = barycenter(cone, m);
  double against_w = 0.0;
  double against_bar = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    against_w += m.weights[i] * cone.inner(m.support[i], w);
    against_bar += m.weights[i] * cone.inner(m.support[i], bar);
  }
  const double nb = cone.norm(bar);
  return {cone.inner(bar, w) - against_w, nb * nb - against_bar};
}

/// d(p, c(t))^2 <= (1-t) d(p,c0)^2 + t d(p,c1)^2 - t(1-t) d(c0,c1)^2; returns
/// right side minus left side.
template <GeodesicSpace S>
double cat0_comparison_slack(const S& space, const typename S::Point& p,
                             const typename S::Point& c0, const typename S::Point& c1,
                             double t) {
  const auto ct = space.geodesic_point(c0, c1, t);
  const double a = space.distance(p, ct);
  const double b = space.distance(p, c0);
  const double c = space.distance(p, c1);
  const double l = space.distance(c0, c1);
  return (1 - t) * b * b + t * c * c - t * (1 - t) * l * l - a * a;
}

}  // namespace cat0lab::cat0

#endif  // CAT0LAB_CAT0_MEASURE_HPP_
