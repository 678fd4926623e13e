//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_ENERGY_ENERGY_HPP_
#define CAT0LAB_ENERGY_ENERGY_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cat0lab/cat0/measure.hpp"
#include "cat0lab/energy/actions.hpp"
#include "cat0lab/energy/free_group.hpp"
#include "cat0lab/error.hpp"
#include "cat0lab/graph.hpp"

namespace cat0lab::energy {

/// E_{mu^n}(f) = 1/2 sum_g mu^n(e, g) d(f(e), rho(g) f(e))^2 for the
/// equivariant map with f(e) = y0.
template <GroupAction A>
double equivariant_energy(const A& action, const typename A::Point& y0,
                          const FreeWalkDistribution& mu) {
  require(mu.k == action.rank(), "equivariant_energy: walk rank differs from the action rank");
  double total = 0.0;
  for (const auto& [w, p] : mu.table) {
    const double d = action.space().distance(y0, act(action, w, y0));
    total += p * d * d;
  }
  return 0.5 * total;
}

template <GroupAction A>
double equivariant_energy(const A& action, const typename A::Point& y0, int n) {
  return equivariant_energy(action, y0, free_walk_distribution(action.rank(), n));
}

/// A vector of the tangent cone at a fixed base point.
template <class Cone>
struct TangentVector {
  Cone cone;
  typename Cone::Point v;

  double norm() const { return cone.norm(v); }
  double inner(const TangentVector& other) const { return cone.inner(v, other.v); }
};

/// -Delta f(e): barycenter in the tangent cone at y0 of the logarithms of
/// the images rho(g) y0 weighted by mu(e, g). Throws `unsupported` when the
/// target has no tangent cone at y0.
template <GroupAction A>
auto minus_delta(const A& action, const typename A::Point& y0, const FreeWalkDistribution& mu) {
  require(mu.k == action.rank(), "minus_delta: walk rank differs from the action rank");
  const auto& space = action.space();
  auto cone = space.tangent_cone(y0);
  using ConePoint = typename decltype(cone)::Point;
  std::vector<ConePoint> logs;
  std::vector<double> w;
  for (const auto& [word, p] : mu.table) {
    logs.push_back(space.log_map(y0, act(action, word, y0)));
    w.push_back(p);
  }
  auto bar = cone.barycenter(logs, w);
  return TangentVector<decltype(cone)>{std::move(cone), std::move(bar)};
}

/// Slacks (right side minus left side, or left minus right, so that every
/// entry must be >= 0) of the n-step inequalities at one n.
struct InequalityRow {
  int n = 0;
  double energy = 0.0;            // E_{mu^n}
  double ratio = 0.0;             // E_{mu^n} / E_mu (0 when E_mu = 0)
  double gradient_norm = 0.0;     // |-Delta_n f|
  double cross_sum = 0.0;         // sum_{i<n} <-Delta_i f, -Delta_1 f>
  double n_step = 0.0;            // E_n - (n E_1 - cross_sum)
  double energy_growth = 0.0;     // n^2 E_1 - E_n
  double gradient_growth = 0.0;   // 2 n^2 E_1 - |-Delta_n f|^2
  double linear_gradient = 0.0;   // E_n - n E_1 + n(n-1)/2 sqrt(2 E_1) |-Delta_1 f|
  bool has_gradient = false;
};

struct InequalityReport {
  double energy = 0.0;            // E_mu
  double gradient_norm = 0.0;     // |-Delta_1 f|
  double gradient_bound = 0.0;    // 2 E_mu - |-Delta_1 f|^2
  double two_step = 0.0;          // E_{mu*mu} - 2 E_mu + |-Delta_1 f|^2
  bool has_gradient = false;
  std::vector<InequalityRow> rows;

  double min_slack() const;
  bool holds(double tol = 1e-8) const { return min_slack() >= -tol; }
};

inline constexpr int kMaxInequalitySteps = 8;

/// Evaluates every n-step inequality for n = 1..n_max (n_max <= 8). When the
/// target has no tangent cone at f(e) only the energy growth bound is kept.
template <GroupAction A>
InequalityReport inequality_report(const A& action, const typename A::Point& y0, int n_max) {
  require(n_max >= 1 && n_max <= kMaxInequalitySteps, "inequality_report: n_max must lie in [1, 8]");
  const auto powers = free_walk_powers(action.rank(), std::max(n_max, 2));
  InequalityReport report;
  std::vector<double> energies;
  for (const auto& mu : powers) energies.push_back(equivariant_energy(action, y0, mu));
  const double e1 = energies[0];
  report.energy = e1;

  using Tangent = decltype(minus_delta(action, y0, powers[0]));
  std::vector<Tangent> deltas;
  try {
    for (const auto& mu : powers) deltas.push_back(minus_delta(action, y0, mu));
    report.has_gradient = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUnsupported) throw;
    deltas.clear();
  }
  if (report.has_gradient) {
    const double g1 = deltas[0].norm();
    report.gradient_norm = g1;
    report.gradient_bound = 2.0 * e1 - g1 * g1;
    report.two_step = energies[1] - 2.0 * e1 + g1 * g1;
  }
  double cross = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    InequalityRow row;
    row.n = n;
    row.energy = energies[n - 1];
    row.ratio = e1 > 0.0 ? row.energy / e1 : 0.0;
    row.energy_growth = n * n * e1 - row.energy;
    if (report.has_gradient) {
      row.has_gradient = true;
      if (n >= 2) cross += deltas[n - 2].inner(deltas[0]);
      row.cross_sum = cross;
      const double gn = deltas[n - 1].norm();
      row.gradient_norm = gn;
      row.n_step = row.energy - (n * e1 - cross);
      row.gradient_growth = 2.0 * n * n * e1 - gn * gn;
      row.linear_gradient = row.energy - n * e1 +
                            0.5 * n * (n - 1) * std::sqrt(2.0 * e1) * report.gradient_norm;
    }
    report.rows.push_back(row);
  }
  return report;
}

/// The affine identities: -Delta_n f = (I + M + ... + M^(n-1))(-Delta_1 f),
/// M selfadjoint, and E_{mu^n} <= n E_mu with equality iff f is harmonic.
struct AffineRow {
  int n = 0;
  double identity_defect = 0.0;  // max |direct - operator form|
  double hilbert_defect = 0.0;   // |E_n - (n E_1 - sum <-Delta_i, -Delta_1>)|
  double energy_slack = 0.0;     // n E_1 - E_n
  bool equality = false;         // energy_slack < 1e-8
};

struct AffineReport {
  double gradient_norm = 0.0;
  bool harmonic = false;  // |-Delta_1 f| < 1e-10
  double selfadjoint_defect = 0.0;
  std::vector<AffineRow> rows;

  /// Identities to `tol`, E_n <= n E_1, and, for n >= 2, equality exactly
  /// at harmonic maps.
  bool holds(double tol = 1e-10) const;
};

AffineReport affine_operator_report(const EuclideanAction& action, const Eigen::VectorXd& y0,
                                    int n_max, Rng& rng, int selfadjoint_pairs = 100);

/// C = 2 eps^2 / (n^2 (n-1)^2): |-Delta f|^2 >= C E(f) whenever
/// E_{mu^n} <= (n - eps) E_mu holds for all maps.
double n_step_gradient_constant(int n, double eps);

struct DescentOptions {
  double step = 0.5;
  double tol = 1e-9;
  int max_iter = 100000;
  int divergence_window = 100;
};

struct DescentStep {
  int iteration = 0;
  double energy = 0.0;
  double gradient_norm = 0.0;
};

template <class P>
struct DescentResult {
  P point;
  std::vector<DescentStep> trace;
  std::string stop;  // "energy", "gradient" or "max_iter"
};

/// Thrown when the energy rises for `divergence_window` consecutive steps.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::vector<DescentStep> trace)
      : Error(ErrorKind::kConvergence, what), trace_(std::move(trace)) {}
  const std::vector<DescentStep>& trace() const { return trace_; }

 private:
  std::vector<DescentStep> trace_;
};

/// CSV with header iteration,energy,gradient_norm.
std::string trace_csv(std::span<const DescentStep> trace);

/// y <- geodesic_point(y, barycenter of the one-step images rho(s) y, step)
/// until E_mu < tol, |-Delta_mu f| < tol or max_iter.
template <GroupAction A>
DescentResult<typename A::Point> fixed_point_descent(const A& action, typename A::Point y,
                                                     DescentOptions options = {}) {
  require(options.step > 0.0 && options.step <= 1.0, "fixed_point_descent: step must lie in (0, 1]");
  require(options.tol > 0.0 && options.max_iter >= 0, "fixed_point_descent: bad tolerance");
  const auto mu = free_walk_distribution(action.rank(), 1);
  const auto& space = action.space();
  DescentResult<typename A::Point> result;
  int rising = 0;
  for (int it = 0;; ++it) {
    DescentStep step{it, equivariant_energy(action, y, mu), minus_delta(action, y, mu).norm()};
    if (!result.trace.empty() && step.energy > result.trace.back().energy) {
      ++rising;
    } else {
      rising = 0;
    }
    result.trace.push_back(step);
    if (rising >= options.divergence_window) {
      throw DivergenceError("fixed_point_descent: energy rose for " +
                                std::to_string(options.divergence_window) + " consecutive steps",
                            result.trace);
    }
    if (step.energy < options.tol) {
      result.stop = "energy";
      break;
    }
    if (step.gradient_norm < options.tol) {
      result.stop = "gradient";
      break;
    }
    if (it >= options.max_iter) {
      result.stop = "max_iter";
      break;
    }
    std::vector<typename A::Point> images;
    std::vector<double> w;
    for (const auto& [word, p] : mu.table) {
      images.push_back(act(action, word, y));
      w.push_back(p);
    }
    y = space.geodesic_point(y, space.barycenter(images, w), options.step);
  }
  result.point = y;
  return result;
}

struct ConverseRow {
  int n = 0;
  double energy = 0.0;  // E_{mu^n}
  double bound = 0.0;   // C_rho E_mu
};

struct ConverseReport {
  double constant = 0.0;  // C_rho = 1 / min_s mu(e, s) = 2k
  double energy = 0.0;
  std::vector<ConverseRow> rows;
  bool holds(double tol = 1e-8) const;
};

/// E_{mu^n}(f) <= 2k E_mu(f) for n <= n_max, for a tree action with a
/// nonempty fixed set.
ConverseReport converse_tree_check(const TreeAction& action, const cat0::Position& y0, int n_max);

/// F_m acting on its Cayley tree with f the orbit map of the identity:
/// E_{mu^n} = 1/2 sum mu^n(e, g) |g|^2, by word enumeration.
double cayley_tree_energy(int m, int n);
double cayley_tree_bound(int m, int n);

/// E_{mu_G^n}(phi) = 1/2 sum_u nu(u) sum_v mu^n(u, v) d(phi(u), phi(v))^2
/// for a precomputed kernel mu^n.
template <class S>
double vertex_energy(const S& space, const graph::WalkKernel& kernel,
                     const graph::VertexMeasure& nu, std::span<const typename S::Point> phi) {
  require(static_cast<int>(phi.size()) == kernel.state_count(),
          "vertex_energy: map must be defined on every vertex");
  double total = 0.0;
  for (int u = 0; u < kernel.state_count(); ++u) {
    double row = 0.0;
    for (const auto& [v, p] : kernel.row(u)) {
      const double d = space.distance(phi[u], phi[v]);
      row += p * d * d;
    }
    total += nu.weights[u] * row;
  }
  return 0.5 * total;
}

template <class S>
double vertex_energy(const graph::Graph& g, const S& space,
                     std::span<const typename S::Point> phi, int n) {
  require(n >= 1, "vertex_energy: need n >= 1");
  const auto walk = graph::standard_walk(g);
  return vertex_energy(space, graph::kernel_power(walk.mu, n), walk.nu, phi);
}

/// Wang's Rayleigh quotient E_{mu_G}(phi) / sum_u nu(u) d(phi(u), bar)^2 with
/// bar the barycenter of phi_* nu_G. Throws for constant maps.
template <cat0::BarycentricSpace S>
double rayleigh_quotient(const graph::Graph& g, const S& space,
                         std::span<const typename S::Point> phi) {
  const auto walk = graph::standard_walk(g);
  const double energy = vertex_energy(space, walk.mu, walk.nu, phi);
  std::vector<typename S::Point> pts(phi.begin(), phi.end());
  const auto bar = space.barycenter(pts, walk.nu.weights);
  double spread = 0.0;
  for (std::size_t u = 0; u < pts.size(); ++u) {
    const double d = space.distance(pts[u], bar);
    spread += walk.nu.weights[u] * d * d;
  }
  require(spread > 1e-24, "rayleigh_quotient: undefined for a constant map");
  return energy / spread;
}

}  // namespace cat0lab::energy

#endif  // CAT0LAB_ENERGY_ENERGY_HPP_
