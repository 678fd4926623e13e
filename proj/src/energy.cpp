//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/energy/energy.hpp"

#include <sstream>

namespace cat0lab::energy {

double InequalityReport::min_slack() const {
  double m = std::numeric_limits<double>::infinity();
  if (has_gradient) m = std::min({m, gradient_bound, two_step});
  for (const InequalityRow& r : rows) {
    m = std::min(m, r.energy_growth);
    if (r.has_gradient) m = std::min({m, r.n_step, r.gradient_growth, r.linear_gradient});
  }
  return m;
}

bool AffineReport::holds(double tol) const {
  if (selfadjoint_defect > tol) return false;
  for (const AffineRow& r : rows) {
    if (r.identity_defect > tol || r.hilbert_defect > 1e-8 || r.energy_slack < -1e-8) return false;
    if (r.n >= 2 && r.equality != harmonic) return false;
  }
  return true;
}

AffineReport affine_operator_report(const EuclideanAction& action, const Eigen::VectorXd& y0,
                                    int n_max, Rng& rng, int selfadjoint_pairs) {
  require(n_max >= 1 && n_max <= kMaxInequalitySteps,
          "affine_operator_report: n_max must lie in [1, 8]");
  const auto powers = free_walk_powers(action.rank(), n_max);
  const int d = action.dimension();
  const Eigen::MatrixXd m = action.averaging_operator();

  AffineReport report;
  for (int i = 0; i < selfadjoint_pairs; ++i) {
    Eigen::VectorXd x(d), y(d);
    for (int j = 0; j < d; ++j) x[j] = normal(rng);
    for (int j = 0; j < d; ++j) y[j] = normal(rng);
    report.selfadjoint_defect =
        std::max(report.selfadjoint_defect, std::abs((m * x).dot(y) - x.dot(m * y)));
  }

  std::vector<Eigen::VectorXd> deltas;
  std::vector<double> energies;
  for (const auto& mu : powers) {
    deltas.push_back(minus_delta(action, y0, mu).v);
    energies.push_back(equivariant_energy(action, y0, mu));
  }
  const Eigen::VectorXd& d1 = deltas[0];
  report.gradient_norm = d1.norm();
  report.harmonic = report.gradient_norm < 1e-10;

  Eigen::VectorXd power = d1;     // M^(n-1) d1
  Eigen::VectorXd partial = d1;   // (I + ... + M^(n-1)) d1
  double cross = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    if (n >= 2) {
      power = m * power;
      partial += power;
      cross += deltas[n - 2].dot(d1);
    }
    AffineRow row;
    row.n = n;
    row.identity_defect = (deltas[n - 1] - partial).cwiseAbs().maxCoeff();
    row.hilbert_defect = std::abs(energies[n - 1] - (n * energies[0] - cross));
    row.energy_slack = n * energies[0] - energies[n - 1];
    row.equality = row.energy_slack < 1e-8;
    report.rows.push_back(row);
  }
  return report;
}

double n_step_gradient_constant(int n, double eps) {
  require(n >= 2, "n_step_gradient_constant: need n >= 2");
  require(eps > 0.0, "n_step_gradient_constant: need eps > 0");
  const double nn = static_cast<double>(n) * (n - 1);
  return 2.0 * eps * eps / (nn * nn);
}

std::string trace_csv(std::span<const DescentStep> trace) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,energy,gradient_norm\n";
  for (const DescentStep& s : trace) {
    out << s.iteration << ',' << s.energy << ',' << s.gradient_norm << '\n';
  }
  return out.str();
}

bool ConverseReport::holds(double tol) const {
  for (const ConverseRow& r : rows) {
    if (r.energy > r.bound + tol) return false;
  }
  return true;
}

ConverseReport converse_tree_check(const TreeAction& action, const cat0::Position& y0, int n_max) {
  require(n_max >= 1 && n_max <= kMaxWalkSteps, "converse_tree_check: n_max must lie in [1, 12]");
  require(!action.fixed_set().empty(), "converse_tree_check: the action has no fixed point");
  ConverseReport report;
  report.constant = 2.0 * action.rank();
  const auto powers = free_walk_powers(action.rank(), n_max);
  report.energy = equivariant_energy(action, y0, powers[0]);
  for (int n = 1; n <= n_max; ++n) {
    report.rows.push_back(
        {n, equivariant_energy(action, y0, powers[n - 1]), report.constant * report.energy});
  }
  return report;
}

double cayley_tree_energy(int m, int n) {
  const auto mu = free_walk_distribution(m, n);
  double total = 0.0;
  for (const auto& [w, p] : mu.table) total += p * static_cast<double>(w.size() * w.size());
  return 0.5 * total;
}

double cayley_tree_bound(int m, int n) {
  require(m >= 1 && n >= 1, "cayley_tree_bound: need m, n >= 1");
  return m * static_cast<double>(n) * n / (2.0 * m - 1.0);
}

}  // namespace cat0lab::energy
