//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <cmath>
#include <vector>

#include "cat0lab/cat0/sampling.hpp"
#include "cat0lab/energy/energy.hpp"
#include "cat0lab/error.hpp"

using namespace cat0lab;
using namespace cat0lab::energy;

namespace {

double binomial(int n, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (n - j + i) / i;
  return c;
}

Word random_word(int k, int length, Rng& rng) {
  const auto letters = alphabet(k);
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(letters[uniform_index(rng, letters.size())]);
  return w;
}

SymmetricTree tripod() { return symmetric_tree({3}, {1.0}); }

}  // namespace

TEST_CASE("free group words") {
  CHECK(reduce("aAb") == "b");
  CHECK(reduce("abBA") == "");
  CHECK(inverse("abC") == "cBA");
  CHECK(multiply("ab", "Bc") == "ac");
  CHECK(is_reduced("abc"));
  CHECK_FALSE(is_reduced("abBc"));
  CHECK(alphabet(2) == std::vector<char>{'a', 'A', 'b', 'B'});
}

TEST_CASE("free walk distribution") {
  for (int k : {1, 2, 3}) {
    const auto one = free_walk_distribution(k, 1);
    CHECK(one.table.size() == static_cast<std::size_t>(2 * k));
    for (const auto& [w, p] : one.table) CHECK(p == doctest::Approx(1.0 / (2 * k)));
  }
  CHECK(free_walk_distribution(2, 2)(Word()) == doctest::Approx(0.25));

  for (int n = 1; n <= 10; ++n) {
    const auto mu = free_walk_distribution(1, n);
    for (int j = 0; j <= n; ++j) {
      const int x = 2 * j - n;
      const Word w = x >= 0 ? Word(x, 'a') : Word(-x, 'A');
      CHECK(mu(w) == doctest::Approx(binomial(n, j) / std::pow(2.0, n)).epsilon(1e-12));
    }
  }

  for (int k : {2, 3}) {
    const auto powers = free_walk_powers(k, 7);
    for (const auto& mu : powers) {
      CHECK(std::abs(mu.total() - 1.0) <= 1e-12);
      const auto lengths = word_length_distribution(k, mu.n);
      std::vector<double> by_length(mu.n + 1, 0.0);
      for (const auto& [w, p] : mu.table) {
        CHECK(is_reduced(w));
        CHECK(static_cast<int>(w.size()) % 2 == mu.n % 2);
        by_length[w.size()] += p;
      }
      for (int l = 0; l <= mu.n; ++l) CHECK(by_length[l] == doctest::Approx(lengths[l]).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(free_walk_distribution(2, 13), Error);
  try {
    free_walk_distribution(2, 13);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSize);
  }
}

TEST_CASE("actions are isometric and equivariant") {
  Rng rng(3);
  const auto euc = random_euclidean_action(2, 3, rng);
  const auto tree = random_tree_action(symmetric_tree({2, 2}, {1.0, 0.5}, true, 0.7), 2, rng);
  for (int trial = 0; trial < 200; ++trial) {
    const Word g = random_word(2, 1 + trial % 6, rng);
    const Word h = random_word(2, trial % 5, rng);
    const auto x = cat0::random_point(euc.space(), rng);
    const auto y = cat0::random_point(euc.space(), rng);
    CHECK(std::abs(euc.space().distance(act(euc, g, x), act(euc, g, y)) -
                   euc.space().distance(x, y)) <= 1e-10);
    CHECK(euc.space().distance(act(euc, multiply(g, h), x), act(euc, g, act(euc, h, x))) <= 1e-10);
    CHECK(euc.space().distance(act(euc, multiply(g, inverse(g)), x), x) <= 1e-10);

    const auto p = cat0::random_point(tree.space(), rng);
    const auto q = cat0::random_point(tree.space(), rng);
    CHECK(std::abs(tree.space().distance(act(tree, g, p), act(tree, g, q)) -
                   tree.space().distance(p, q)) <= 1e-10);
    CHECK(tree.space().distance(act(tree, multiply(g, h), p), act(tree, g, act(tree, h, p))) <= 1e-10);
    CHECK(tree.space().distance(act(tree, inverse(g) + g, p), p) <= 1e-10);
  }
  const auto t = tripod();
  CHECK_THROWS_AS(TreeAction(cat0::MetricTree(t.graph), {{1, 0, 2, 3}}), Error);
}

TEST_CASE("integer line energies") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const double tau = uniform(rng, -2.0, 2.0);
    const double alpha = uniform(rng, -2.0, 2.0);
    const Eigen::VectorXd y0 = Eigen::VectorXd::Constant(1, alpha);
    const auto shift = EuclideanAction::integer_line(1.0, tau);
    const auto flip = EuclideanAction::integer_line(-1.0, tau);
    for (int n = 1; n <= 10; ++n) {
      CHECK(std::abs(equivariant_energy(shift, y0, n) - n * tau * tau / 2.0) <= 1e-12);
      if (n % 2 == 1) {
        const double expected = 2.0 * (alpha - tau / 2.0) * (alpha - tau / 2.0);
        CHECK(std::abs(equivariant_energy(flip, y0, n) - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("cayley tree energy") {
  for (int m : {2, 3}) {
    for (int n = 1; n <= 6; ++n) {
      const double e = cayley_tree_energy(m, n);
      const auto lengths = word_length_distribution(m, n);
      double chain = 0.0;
      for (int l = 0; l <= n; ++l) chain += 0.5 * lengths[l] * l * l;
      CHECK(e == doctest::Approx(chain).epsilon(1e-12));
      CHECK(e <= cayley_tree_bound(m, n) + 1e-12);
    }
  }
  CHECK(cayley_tree_energy(2, 1) == doctest::Approx(0.5));
}

TEST_CASE("minus delta") {
  const auto mu = free_walk_distribution(1, 1);
  const double tau = 1.3;
  const auto flip = EuclideanAction::integer_line(-1.0, tau);
  CHECK(minus_delta(flip, Eigen::VectorXd::Constant(1, tau / 2.0), mu).norm() <= 1e-15);
  CHECK(minus_delta(flip, Eigen::VectorXd::Constant(1, 0.2), mu).norm() > 0.1);
  const auto shift = EuclideanAction::integer_line(1.0, tau);
  CHECK(minus_delta(shift, Eigen::VectorXd::Constant(1, 0.4), mu).norm() <= 1e-15);

  // Tripod rotated about its apex; f(e) at the apex pushes mass along legs.
  const auto t = tripod();
  const TreeAction rot(cat0::MetricTree(t.graph), {{0, 2, 3, 1}, {0, 1, 2, 3}});
  const cat0::Position y0{0, 0.4};  // on the leg toward vertex 1
  const auto mu2 = free_walk_distribution(2, 1);
  const auto delta = minus_delta(rot, y0, mu2);
  std::vector<cat0::Pod::Point> logs;
  std::vector<double> w;
  for (const auto& [word, p] : mu2.table) {
    logs.push_back(rot.space().log_map(y0, act(rot, word, y0)));
    w.push_back(p);
  }
  const auto oracle = cat0::barycenter_oracle(delta.cone, logs, w, 1e-3);
  CHECK(delta.cone.distance(delta.v, oracle) <= 1e-2);
  CHECK(delta.norm() > 0.0);
}

TEST_CASE("inequality suite") {
  SUBCASE("hilbert equality on the line") {
    const auto shift = EuclideanAction::integer_line(1.0, 0.8);
    const auto r = inequality_report(shift, Eigen::VectorXd::Constant(1, 0.1), 8);
    CHECK(r.holds());
    for (const auto& row : r.rows) CHECK(std::abs(row.n_step) <= 1e-12);
  }
  SUBCASE("random affine actions") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const auto action = random_euclidean_action(2, 3, rng);
      const auto y0 = cat0::random_point(action.space(), rng);
      const auto r = inequality_report(action, y0, 6);
      CHECK(r.holds());
      for (const auto& row : r.rows) {
        CHECK(std::abs(row.n_step) <= 1e-8);
        CHECK(row.energy - row.n * r.energy <= 1e-8);
      }
    }
  }
  SUBCASE("harmonic maps grow at least linearly") {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
      const auto action = random_euclidean_action(2, 4, rng);
      const auto r = inequality_report(action, action.harmonic_basepoint(), 6);
      CHECK(r.gradient_norm <= 1e-10);
      for (const auto& row : r.rows) CHECK(row.energy >= row.n * r.energy - 1e-8);
    }
  }
  SUBCASE("random tree actions") {
    Rng rng(23);
    const auto shapes = {symmetric_tree({3, 2}, {1.0, 0.6}), symmetric_tree({2, 2}, {0.8, 1.1}, true, 0.5),
                         symmetric_tree({4}, {1.0})};
    for (const auto& shape : shapes) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto action = random_tree_action(shape, 2, rng);
        const auto y0 = cat0::random_point(action.space(), rng);
        const auto r = inequality_report(action, y0, 6);
        CHECK(r.has_gradient);
        CHECK(r.holds());
      }
    }
  }
  CHECK_THROWS_AS(inequality_report(EuclideanAction::integer_line(1.0, 1.0),
                                    Eigen::VectorXd::Zero(1), 9),
                  Error);
}

TEST_CASE("affine operator identities") {
  Rng rng(29);
  const auto flip = EuclideanAction::integer_line(-1.0, 0.9);
  auto r = affine_operator_report(flip, Eigen::VectorXd::Constant(1, -0.3), 8, rng);
  CHECK(r.holds());
  CHECK(flip.averaging_operator()(0, 0) == doctest::Approx(-1.0));

  for (int trial = 0; trial < 20; ++trial) {
    const auto action = random_euclidean_action(2, 4, rng);
    r = affine_operator_report(action, cat0::random_point(action.space(), rng), 6, rng);
    CHECK(r.holds());
    CHECK_FALSE(r.harmonic);
    r = affine_operator_report(action, action.harmonic_basepoint(), 6, rng);
    CHECK(r.harmonic);
    CHECK(r.holds());
    for (const auto& row : r.rows) CHECK(std::abs(row.energy_slack) <= 1e-10);
  }
}

TEST_CASE("fixed point descent") {
  const double tau = 1.7;
  const auto flip = EuclideanAction::integer_line(-1.0, tau);
  auto res = fixed_point_descent(flip, Eigen::VectorXd::Constant(1, 5.0));
  CHECK(res.stop == "energy");
  CHECK(res.point[0] == doctest::Approx(tau / 2.0));

  const auto shift = EuclideanAction::integer_line(1.0, tau);
  res = fixed_point_descent(shift, Eigen::VectorXd::Constant(1, 0.3));
  CHECK(res.stop == "gradient");
  CHECK(res.trace.back().energy == doctest::Approx(tau * tau / 2.0));

  Rng rng(31);
  const auto shape = symmetric_tree({3, 2}, {1.0, 0.5});
  for (int trial = 0; trial < 20; ++trial) {
    const auto action = random_tree_action(shape, 2, rng);
    const auto start = cat0::random_point(action.space(), rng);
    const auto tres = fixed_point_descent(action, start);
    CHECK(tres.stop != "max_iter");
    CHECK(action.distance_to_fixed_set(tres.point) <= 1e-4);  // E < 1e-9 allows ~sqrt(E)
  }
  const std::string csv = trace_csv(res.trace);
  CHECK(csv.rfind("iteration,energy,gradient_norm\n", 0) == 0);
  CHECK(n_step_gradient_constant(2, std::sqrt(2.0) - 1.0) ==
        doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0) * (std::sqrt(2.0) - 1.0) / 4.0));
}

TEST_CASE("converse on trees with a fixed point") {
  const auto t = tripod();
  const cat0::MetricTree tree(t.graph);
  const TreeAction rot(tree, {{0, 2, 3, 1}, {0, 3, 1, 2}});
  auto r = converse_tree_check(rot, {0, 0.7}, 8);
  CHECK(r.constant == 4.0);
  CHECK(r.holds());
  CHECK(r.energy > 0.0);

  r = converse_tree_check(rot, rot.fixed_point(), 6);
  for (const auto& row : r.rows) CHECK(row.energy == 0.0);

  const TreeAction trivial(tree, {{0, 1, 2, 3}, {0, 1, 2, 3}});
  r = converse_tree_check(trivial, {2, 0.3}, 6);
  for (const auto& row : r.rows) CHECK(row.energy == 0.0);

  Rng rng(37);
  const auto shape = symmetric_tree({2, 3}, {1.0, 0.4}, true, 0.9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto action = random_tree_action(shape, 2, rng);
    CHECK(converse_tree_check(action, cat0::random_point(action.space(), rng), 6).holds());
  }
}

TEST_CASE("vertex energy and rayleigh quotient") {
  const cat0::Euclidean line(1);
  const auto tri = graph::triangle();
  std::vector<Eigen::VectorXd> phi;
  for (double x : {0.0, 1.0, 2.0}) phi.push_back(Eigen::VectorXd::Constant(1, x));
  double direct = 0.0;
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      if (u != v) direct += 0.5 * (1.0 / 3.0) * 0.5 * (phi[u] - phi[v]).squaredNorm();
    }
  }
  CHECK(vertex_energy<cat0::Euclidean>(tri, line, phi, 1) == doctest::Approx(direct));
  CHECK(direct == doctest::Approx(1.0));

  std::vector<Eigen::VectorXd> constant(3, Eigen::VectorXd::Constant(1, 4.0));
  CHECK(vertex_energy<cat0::Euclidean>(tri, line, constant, 2) == 0.0);
  CHECK_THROWS_AS(rayleigh_quotient<cat0::Euclidean>(tri, line, constant), Error);

  for (const auto& g : {graph::petersen(), graph::cycle_graph(6), graph::complete_graph(4)}) {
    const auto gap = graph::spectral_gap(g);
    std::vector<Eigen::VectorXd> eig;
    for (int u = 0; u < g.vertex_count(); ++u) {
      eig.push_back(Eigen::VectorXd::Constant(1, gap.eigenfunction[u]));
    }
    CHECK(rayleigh_quotient<cat0::Euclidean>(g, line, eig) == doctest::Approx(gap.value).epsilon(1e-10));
  }
}
