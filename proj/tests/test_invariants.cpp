//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cat0lab/cat0/sampling.hpp"
#include "cat0lab/error.hpp"
#include "cat0lab/invariants.hpp"
#include "cat0lab/random.hpp"

using namespace cat0lab;
using namespace cat0lab::invariants;

TEST_CASE("gram matrix") {
  const double a = 0.1;
  const double b = -0.2;
  const Eigen::MatrixXd g = gram_matrix({2, a, b});
  CHECK(g.rows() == 14);
  CHECK(g.diagonal().isOnes());
  for (int i = 0; i < 14; ++i) CHECK(g.row(i).sum() == doctest::Approx(1.0 + 1.5 + 6 * a + 4 * b));
  CHECK_FALSE(is_psd({2, 1.0, 1.0}));
  CHECK_THROWS_AS(gram_matrix({4, 0.0, 0.0}), Error);
}

TEST_CASE("gram eigenvalue formulas") {
  Rng rng(41);
  for (int r : {2, 3, 5}) {
    std::vector<GramSpec> specs;
    for (int i = 0; i < 20; ++i) specs.push_back(random_psd_spec(r, rng));
    const auto opt = optimal_ab(r);
    specs.push_back({r, opt.a, opt.b});
    specs.push_back({r, 0.0, 0.0});
    for (const auto& spec : specs) {
      const auto s = gram_eigenvalues(spec);
      CHECK(s.max_defect <= 1e-8);
      CHECK(s.trace == doctest::Approx(2.0 * (r * r + r + 1)));
      CHECK(s.formula[0].multiplicity == 1);
      CHECK(s.formula[2].multiplicity == r * r + r);
    }
  }
  const auto opt = optimal_ab(2);
  const auto f = gram_formula({2, opt.a, opt.b});
  CHECK(f[0].value == doctest::Approx(5.0 - 3.0 * std::sqrt(2.0)));
  CHECK(f[2].value == doctest::Approx((3.0 + std::sqrt(2.0)) / 2.0));
  CHECK(std::abs(f[1].value) <= 1e-12);
  CHECK(std::abs(f[3].value) <= 1e-12);
}

TEST_CASE("optimal a, b") {
  auto o = optimal_ab(2);
  CHECK(o.a == doctest::Approx((1.0 - std::sqrt(2.0)) / 4.0));
  CHECK(o.a == doctest::Approx(-0.10355).epsilon(1e-4));
  CHECK(o.b == doctest::Approx((2.0 - 3.0 * std::sqrt(2.0)) / 8.0));
  CHECK(o.distortion == doctest::Approx(4.0 / std::sqrt(3.0 * (2.0 + std::sqrt(2.0)))));
  CHECK(o.distortion == doctest::Approx(1.24984).epsilon(1e-5));
  CHECK(o.w_dimension == 7);
  o = optimal_ab(3);
  CHECK(o.distortion == doctest::Approx(6.0 / std::sqrt(4.0 * (3.0 + std::sqrt(3.0)))));
  CHECK(o.distortion == doctest::Approx(1.37910).epsilon(1e-5));
  // a*, b* approach 1/2 like 1/(2 sqrt r): 0.055 away at r = 101, within
  // 0.02 from r = 1009.
  const auto big = optimal_ab_formula(101);
  CHECK(0.5 - big.a == doctest::Approx((1.0 + std::sqrt(101.0)) / 202.0));
  CHECK(std::abs(big.a - 0.5) <= 0.06);
  const auto huge = optimal_ab_formula(1009);
  CHECK(std::abs(huge.a - 0.5) <= 0.02);
  CHECK(std::abs(huge.b - 0.5) <= 0.02);
  CHECK(huge.distortion < 2.0);
}

TEST_CASE("iota embedding") {
  const auto opt = optimal_ab(2);
  const auto iota = iota_embedding({2, opt.a, opt.b});
  CHECK(iota.dimension() == 7);
  const auto& s = iota.cone().directions().graph();
  for (const auto& e : s.edges()) {
    CHECK((iota.vertex_vectors().col(e.u) - iota.vertex_vectors().col(e.v)).norm() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  const auto scan = scan_vertex_pairs(iota, {1.0});
  CHECK(scan.norm_defect <= 1e-10);
  CHECK(scan.max_ratio == doctest::Approx(iota_distortion(opt.a, opt.b)).epsilon(1e-10));
  CHECK(scan.max_ratio == doctest::Approx(opt.distortion).epsilon(1e-10));

  // Off the vertices the ratio is larger: edge midpoints realize 1.26193,
  // above the vertex-pair value max{sqrt(3/(2-2a)), sqrt(2/(1-b))}.
  const auto grid = scan_grid(iota, 3, {0.0, 0.5, 1.0, 2.0});
  CHECK(grid.lipschitz_excess <= 1e-10);
  CHECK(grid.max_ratio == doctest::Approx(1.2619252).epsilon(1e-7));
  CHECK(grid.max_ratio < 2.0);
  CHECK_THROWS_AS(iota_embedding({2, 1.0, 1.0}), Error);

  // Lemma: embedded variance controls the cone variance up to D^2.
  Rng rng(43);
  const double d2 = grid.max_ratio * grid.max_ratio;
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = cat0::random_measure(iota.cone(), rng, 2 + trial % 5, 2.0);
    const auto bar = cat0::barycenter(iota.cone(), m);
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(iota.dimension());
    for (std::size_t i = 0; i < m.size(); ++i) mean += m.weights[i] * iota(m.support[i]);
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      lhs += m.weights[i] * (iota(m.support[i]) - mean).squaredNorm();
      const double d = iota.cone().distance(m.support[i], bar);
      rhs += m.weights[i] * d * d;
    }
    CHECK(lhs >= rhs / d2 - 1e-8);
  }
}

TEST_CASE("delta of the uniform vertex measure") {
  const auto d = delta_mu0(2);
  CHECK(d.bound == doctest::Approx((5.0 - 3.0 * std::sqrt(2.0)) / 14.0).epsilon(1e-12));
  CHECK(d.bound == doctest::Approx(0.054097).epsilon(1e-5));
  CHECK(delta_mu0(3).formula == doctest::Approx(0.11815).epsilon(1e-4));
  CHECK(delta_mu0(5).bound >= 0.0);
  Rng rng(47);
  for (int r : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      CHECK(delta_mu0_bound(random_psd_spec(r, rng)) >= delta_mu0_formula(r) - 1e-10);
    }
  }
}

TEST_CASE("pod embedding") {
  for (int r = 1; r <= 10; ++r) {
    const auto iota = pod_embedding(r);
    CHECK(iota.legs.rows() == r);
    const auto scan = scan_pod(iota, {0.0, 0.5, 1.0, 2.0});
    CHECK(scan.lipschitz_excess <= 1e-10);
    CHECK(std::abs(scan.max_ratio - pod_distortion(r)) <= 1e-10);
    CHECK(iota.legs.rowwise().mean().norm() <= 1e-12);
  }
  CHECK(pod_distortion(1) == 1.0);
  CHECK(pod_distortion(2) == doctest::Approx(1.1547).epsilon(1e-4));
}

TEST_CASE("delta from distortion") {
  CHECK(delta_from_distortion(1.0) == 0.0);
  CHECK(delta_from_distortion(2.0) == 0.75);
  CHECK(delta_from_distortion(optimal_ab(2).distortion) == doctest::Approx(0.35987).epsilon(1e-4));
  CHECK_THROWS_AS(delta_from_distortion(0.9), Error);
}

TEST_CASE("building tables") {
  auto d = building_distances({2, 2});
  REQUIRE(d.table.size() == 1);
  CHECK(d.table[0].distance == doctest::Approx(1.0));
  CHECK(d.d_min == doctest::Approx(1.0));
  CHECK(building_d_min(3) == doctest::Approx(std::sqrt(2.0 - 2.0 / std::sqrt(3.0))));
  CHECK(building_d_min(3) == doctest::Approx(0.91940).epsilon(1e-5));
  CHECK_FALSE(building_distances({1, 2}).table_min.has_value());
  for (int n = 2; n <= 12; ++n) {
    d = building_distances({n, 2});
    CHECK(*d.table_min == doctest::Approx(d.d_min).epsilon(1e-14));
  }

  auto b = building_bounds({2, 2});
  CHECK(b.distortion == doctest::Approx(2.0));
  CHECK(b.delta == doctest::Approx(0.75));
  REQUIRE(b.certificate.has_value());
  CHECK(b.certificate->lipschitz_excess <= 1e-10);
  CHECK(b.certificate->max_ratio <= 2.0 + 1e-10);
  b = building_bounds({3, 2});
  CHECK(b.distortion == doctest::Approx(2.17533).epsilon(1e-5));
  CHECK(b.delta == doctest::Approx((2.0 + 2.0 * std::sqrt(2.0 / 6.0)) / 4.0));
  b = building_bounds({4, 3});
  CHECK(b.distortion == doctest::Approx(std::sqrt(6.0)));
  CHECK(b.delta == doctest::Approx(5.0 / 6.0));
  CHECK_FALSE(b.certificate.has_value());
  b = building_bounds({1, 2});
  CHECK(b.distortion == doctest::Approx(std::sqrt(2.0)));
  CHECK(b.delta == doctest::Approx(0.5));

  double previous = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const double bound = building_bounds({n, 2}).distortion;
    CHECK(bound > previous);
    previous = bound;
  }
  const std::string csv = building_bounds_csv({building_bounds({2, 2})});
  CHECK(csv.rfind("n,r,d_min,distortion_bound,delta_bound\n", 0) == 0);
}

TEST_CASE("wang estimate") {
  const auto pet = graph::petersen();
  auto e = wang_estimate(pet, cat0::Euclidean(2));
  CHECK(e.value == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK(e.lambda_real == doctest::Approx(2.0 / 3.0));

  e = wang_estimate(graph::cycle_graph(6), cat0::Euclidean(1));
  CHECK(e.value == doctest::Approx(0.5).epsilon(1e-6));

  WangOptions pod_opts;
  pod_opts.distortion = pod_distortion(2);
  const auto k4 = graph::complete_graph(4);
  const auto p = wang_estimate(k4, cat0::Pod(3), pod_opts);
  CHECK(p.value <= 4.0 / 3.0 + 1e-9);
  CHECK(p.value >= 1.0 - 1e-6);
  CHECK(*p.distortion_lower == doctest::Approx(1.0));
  CHECK(p.consistent);

  const cat0::MetricTree tree(graph::star_graph(3));
  WangOptions tree_opts;
  tree_opts.delta = 0.0;
  const auto t = wang_estimate(pet, tree, tree_opts);
  CHECK(t.value <= 2.0 / 3.0 + 1e-9);
  CHECK(t.consistent);

  WangOptions cone_opts;
  cone_opts.distortion = optimal_ab(2).distortion;
  cone_opts.restarts = 2;
  const auto c = wang_estimate(k4, triangle_cone(2), cone_opts);
  CHECK(c.value <= 4.0 / 3.0 + 1e-9);
  CHECK(c.consistent);
  CHECK(c.witness.size() == 4);
}
