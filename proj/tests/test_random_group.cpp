//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cat0lab/cat0/euclidean.hpp"
#include "cat0lab/cat0/pod.hpp"
#include "cat0lab/cat0/sampling.hpp"
#include "cat0lab/error.hpp"
#include "cat0lab/invariants.hpp"
#include "cat0lab/random_group.hpp"

using namespace cat0lab;
using namespace cat0lab::random_group;

namespace {

double mass(const WordTable& t) {
  double s = 0.0;
  for (const auto& [w, q] : t) s += q;
  return s;
}

graph::Graph square() { return graph::cycle_graph(4); }

}  // namespace

TEST_CASE("labelling sampling") {
  const auto tri = graph::triangle();
  const auto a = sample_labelling(tri, 2, 11);
  const auto b = sample_labelling(tri, 2, 11);
  CHECK(a.label == b.label);
  CHECK(a.inverse_consistent(tri));
  CHECK_THROWS_AS(sample_labelling(tri, 0, 1), Error);
  const auto path = graph::Graph::from_pairs({{0, 1}, {1, 2}});
  CHECK_THROWS_AS(sample_labelling(path, 2, 1), Error);

  // Uniformity over the 64 labellings of the triangle: chi-square with 63
  // degrees of freedom, mean 63, sd ~ 11.2.
  const auto letters = energy::alphabet(2);
  std::vector<int> hist(64, 0);
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) {
    const auto l = sample_labelling(tri, 2, derive_seed(99, s));
    CHECK(l.inverse_consistent(tri));
    int idx = 0;
    for (char c : l.label)
      idx = idx * 4 + int(std::find(letters.begin(), letters.end(), c) - letters.begin());
    ++hist[idx];
  }
  const double expect = seeds / 64.0;
  double chi2 = 0.0;
  for (int h : hist) chi2 += (h - expect) * (h - expect) / expect;
  CHECK(chi2 < 63.0 + 3.0 * std::sqrt(2.0 * 63.0));
}

TEST_CASE("relators") {
  const auto tri = graph::triangle();
  // Orient the labels around the cycle 0 -> 1 -> 2 -> 0 as a, b, a.
  SLabelling alpha{2, std::vector<char>(3)};
  for (int e = 0; e < 3; ++e) {
    const auto& ed = tri.edge(e);
    const auto around = [&](int u, int v) { return (u + 1) % 3 == v; };
    const char c = (ed.u == 1 && ed.v == 2) || (ed.u == 2 && ed.v == 1) ? 'b' : 'a';
    alpha.label[e] = around(ed.u, ed.v) ? c : energy::inverse_letter(c);
  }
  const auto r = relators(tri, alpha, 0);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == "aba");

  const auto pet = graph::petersen();
  const auto rp = relators(pet, sample_labelling(pet, 3, 5), 0);
  CHECK(int(rp.size()) == pet.edge_count() - pet.vertex_count() + 1);
  for (const auto& w : rp) CHECK(energy::is_reduced(w));

  const auto tree = graph::Graph::from_pairs({{0, 1}, {1, 2}});
  CHECK(relators(tree, SLabelling{1, {'a', 'a'}}, 0).empty());
}

TEST_CASE("pushforward walk") {
  const auto pet = graph::petersen();
  for (int seed = 0; seed < 5; ++seed) {
    const auto alpha = sample_labelling(pet, 2, seed);
    for (int n = 1; n <= 4; ++n) CHECK(std::abs(mass(pushforward_walk(pet, alpha, n)) - 1.0) < 1e-12);

    // n = 1: each letter gets (#arcs reading it) / 2|E|.
    const auto one = pushforward_walk(pet, alpha, 1);
    for (char c : energy::alphabet(2)) {
      int arcs = 0;
      for (int e = 0; e < pet.edge_count(); ++e) {
        arcs += alpha.label[e] == c;
        arcs += energy::inverse_letter(alpha.label[e]) == c;
      }
      const auto it = one.find(Word(1, c));
      CHECK((it == one.end() ? 0.0 : it->second) == doctest::Approx(arcs / 30.0).epsilon(1e-14));
    }

    // n = 2: identity mass = 1/3 + (2/3) * fraction of non-backtracking
    // 2-walks whose labels cancel.
    int cancel = 0, total = 0;
    for (int u = 0; u < 10; ++u)
      for (const auto& [v, e] : pet.incident(u))
        for (const auto& [w, f] : pet.incident(v)) {
          if (f == e) continue;
          ++total;
          cancel += alpha.read(pet, f, v) == energy::inverse_letter(alpha.read(pet, e, u));
        }
    const auto two = pushforward_walk(pet, alpha, 2);
    CHECK(two.at("") == doctest::Approx(1.0 / 3.0 + 2.0 / 3.0 * cancel / total).epsilon(1e-13));

    // Swapping a and b permutes the support.
    SLabelling swapped = alpha;
    const auto swap = [](char c) {
      switch (c) {
        case 'a': return 'b';
        case 'b': return 'a';
        case 'A': return 'B';
        case 'B': return 'A';
      }
      return c;
    };
    for (auto& c : swapped.label) c = swap(c);
    const auto t2 = pushforward_walk(pet, swapped, 3);
    for (const auto& [w, q] : pushforward_walk(pet, alpha, 3)) {
      Word image = w;
      for (auto& c : image) c = swap(c);
      CHECK(t2.at(image) == doctest::Approx(q).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(pushforward_walk(pet, sample_labelling(pet, 2, 1), 9), Error);
}

TEST_CASE("p profile") {
  const auto pet = graph::petersen();
  const auto p = p_profile(pet, 2);
  CHECK(p.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(p.weights[1] == doctest::Approx(0.0));
  CHECK(p.weights[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(p.tail == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(p_profile(pet, 1).weights[1] == doctest::Approx(1.0));

  const auto c12 = graph::cycle_graph(12);
  for (int n = 1; n <= 5; ++n) {
    const auto q = p_profile(c12, n);
    double s = 0.0;
    for (double w : q.weights) s += w;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    for (const auto& row : q.per_vertex) {
      double r = 0.0;
      for (int l = 0; l <= n; ++l) {
        r += row[l];
        if ((l - n) % 2 != 0) CHECK(row[l] == 0.0);
      }
      CHECK(r == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  // C12, n = 3: P(1) = 3/4, P(3) = 1/4.
  const auto q3 = p_profile(c12, 3);
  CHECK(q3.weights[1] == doctest::Approx(0.75));
  CHECK(q3.weights[3] == doctest::Approx(0.25));
}

TEST_CASE("weighted sum") {
  const auto tri = graph::triangle();
  for (int k = 1; k <= 2; ++k) {
    const auto exact = exact_expected_pushforward(tri, k, 1);
    const auto predicted = predicted_pushforward(p_profile(tri, 1), k);
    CHECK(exact.size() == predicted.size());
    for (const auto& [w, q] : predicted) CHECK(std::abs(exact.at(w) - q) < 1e-15);
  }
  const auto sq = square();
  for (int k = 1; k <= 2; ++k) {
    const auto exact = exact_expected_pushforward(sq, k, 1);
    for (const auto& [w, q] : predicted_pushforward(p_profile(sq, 1), k))
      CHECK(std::abs(exact.at(w) - q) < 1e-15);
  }
  // Exhaustive check of the lemma for n = 2 on a hexagon (girth 6 > 4).
  const auto hex = graph::cycle_graph(6);
  const auto exact = exact_expected_pushforward(hex, 2, 2);
  for (const auto& [w, q] : predicted_pushforward(p_profile(hex, 2), 2))
    CHECK(std::abs(exact.at(w) - q) < 1e-14);

  const auto pet = graph::petersen();
  const auto check = weighted_sum_check(pet, 2, 2, 2000, 7);
  CHECK(check.within_budget);
  const auto* id = check.find("");
  REQUIRE(id != nullptr);
  CHECK(id->predicted == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(id->mean - 0.5) <= 3.0 * id->sigma);

  CHECK_THROWS_AS(weighted_sum_check(tri, 2, 2, 10, 1), Error);
  CHECK_THROWS_AS(weighted_sum_check(pet, 2, 3, 10, 1), Error);
}

TEST_CASE("bernoulli bound") {
  CHECK(bernoulli_tail(4) == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(bernoulli_tail(9) == doctest::Approx(420.0 / 512.0).epsilon(1e-14));
  const double ref = gaussian_mass_one_sigma();
  CHECK(std::abs(ref - std::erf(1.0 / std::numbers::sqrt2)) < 1e-13);
  const auto b200 = bernoulli_bound(200);
  CHECK(b200.c_observed == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(b200.argmax == 4);
  CHECK(std::abs(bernoulli_tail(10000) - ref) < 0.02);
  CHECK(default_c_abs() == doctest::Approx(64.0));

  for (const auto& g : {graph::petersen(), graph::cycle_graph(12), graph::complete_graph(4)}) {
    const int gir = graph::girth(g);
    for (int n = 1; 2 * n < gir; ++n) CHECK(p_profile(g, n).tail <= bernoulli_tail(n) + 1e-12);
  }
}

TEST_CASE("spectral transplant") {
  const auto k4 = graph::complete_graph(4);
  const auto lower = lambda_lower_real(k4);
  const cat0::Euclidean line(1);
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    std::vector<cat0::Euclidean::Point> phi;
    for (int v = 0; v < 4; ++v) phi.push_back(Eigen::VectorXd::Constant(1, normal(rng)));
    CHECK(spectral_transplant_check<cat0::Euclidean>(k4, line, phi, 4, lower).holds());
  }
  std::vector<cat0::Euclidean::Point> flat(4, Eigen::VectorXd::Constant(1, 2.0));
  const auto c = spectral_transplant_check<cat0::Euclidean>(k4, line, flat, 3, lower);
  for (const auto& r : c.rows) CHECK(r.lhs == 0.0);

  const cat0::Pod tripod(3);
  const auto pet = graph::petersen();
  const auto pl = lambda_lower_distortion(pet, invariants::pod_distortion(2));
  CHECK(pl.value == doctest::Approx(graph::spectral_gap_real(pet) * 0.75));
  for (int t = 0; t < 200; ++t) {
    std::vector<cat0::Pod::Point> phi;
    for (int v = 0; v < 10; ++v) phi.push_back(cat0::random_point(tripod, rng));
    CHECK(spectral_transplant_check<cat0::Pod>(pet, tripod, phi, 4, pl).holds());
  }
}

TEST_CASE("fixed point pipeline") {
  const auto p = fixed_point_pipeline(1.0, 1.0);
  CHECK(p.n == 2);
  CHECK(p.eps == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
  CHECK(p.g0 == 4);
  REQUIRE(p.c_grad);
  CHECK(*p.c_grad == doctest::Approx(2.0 * p.eps * p.eps / 4.0).epsilon(1e-15));

  const auto q = fixed_point_pipeline(1.0 / 3.0, 64.0);
  CHECK(q.n == 36865);
  CHECK(q.g0 == 73730);
  CHECK(q.eps > 0.0);

  const auto r = fixed_point_pipeline(4.0, 1.0);  // C / lambda0 < 1
  CHECK(r.n == 1);
  CHECK(!r.c_grad);

  const auto pet = graph::petersen();
  const auto s = fixed_point_pipeline(1.0, 2.0, &pet);
  REQUIRE(s.graph);
  CHECK(s.graph->girth == 5);
  CHECK(s.graph->girth_ok == (5 >= s.g0));
  CHECK_THROWS_AS(fixed_point_pipeline(0.0, 1.0), Error);
}

TEST_CASE("concentration experiment") {
  const auto pet = graph::petersen();
  const auto empty = concentration_experiment(pet, 2, 2, 0, 1);
  CHECK(!empty.lower_frequency);
  const auto rep = concentration_experiment(pet, 2, 2, 200, 1);
  REQUIRE(rep.lower_frequency);
  CHECK(*rep.lower_frequency >= 0.0);
  CHECK(*rep.lower_frequency <= 1.0);
  CHECK(*rep.upper_frequency >= 0.0);
  CHECK(*rep.upper_frequency <= 1.0);
}
