//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Acceptance run: one PASS/FAIL line per criterion. Closed forms are
// evaluated here independently of the library wherever possible.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cat0lab/energy/energy.hpp"
#include "cat0lab/error.hpp"
#include "cat0lab/experiments.hpp"
#include "cat0lab/graph.hpp"
#include "cat0lab/invariants.hpp"
#include "cat0lab/io.hpp"
#include "cat0lab/random_group.hpp"
#include "cat0lab/special_graphs.hpp"

using namespace cat0lab;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double rel(double x, double y) { return std::abs(x - y); }

// Runs an experiment and requires its own pass flag.
json expect_pass(Verdict& v, const std::string& name, const json& config) {
  const auto r = experiments::run(name, config);
  v.check(r.pass, name + " " + config.dump());
  return r.document["result"];
}

void gram_formulas(Verdict& v) {
  Rng rng(101);
  double worst = 0.0;
  for (int r : {2, 3, 5}) {
    std::vector<invariants::GramSpec> specs;
    for (int i = 0; i < 20; ++i) specs.push_back(invariants::random_psd_spec(r, rng));
    const auto opt = invariants::optimal_ab_formula(r);
    specs.push_back({r, opt.a, opt.b});
    for (const auto& spec : specs) {
      const auto s = invariants::gram_eigenvalues(spec, 1e-8);
      worst = std::max(worst, s.max_defect);
      const int m = r * r + r;
      v.check(s.formula.size() == 4 && s.formula[0].multiplicity == 1 && s.formula[1].multiplicity == 1 &&
                  s.formula[2].multiplicity == m && s.formula[3].multiplicity == m,
              "multiplicities for r=" + std::to_string(r));
      v.check(s.max_defect <= 1e-8, "spectrum defect for r=" + std::to_string(r));
    }
  }
  v.detail << "63 spectra, max defect " << worst;
}

void delta_equality(Verdict& v) {
  for (int r : {2, 3, 5}) {
    const double s = std::sqrt(double(r));
    const double closed = (s - 1.0) * (s - 1.0) / (2.0 * (r - s + 1.0));
    const auto d = invariants::delta_mu0(r);
    v.check(rel(d.bound, closed) <= 1e-10, "delta_mu0 r=" + std::to_string(r));
    v.detail << "r=" << r << ": " << d.bound << "  ";
  }
  const double r2 = invariants::delta_mu0(2).bound;
  v.check(rel(r2, (5.0 - 3.0 * std::sqrt(2.0)) / 14.0) <= 1e-12, "r=2 identity");
  v.check(rel(r2, 0.054097) <= 1e-6, "r=2 value 0.054097");
}

void embedding_distortion(Verdict& v) {
  for (int r : {2, 3, 5, 7, 11, 13}) {
    const double s = std::sqrt(double(r));
    const double closed = 2.0 * r / std::sqrt((r + 1.0) * (r + s));
    const auto opt = invariants::optimal_ab(r);
    const auto iota = invariants::iota_embedding({r, opt.a, opt.b});
    const auto scan = invariants::scan_vertex_pairs(iota, {1.0});
    v.check(rel(scan.max_ratio, closed) <= 1e-8, "vertex-pair ratio r=" + std::to_string(r));
    v.check(scan.lipschitz_excess <= 1e-10, "1-Lipschitz r=" + std::to_string(r));
    v.check(closed < 2.0, "D* < 2 for r=" + std::to_string(r));
    v.detail << "r=" << r << ": " << scan.max_ratio << "  ";
  }
}

void pod_distortion(Verdict& v) {
  double worst = 0.0;
  for (int r = 1; r <= 10; ++r) {
    const auto iota = invariants::pod_embedding(r);
    const auto scan = invariants::scan_pod(iota, {0.0, 0.5, 1.0, 2.0});
    const double closed = std::sqrt(2.0 * r / (r + 1.0));
    worst = std::max(worst, rel(scan.max_ratio, closed));
    v.check(rel(scan.max_ratio, closed) <= 1e-10, "pod ratio r=" + std::to_string(r));
    v.check(scan.lipschitz_excess <= 1e-10, "pod 1-Lipschitz r=" + std::to_string(r));
    v.check(iota.legs.rowwise().mean().norm() <= 1e-12, "simplex mean r=" + std::to_string(r));
  }
  v.detail << "r <= 10, max ratio defect " << worst;
}

void building_tables(Verdict& v) {
  for (int n = 1; n <= 6; ++n) {
    double d, delta;
    if (n % 2 == 0) {
      d = std::sqrt(n + 2.0);
      delta = (n + 1.0) / (n + 2.0);
    } else {
      const double s = std::sqrt((n - 1.0) / (n + 3.0));
      d = 2.0 / std::sqrt(2.0 - 2.0 * s);
      delta = (2.0 + 2.0 * s) / 4.0;
    }
    const auto b = invariants::building_bounds({n, 2});
    v.check(rel(b.distortion, d) <= 1e-12 && rel(b.delta, delta) <= 1e-12, "bounds n=" + std::to_string(n));
    v.detail << "n=" << n << ": (" << b.distortion << ", " << b.delta << ")  ";
  }
  for (int n = 2; n <= 12; ++n) {
    const auto t = invariants::building_distances({n, 2});
    v.check(t.table_min && rel(*t.table_min, t.d_min) <= 1e-14, "table minimum n=" + std::to_string(n));
  }
}

void z_closed_forms(Verdict& v) {
  const auto r = expect_pass(v, "z-example", {{"trials", 50}, {"n_max", 10}, {"seed", 6}});
  v.detail << "translation defect " << r["max_translation_defect"] << ", reflection defect "
           << r["max_reflection_defect"];
}

void cayley(Verdict& v) {
  for (int m : {2, 3}) {
    for (int n = 1; n <= 6; ++n) {
      const double e = energy::cayley_tree_energy(m, n);
      const double bound = double(m) * n * n / (2.0 * m - 1.0);
      v.check(e <= bound + 1e-12, "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    v.detail << "m=" << m << ": E_6 = " << energy::cayley_tree_energy(m, 6) << "  ";
  }
}

void inequality_suite(Verdict& v) {
  const auto e = expect_pass(v, "inequality-suite", {{"action", "euclidean"}, {"trials", 200}, {"n_max", 6}, {"seed", 8}});
  const auto t = expect_pass(v, "inequality-suite", {{"action", "tree"}, {"trials", 200}, {"n_max", 6}, {"seed", 9}});
  const auto a = expect_pass(v, "affine-identity", {{"trials", 50}, {"n_max", 6}, {"seed", 10}});
  v.detail << "euclidean min slack " << e["min_slack"] << ", tree min slack " << t["min_slack"]
           << ", affine identity defect " << a["max_identity_defect"];
}

void variance_lemmas(Verdict& v) {
  std::uint64_t seed = 11;
  for (const char* space : {"euclidean", "pod", "tree", "cone"}) {
    const auto r = expect_pass(v, "variance-lemma", {{"space", space}, {"trials", 1000}, {"seed", seed++}});
    v.detail << space << ": " << r["min_variance_slack"] << "  ";
  }
}

void barycenter_oracle(Verdict& v) {
  for (const char* space : {"tree", "pod"}) {
    const auto r = expect_pass(v, "barycenter",
                               {{"space", space}, {"trials", 200}, {"max_support", 6}, {"grid_step", 1e-3}, {"seed", 21}});
    v.detail << space << ": " << r["max_inductive_vs_oracle"] << "  ";
  }
}

void spectral_transplant(Verdict& v) {
  std::uint64_t seed = 31;
  for (const char* g : {"complete:4", "petersen", "cycle:12"}) {
    for (const char* target : {"euclid:3", "tripod"}) {
      const auto r = expect_pass(v, "transplant",
                                 {{"graph", g}, {"target", target}, {"trials", 1000}, {"n_max", 4}, {"seed", seed++}});
      v.detail << g << "/" << target << ": " << r["max_lhs_minus_rhs"] << "  ";
    }
  }
}

void weighted_sum(Verdict& v) {
  const auto r = expect_pass(v, "weighted-sum", {{"graph", "petersen"}, {"k", 2}, {"n", 2}, {"trials", 20000}, {"seed", 7}});
  const auto& id = r["identity"];
  const double mean = id["mean"], predicted = id["predicted"], sigma = id["sigma"];
  v.check(rel(predicted, 0.5) <= 1e-14, "identity prediction 1/2");
  v.check(std::abs(mean - 0.5) <= 3.0 * sigma, "identity mass within 3 sigma");
  const auto tri = graph::triangle();
  for (int k = 1; k <= 2; ++k) {
    const auto exact = random_group::exact_expected_pushforward(tri, k, 1);
    // n = 1: each letter has mass 1/2k.
    v.check(exact.size() == std::size_t(2 * k), "triangle support k=" + std::to_string(k));
    for (const auto& [w, q] : exact) v.check(rel(q, 1.0 / (2 * k)) <= 1e-15, "triangle exact k=" + std::to_string(k));
  }
  v.detail << "max |z| " << r["max_z"] << ", identity " << mean << " +- " << sigma;
}

void bernoulli(Verdict& v) {
  v.check(random_group::bernoulli_tail(4) == 0.875, "b^4(2) = 0.875 exactly");
  const double quad = random_group::gaussian_mass_one_sigma();
  v.check(rel(quad, 0.682689) <= 1e-6, "quadrature 0.682689");
  const double b = random_group::bernoulli_tail(10000);
  v.check(rel(b, quad) <= 0.02, "b^10000 near the Gaussian limit");
  int checked = 0;
  for (const char* ref : {"triangle", "complete:4", "petersen", "cycle:12", "gt:2", "lps:5:13"}) {
    const auto g = io::load_graph(ref);
    const int gir = graph::girth(g);
    for (int n = 1; 2 * n < gir; ++n) {
      ++checked;
      v.check(random_group::p_profile(g, n).tail <= random_group::bernoulli_tail(n) + 1e-12,
              std::string("domination ") + ref + " n=" + std::to_string(n));
    }
  }
  v.detail << "b^10000 = " << b << ", limit " << quad << ", " << checked << " domination checks";
}

void lps(Verdict& v) {
  const auto x = special::lps_graph(5, 13);
  const auto& g = x.graph;
  const auto cert = special::validate_lps(g, x.params);
  v.check(g.vertex_count() == 2184, "2184 vertices");
  v.check(g.min_degree() == 6 && g.max_degree() == 6, "6-regular");
  v.check(g.is_bipartite(), "bipartite");
  v.check(cert.girth >= 6 && cert.girth_ok, "girth bound");
  v.check(cert.diameter <= 11 && cert.diameter_ok, "diameter bound");
  const double gap = graph::spectral_gap_real(g);
  v.check(gap >= 0.25, "lambda_1 >= 0.25");
  v.detail << "girth " << cert.girth << ", diameter " << cert.diameter << ", lambda_1 " << gap
           << " (Ramanujan check is beyond the theory's claims)";
}

bool same_bytes(const std::string& a, const std::string& b) {
  return io::read_file(a) == io::read_file(b);
}

void pipeline(Verdict& v, const std::string& cli) {
  const auto p = random_group::fixed_point_pipeline(1.0, 1.0);
  v.check(p.n == 2, "n = 2");
  v.check(rel(p.eps, std::sqrt(2.0) - 1.0) <= 1e-15, "eps = sqrt 2 - 1");
  v.check(p.g0 == 4, "g0 = 4");
  const std::vector<std::pair<std::string, json>> runs = {
      {"weighted-sum", {{"trials", 500}, {"seed", 7}}},
      {"concentration", {{"trials", 100}, {"seed", 7}}},
      {"transplant", {{"trials", 100}, {"seed", 7}}},
      {"descent", {{"action", "tree"}, {"seed", 7}}},
      {"pipeline", {{"lambda0", 1.0}, {"c_abs", 1.0}}}};
  for (const auto& [name, config] : runs) {
    const auto a = experiments::run(name, config);
    const auto b = experiments::run(name, config);
    v.check(a.document.dump() == b.document.dump() && a.csv == b.csv, "library report " + name);
  }
  if (!cli.empty() && std::filesystem::exists(cli)) {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string f1 = (dir / "cat0lab_acceptance_1.json").string();
    const std::string f2 = (dir / "cat0lab_acceptance_2.json").string();
    const std::string args = " weighted-sum --graph petersen --k 2 --n 2 --trials 500 --seed 7 --out ";
    const int r1 = std::system((cli + args + f1).c_str());
    const int r2 = std::system((cli + args + f2).c_str());
    v.check(r1 == 0 && r2 == 0 && same_bytes(f1, f2), "CLI reports byte-identical");
    std::filesystem::remove(f1);
    std::filesystem::remove(f2);
    v.detail << "CLI and library reports byte-identical; ";
  }
  v.detail << "(n, eps, g0) = (" << p.n << ", " << p.eps << ", " << p.g0 << ")";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"Gram eigenvalue formulas", gram_formulas},
      {"delta(mu0) equality", delta_equality},
      {"Embedding distortion", embedding_distortion},
      {"Pod distortion", pod_distortion},
      {"Building tables", building_tables},
      {"Z example closed forms", z_closed_forms},
      {"Free-group example", cayley},
      {"Inequality suite", inequality_suite},
      {"Variance/inner-product lemmas", variance_lemmas},
      {"Barycenter oracle agreement", barycenter_oracle},
      {"Transplanted spectral gap", spectral_transplant},
      {"Weighted-sum lemma", weighted_sum},
      {"Bernoulli tail", bernoulli},
      {"LPS certification", lps},
      {"Pipeline determinism", [&](Verdict& v) { pipeline(v, cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "[exception: " << e.what() << "]";
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << v.detail.str()
              << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
