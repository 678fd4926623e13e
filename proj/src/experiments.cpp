//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cat0lab/cat0/euclidean.hpp"
#include "cat0lab/cat0/graph_cone.hpp"
#include "cat0lab/cat0/measure.hpp"
#include "cat0lab/cat0/metric_tree.hpp"
#include "cat0lab/cat0/pod.hpp"
#include "cat0lab/cat0/sampling.hpp"
#include "cat0lab/energy/actions.hpp"
#include "cat0lab/energy/energy.hpp"
#include "cat0lab/energy/free_group.hpp"
#include "cat0lab/error.hpp"
#include "cat0lab/graph.hpp"
#include "cat0lab/invariants.hpp"
#include "cat0lab/io.hpp"
#include "cat0lab/random.hpp"
#include "cat0lab/random_group.hpp"
#include "cat0lab/special_graphs.hpp"
#include "cat0lab/version.hpp"

namespace cat0lab::experiments {

namespace {

using energy::EuclideanAction;
using energy::TreeAction;

// ---- config access -------------------------------------------------------

int geti(const json& c, const char* key) { return c.at(key).get<int>(); }
double getd(const json& c, const char* key) { return c.at(key).get<double>(); }
std::string gets(const json& c, const char* key) { return c.at(key).get<std::string>(); }
bool getb(const json& c, const char* key) { return c.at(key).get<bool>(); }
std::uint64_t seed_of(const json& c) {
  require(c.contains("seed") && !c.at("seed").is_null(), "a seed is required for this experiment");
  return c.at("seed").get<std::uint64_t>();
}

void positive(const json& c, const char* key, int min = 1) {
  require(geti(c, key) >= min, std::string(key) + " must be >= " + std::to_string(min));
}

// ---- serialization -------------------------------------------------------

json vec(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }
json optional_num(std::optional<double> x) { return x ? json(*x) : json(nullptr); }
json girth_json(int g) { return g == graph::kInfiniteGirth ? json(nullptr) : json(g); }

std::string csv_number(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

// ---- shared fixtures -----------------------------------------------------

graph::Graph sample_tree() {
  return graph::Graph::from_edges(
      {{0, 1, 1.0}, {1, 2, 0.5}, {1, 3, 2.0}, {3, 4, 1.0}, {3, 5, 0.7}, {0, 6, 1.3}});
}

std::vector<energy::SymmetricTree> tree_shapes() {
  std::vector<energy::SymmetricTree> out;
  out.push_back(energy::symmetric_tree({3, 2}, {1.0, 0.6}));
  out.push_back(energy::symmetric_tree({2, 2}, {0.8, 1.1}, true, 0.5));
  out.push_back(energy::symmetric_tree({4}, {1.0}));
  return out;
}

struct Target {
  std::string kind;  // "euclid" or "pod"
  int size = 1;      // dimension or number of legs
};

Target parse_target(const std::string& s) {
  if (s == "line") return {"euclid", 1};
  if (s == "tripod") return {"pod", 3};
  const auto colon = s.find(':');
  require(colon != std::string::npos, "target must be line, tripod, euclid:D or pod:M");
  Target t{s.substr(0, colon), 0};
  try {
    t.size = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    fail(ErrorKind::kPrecondition, "target '" + s + "': bad size");
  }
  require(t.kind == "euclid" || t.kind == "pod", "target must be line, tripod, euclid:D or pod:M");
  require(t.size >= 1, "target size must be >= 1");
  return t;
}

// ---- graph-side experiments ---------------------------------------------

Outcome graph_info(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const auto gd = graph::girth_and_diameter(g);
  Outcome o;
  o.result = {{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"min_degree", g.min_degree()},
              {"max_degree", g.max_degree()},
              {"bipartite", g.is_bipartite()},
              {"multigraph", g.is_multigraph()},
              {"girth", girth_json(gd.girth)},
              {"diameter", gd.diameter}};
  if (g.vertex_count() <= graph::kMaxDenseVertices) {
    const auto gap = graph::spectral_gap(g);
    const std::vector<double> f(gap.eigenfunction.data(), gap.eigenfunction.data() + gap.eigenfunction.size());
    const double defect = std::abs(graph::rayleigh_quotient(g, f) - gap.value);
    o.result["spectral_gap"] = gap.value;
    o.result["eigenfunction_rq_defect"] = defect;
    o.pass = defect <= 1e-9;
  } else {
    o.result["spectral_gap"] = nullptr;
  }
  if (getb(c, "emit_graph")) o.result["graph"] = io::graph_to_json(g);
  return o;
}

Outcome lps(const json& c) {
  const int p = geti(c, "p"), q = geti(c, "q");
  const auto x = special::lps_graph(p, q);
  const auto cert = special::validate_lps(x.graph, x.params);
  const long long q3 = static_cast<long long>(q) * (q * static_cast<long long>(q) - 1);
  const long long expected = x.params.legendre == 1 ? q3 / 2 : q3;
  Outcome o;
  o.result = {{"p", p},
              {"q", q},
              {"legendre", x.params.legendre},
              {"group", x.params.legendre == 1 ? "PSL" : "PGL"},
              {"vertices", cert.vertex_count},
              {"expected_vertices", expected},
              {"degree", cert.degree},
              {"bipartite", cert.bipartite},
              {"girth", cert.girth},
              {"girth_bound", cert.girth_bound},
              {"diameter", cert.diameter},
              {"diameter_bound", cert.diameter_bound},
              {"spectral_gap", optional_num(cert.spectral_gap)},
              {"ramanujan_gap_bound", cert.ramanujan_gap_bound},
              {"girth_ok", cert.girth_ok},
              {"diameter_ok", cert.diameter_ok},
              {"ramanujan_ok", cert.ramanujan_ok ? json(*cert.ramanujan_ok) : json(nullptr)}};
  o.pass = cert.vertex_count == expected && cert.degree == p + 1 &&
           cert.bipartite == (x.params.legendre == -1) && cert.girth_ok && cert.diameter_ok &&
           cert.ramanujan_ok.value_or(true);
  return o;
}

Outcome generalized_triangle(const json& c) {
  const int r = geti(c, "r");
  const auto g = io::load_graph("gt:" + std::to_string(r));
  const auto gd = graph::girth_and_diameter(g);
  const double gap = graph::spectral_gap_real(g);
  const double formula = 1.0 - std::sqrt(double(r)) / (r + 1);
  Outcome o;
  o.result = {{"r", r},
              {"vertices", g.vertex_count()},
              {"expected_vertices", 2 * (r * r + r + 1)},
              {"min_degree", g.min_degree()},
              {"max_degree", g.max_degree()},
              {"bipartite", g.is_bipartite()},
              {"girth", girth_json(gd.girth)},
              {"diameter", gd.diameter},
              {"spectral_gap", gap},
              {"spectral_gap_formula", formula}};
  o.pass = g.vertex_count() == 2 * (r * r + r + 1) && g.min_degree() == r + 1 &&
           g.max_degree() == r + 1 && g.is_bipartite() && gd.girth == 6 && gd.diameter == 3 &&
           std::abs(gap - formula) <= 1e-10;
  return o;
}

// ---- CAT(0) spaces -------------------------------------------------------

template <class S>
json barycenter_trials(const S& space, Rng& rng, int trials, int max_support, double h) {
  double ind_oracle = 0.0, exact_oracle = 0.0, exact_ind = 0.0, objective_gap = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int size = 1 + static_cast<int>(uniform_index(rng, max_support));
    const auto m = cat0::random_measure(space, rng, size);
    const auto exact = cat0::barycenter(space, m);
    const auto oracle = cat0::barycenter_oracle(space, m.support, m.weights, h);
    const auto ind = cat0::inductive_mean(space, m).point;
    ind_oracle = std::max(ind_oracle, space.distance(ind, oracle));
    exact_oracle = std::max(exact_oracle, space.distance(exact, oracle));
    exact_ind = std::max(exact_ind, space.distance(exact, ind));
    objective_gap = std::max(objective_gap, cat0::weighted_sq_distance(space, m, exact) -
                                                cat0::weighted_sq_distance(space, m, oracle));
  }
  return {{"max_inductive_vs_oracle", ind_oracle},
          {"max_exact_vs_oracle", exact_oracle},
          {"max_exact_vs_inductive", exact_ind},
          {"max_objective_excess_over_oracle", objective_gap}};
}

Outcome barycenter(const json& c) {
  positive(c, "trials");
  positive(c, "max_support");
  const double h = getd(c, "grid_step");
  require(h > 0.0, "grid_step must be positive");
  Rng rng(seed_of(c));
  const std::string space = gets(c, "space");
  json r;
  if (space == "tree") {
    r = barycenter_trials(cat0::MetricTree(sample_tree()), rng, geti(c, "trials"), geti(c, "max_support"), h);
  } else if (space == "pod") {
    positive(c, "legs");
    r = barycenter_trials(cat0::Pod(geti(c, "legs")), rng, geti(c, "trials"), geti(c, "max_support"), h);
  } else {
    fail(ErrorKind::kPrecondition, "space must be tree or pod");
  }
  Outcome o;
  o.pass = r["max_inductive_vs_oracle"].get<double>() <= 10.0 * h &&
           r["max_objective_excess_over_oracle"].get<double>() <= 1e-12;
  o.result = std::move(r);
  o.result["budget"] = 10.0 * h;
  return o;
}

template <class S>
json lemma_trials(const S& space, Rng& rng, int trials, int max_support) {
  double slack1 = std::numeric_limits<double>::infinity(), slack2 = slack1, at_bar = 0.0;
  double ip_slack = slack1, ip_defect = 0.0;
  constexpr bool kCone = cat0::ConeSpace<S>;
  for (int t = 0; t < trials; ++t) {
    const int size = 1 + static_cast<int>(uniform_index(rng, max_support));
    const auto m = cat0::random_measure(space, rng, size);
    const auto w = cat0::random_point(space, rng);
    const auto rep = cat0::variance_report(space, m, w);
    slack1 = std::min(slack1, rep.slack1());
    slack2 = std::min(slack2, rep.slack2());
    at_bar = std::max(at_bar, std::abs(cat0::variance_report(space, m, cat0::barycenter(space, m)).slack1()));
    if constexpr (kCone) {
      const auto ip = cat0::tangent_inner_product_check(space, m, w);
      ip_slack = std::min(ip_slack, ip.slack);
      ip_defect = std::max(ip_defect, std::abs(ip.equality_defect));
    }
  }
  json r = {{"min_variance_slack", slack1},
            {"min_spread_slack", slack2},
            {"max_equality_defect_at_barycenter", at_bar},
            {"inner_product_checked", kCone}};
  if (kCone) {
    r["min_inner_product_slack"] = ip_slack;
    r["max_inner_product_equality_defect"] = ip_defect;
  }
  return r;
}

Outcome variance_lemma(const json& c) {
  positive(c, "trials");
  positive(c, "max_support");
  Rng rng(seed_of(c));
  const std::string space = gets(c, "space");
  const int trials = geti(c, "trials"), ms = geti(c, "max_support");
  json r;
  if (space == "euclidean") {
    positive(c, "dim");
    r = lemma_trials(cat0::Euclidean(geti(c, "dim")), rng, trials, ms);
  } else if (space == "pod") {
    positive(c, "legs");
    r = lemma_trials(cat0::Pod(geti(c, "legs")), rng, trials, ms);
  } else if (space == "tree") {
    r = lemma_trials(cat0::MetricTree(sample_tree()), rng, trials, ms);
  } else if (space == "cone") {
    r = lemma_trials(invariants::triangle_cone(2), rng, trials, ms);
  } else {
    fail(ErrorKind::kPrecondition, "space must be euclidean, pod, tree or cone");
  }
  Outcome o;
  const double tol = 1e-8;
  o.pass = r["min_variance_slack"].get<double>() >= -tol && r["min_spread_slack"].get<double>() >= -tol &&
           r["max_equality_defect_at_barycenter"].get<double>() <= tol;
  if (r["inner_product_checked"].get<bool>()) {
    o.pass = o.pass && r["min_inner_product_slack"].get<double>() >= -tol &&
             r["max_inner_product_equality_defect"].get<double>() <= tol;
  }
  o.result = std::move(r);
  return o;
}

// ---- energies ------------------------------------------------------------

Outcome z_example(const json& c) {
  positive(c, "trials");
  positive(c, "n_max");
  require(geti(c, "n_max") <= energy::kMaxWalkSteps, "n_max must be <= 12");
  const double range = getd(c, "range");
  Rng rng(seed_of(c));
  double shift_defect = 0.0, flip_defect = 0.0;
  for (int t = 0; t < geti(c, "trials"); ++t) {
    const double tau = uniform(rng, -range, range);
    const double alpha = uniform(rng, -range, range);
    const Eigen::VectorXd y0 = Eigen::VectorXd::Constant(1, alpha);
    const auto shift = EuclideanAction::integer_line(1.0, tau);
    const auto flip = EuclideanAction::integer_line(-1.0, tau);
    for (int n = 1; n <= geti(c, "n_max"); ++n) {
      shift_defect = std::max(shift_defect, std::abs(energy::equivariant_energy(shift, y0, n) - n * tau * tau / 2.0));
      if (n % 2 == 1) {
        const double expected = 2.0 * (alpha - tau / 2.0) * (alpha - tau / 2.0);
        flip_defect = std::max(flip_defect, std::abs(energy::equivariant_energy(flip, y0, n) - expected));
      }
    }
  }
  Outcome o;
  o.result = {{"max_translation_defect", shift_defect}, {"max_reflection_defect", flip_defect}};
  o.pass = shift_defect <= 1e-12 && flip_defect <= 1e-12;
  return o;
}

Outcome cayley_energy(const json& c) {
  positive(c, "m");
  positive(c, "n_max");
  const int m = geti(c, "m");
  Outcome o;
  json rows = json::array();
  std::string csv = "n,energy,length_chain_energy,bound\n";
  for (int n = 1; n <= geti(c, "n_max"); ++n) {
    const double e = energy::cayley_tree_energy(m, n);
    const auto lengths = energy::word_length_distribution(m, n);
    double chain = 0.0;
    for (int l = 0; l <= n; ++l) chain += 0.5 * lengths[l] * l * l;
    const double bound = energy::cayley_tree_bound(m, n);
    rows.push_back({{"n", n}, {"energy", e}, {"length_chain_energy", chain}, {"bound", bound}});
    csv += std::to_string(n) + "," + csv_number(e) + "," + csv_number(chain) + "," + csv_number(bound) + "\n";
    o.pass = o.pass && e <= bound + 1e-12 && std::abs(e - chain) <= 1e-12 * std::max(1.0, chain);
  }
  o.result = {{"rows", rows}};
  o.csv = csv;
  return o;
}

Outcome inequality_suite(const json& c) {
  positive(c, "trials");
  positive(c, "n_max");
  positive(c, "rank");
  require(geti(c, "n_max") <= energy::kMaxInequalitySteps, "n_max must be <= 8");
  Rng rng(seed_of(c));
  const std::string kind = gets(c, "action");
  const int trials = geti(c, "trials"), n_max = geti(c, "n_max"), k = geti(c, "rank");
  double min_slack = std::numeric_limits<double>::infinity();
  int failures = 0;
  Outcome o;
  if (kind == "euclidean") {
    positive(c, "dim");
    double identity = 0.0;
    int equivalence_failures = 0;
    double worst_growth = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
      const auto action = energy::random_euclidean_action(k, geti(c, "dim"), rng);
      const auto y0 = cat0::random_point(action.space(), rng);
      const auto r = energy::inequality_report(action, y0, n_max);
      min_slack = std::min(min_slack, r.min_slack());
      failures += !r.holds();
      for (const auto& row : r.rows) worst_growth = std::max(worst_growth, row.energy - row.n * r.energy);
      for (const auto& y : {y0, Eigen::VectorXd(action.harmonic_basepoint())}) {
        const auto a = energy::affine_operator_report(action, y, n_max, rng, 20);
        equivalence_failures += !a.holds();
        for (const auto& row : a.rows) identity = std::max(identity, row.identity_defect);
      }
    }
    o.result = {{"max_affine_identity_defect", identity},
                {"affine_failures", equivalence_failures},
                {"max_energy_minus_n_energy", worst_growth}};
    o.pass = equivalence_failures == 0 && identity <= 1e-10 && worst_growth <= 1e-8;
  } else if (kind == "tree") {
    const auto shapes = tree_shapes();
    int without_gradient = 0;
    for (int t = 0; t < trials; ++t) {
      const auto action = energy::random_tree_action(shapes[t % shapes.size()], k, rng);
      const auto y0 = cat0::random_point(action.space(), rng);
      const auto r = energy::inequality_report(action, y0, n_max);
      min_slack = std::min(min_slack, r.min_slack());
      failures += !r.holds();
      without_gradient += !r.has_gradient;
    }
    o.result = {{"reports_without_gradient", without_gradient}};
  } else {
    fail(ErrorKind::kPrecondition, "action must be euclidean or tree");
  }
  o.result["min_slack"] = min_slack;
  o.result["failures"] = failures;
  o.pass = o.pass && failures == 0 && min_slack >= -1e-8;
  return o;
}

Outcome affine_identity(const json& c) {
  positive(c, "trials");
  positive(c, "n_max");
  positive(c, "dim");
  require(geti(c, "n_max") <= energy::kMaxInequalitySteps, "n_max must be <= 8");
  Rng rng(seed_of(c));
  json rows = json::array();
  int failures = 0;
  double identity = 0.0, selfadjoint = 0.0, harmonic_slack = 0.0;
  double generic_min_slack = std::numeric_limits<double>::infinity();
  for (int t = 0; t < geti(c, "trials"); ++t) {
    const auto action = energy::random_euclidean_action(2, geti(c, "dim"), rng);
    const auto generic = energy::affine_operator_report(action, cat0::random_point(action.space(), rng),
                                                        geti(c, "n_max"), rng);
    const auto harmonic = energy::affine_operator_report(action, action.harmonic_basepoint(), geti(c, "n_max"), rng);
    failures += !generic.holds() + !harmonic.holds();
    for (const auto* r : {&generic, &harmonic}) {
      selfadjoint = std::max(selfadjoint, r->selfadjoint_defect);
      for (const auto& row : r->rows) identity = std::max(identity, row.identity_defect);
    }
    for (const auto& row : harmonic.rows) harmonic_slack = std::max(harmonic_slack, std::abs(row.energy_slack));
    for (const auto& row : generic.rows)
      if (row.n >= 2) generic_min_slack = std::min(generic_min_slack, row.energy_slack);
  }
  Outcome o;
  o.result = {{"failures", failures},
              {"max_identity_defect", identity},
              {"max_selfadjoint_defect", selfadjoint},
              {"max_harmonic_energy_slack", harmonic_slack},
              {"min_generic_energy_slack", generic_min_slack}};
  o.pass = failures == 0;
  return o;
}

Outcome descent(const json& c) {
  energy::DescentOptions opt;
  opt.step = getd(c, "step");
  opt.tol = getd(c, "tol");
  opt.max_iter = geti(c, "max_iter");
  const std::string kind = gets(c, "action");
  const double tau = getd(c, "tau");
  Outcome o;
  std::vector<energy::DescentStep> trace;
  if (kind == "flip" || kind == "shift") {
    const auto action = EuclideanAction::integer_line(kind == "flip" ? -1.0 : 1.0, tau);
    const auto res = energy::fixed_point_descent(action, Eigen::VectorXd::Constant(1, getd(c, "start")), opt);
    trace = res.trace;
    o.result = {{"stop", res.stop}, {"point", vec(res.point)}};
    if (kind == "flip") {
      o.result["fixed_point"] = tau / 2.0;
      o.pass = res.stop == "energy" && std::abs(res.point[0] - tau / 2.0) <= std::sqrt(opt.tol) * 10.0;
    } else {
      o.result["translation_energy"] = tau * tau / 2.0;
      o.pass = res.stop == "gradient" && std::abs(res.trace.back().energy - tau * tau / 2.0) <= 1e-9;
    }
  } else if (kind == "tree") {
    Rng rng(seed_of(c));
    const auto shape = energy::symmetric_tree({3, 2}, {1.0, 0.5});
    const auto action = energy::random_tree_action(shape, 2, rng);
    const auto start = cat0::random_point(action.space(), rng);
    const auto res = energy::fixed_point_descent(action, start, opt);
    trace = res.trace;
    const double dist = action.distance_to_fixed_set(res.point);
    o.result = {{"stop", res.stop},
                {"point", {{"edge", res.point.edge}, {"offset", res.point.offset}}},
                {"distance_to_fixed_set", dist}};
    o.pass = res.stop == "energy" && dist <= 1e-4;
  } else {
    fail(ErrorKind::kPrecondition, "action must be flip, shift or tree");
  }
  o.result["iterations"] = trace.size();
  o.result["final_energy"] = trace.back().energy;
  o.result["final_gradient_norm"] = trace.back().gradient_norm;
  o.csv = energy::trace_csv(trace);
  return o;
}

Outcome converse(const json& c) {
  positive(c, "trials");
  positive(c, "n_max");
  Rng rng(seed_of(c));
  const auto shape = energy::symmetric_tree({2, 3}, {1.0, 0.4}, true, 0.9);
  int failures = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < geti(c, "trials"); ++t) {
    const auto action = energy::random_tree_action(shape, 2, rng);
    const auto r = energy::converse_tree_check(action, cat0::random_point(action.space(), rng), geti(c, "n_max"));
    failures += !r.holds();
    for (const auto& row : r.rows) worst = std::max(worst, row.energy - row.bound);
  }
  Outcome o;
  o.result = {{"constant", 4.0}, {"failures", failures}, {"max_energy_minus_bound", worst}};
  o.pass = failures == 0;
  return o;
}

// ---- invariants ----------------------------------------------------------

json spectrum_json(const invariants::GramSpectrum& s) {
  json groups = json::array();
  for (const auto& g : s.formula) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  return {{"formula", groups}, {"max_defect", s.max_defect}, {"trace", s.trace},
          {"min_numeric", s.numeric.minCoeff()}, {"max_numeric", s.numeric.maxCoeff()}};
}

Outcome gram_spectrum(const json& c) {
  const int r = geti(c, "r");
  invariants::GramSpec spec{r, getd(c, "a"), getd(c, "b")};
  if (getb(c, "optimal")) {
    const auto opt = invariants::optimal_ab_formula(r);
    spec.a = opt.a;
    spec.b = opt.b;
  }
  Outcome o;
  const auto main = invariants::gram_eigenvalues(spec);
  o.result = {{"a", spec.a}, {"b", spec.b}, {"psd", invariants::is_psd(spec)}, {"spectrum", spectrum_json(main)}};
  double worst = main.max_defect;
  const int randoms = geti(c, "random_specs");
  require(randoms >= 0, "random_specs must be >= 0");
  if (randoms > 0) {
    Rng rng(seed_of(c));
    for (int i = 0; i < randoms; ++i)
      worst = std::max(worst, invariants::gram_eigenvalues(invariants::random_psd_spec(r, rng)).max_defect);
  }
  o.result["random_specs"] = randoms;
  o.result["max_defect_all_specs"] = worst;
  o.pass = worst <= 1e-8;
  return o;
}

Outcome optimal_ab(const json& c) {
  const int r = geti(c, "r");
  const auto opt = invariants::optimal_ab(r);
  const auto iota = invariants::iota_embedding({r, opt.a, opt.b});
  const auto vertex = invariants::scan_vertex_pairs(iota, {1.0});
  Outcome o;
  o.result = {{"a", opt.a},
              {"b", opt.b},
              {"distortion", opt.distortion},
              {"vertex_pair_formula", opt.formula_distortion},
              {"w_dimension", opt.w_dimension},
              {"min_eigenvalue", opt.min_eigenvalue},
              {"vertex_pair_ratio", vertex.max_ratio},
              {"vertex_pairs", vertex.pairs},
              {"norm_defect", vertex.norm_defect}};
  o.pass = std::abs(vertex.max_ratio - opt.distortion) <= 1e-8 && opt.distortion < 2.0 &&
           vertex.lipschitz_excess <= 1e-10;
  const int per_edge = geti(c, "grid_per_edge");
  if (per_edge > 0) {
    const auto grid = invariants::scan_grid(iota, per_edge, {0.0, 0.5, 1.0, 2.0});
    o.result["grid_ratio"] = grid.max_ratio;
    o.result["grid_lipschitz_excess"] = grid.lipschitz_excess;
    o.pass = o.pass && grid.lipschitz_excess <= 1e-10;
  }
  return o;
}

Outcome delta_mu0(const json& c) {
  const int r = geti(c, "r");
  const auto d = invariants::delta_mu0(r);
  Outcome o;
  o.result = {{"r", r}, {"bound", d.bound}, {"formula", d.formula}, {"defect", std::abs(d.bound - d.formula)}};
  o.pass = std::abs(d.bound - d.formula) <= 1e-10;
  if (r == 2) {
    const double closed = (5.0 - 3.0 * std::sqrt(2.0)) / 14.0;
    o.result["closed_form_r2"] = closed;
    o.pass = o.pass && std::abs(d.bound - closed) <= 1e-12;
  }
  return o;
}

Outcome pod_distortion(const json& c) {
  positive(c, "r_max");
  Outcome o;
  json rows = json::array();
  std::string csv = "r,max_ratio,formula,lipschitz_excess,mean_norm\n";
  for (int r = 1; r <= geti(c, "r_max"); ++r) {
    const auto iota = invariants::pod_embedding(r);
    const auto scan = invariants::scan_pod(iota, {0.0, 0.5, 1.0, 2.0});
    const double formula = invariants::pod_distortion(r);
    const double mean = iota.legs.rowwise().mean().norm();
    rows.push_back({{"r", r}, {"max_ratio", scan.max_ratio}, {"formula", formula},
                    {"lipschitz_excess", scan.lipschitz_excess}, {"mean_norm", mean}});
    csv += std::to_string(r) + "," + csv_number(scan.max_ratio) + "," + csv_number(formula) + "," +
           csv_number(scan.lipschitz_excess) + "," + csv_number(mean) + "\n";
    o.pass = o.pass && std::abs(scan.max_ratio - formula) <= 1e-10 && scan.lipschitz_excess <= 1e-10 &&
             mean <= 1e-12;
  }
  o.result = {{"rows", rows}};
  o.csv = csv;
  return o;
}

// Independent evaluation of the two case formulas for the building bounds.
std::pair<double, double> building_case_formulas(int n) {
  if (n % 2 == 0) return {std::sqrt(n + 2.0), (n + 1.0) / (n + 2.0)};
  const double s = std::sqrt((n - 1.0) / (n + 3.0));
  return {2.0 / std::sqrt(2.0 - 2.0 * s), (2.0 + 2.0 * s) / 4.0};
}

Outcome building_bounds(const json& c) {
  positive(c, "n_max");
  const int r = geti(c, "r");
  std::vector<invariants::BuildingBounds> rows;
  json out = json::array();
  Outcome o;
  for (int n = 1; n <= geti(c, "n_max"); ++n) {
    rows.push_back(invariants::building_bounds({n, r}));
    const auto& b = rows.back();
    const auto [d, delta] = building_case_formulas(n);
    const auto dist = invariants::building_distances({n, r});
    json row = {{"n", n}, {"d_min", b.d_min}, {"distortion_bound", b.distortion}, {"delta_bound", b.delta},
                {"case_formula_distortion", d}, {"case_formula_delta", delta},
                {"table_min", optional_num(dist.table_min)}};
    o.pass = o.pass && std::abs(b.distortion - d) <= 1e-12 && std::abs(b.delta - delta) <= 1e-12;
    if (dist.table_min) o.pass = o.pass && std::abs(*dist.table_min - dist.d_min) <= 1e-14;
    if (b.certificate) {
      row["certificate_max_ratio"] = b.certificate->max_ratio;
      row["certificate_lipschitz_excess"] = b.certificate->lipschitz_excess;
      o.pass = o.pass && b.certificate->lipschitz_excess <= 1e-10 && b.certificate->max_ratio <= b.distortion + 1e-10;
    }
    out.push_back(row);
  }
  o.result = {{"rows", out}};
  o.csv = invariants::building_bounds_csv(rows);
  return o;
}

template <class P>
json wang_json(const invariants::WangEstimate<P>& e) {
  return {{"value", e.value},
          {"lambda_real", e.lambda_real},
          {"distortion_lower", optional_num(e.distortion_lower)},
          {"delta_lower", optional_num(e.delta_lower)},
          {"budget_exhausted", e.budget_exhausted},
          {"consistent", e.consistent}};
}

Outcome wang(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const auto target = parse_target(gets(c, "target"));
  invariants::WangOptions opt;
  opt.restarts = geti(c, "restarts");
  opt.seed = seed_of(c);
  Outcome o;
  if (target.kind == "euclid") {
    const auto e = invariants::wang_estimate(g, cat0::Euclidean(target.size), opt);
    o.result = wang_json(e);
    o.pass = e.consistent && std::abs(e.value - e.lambda_real) <= 1e-6;
  } else {
    if (target.size >= 2) opt.distortion = invariants::pod_distortion(target.size - 1);
    const auto e = invariants::wang_estimate(g, cat0::Pod(target.size), opt);
    o.result = wang_json(e);
    o.pass = e.consistent && e.value <= e.lambda_real + 1e-9;
  }
  return o;
}

// ---- random groups -------------------------------------------------------

json labels_json(const random_group::SLabelling& a) {
  json out = json::array();
  for (char ch : a.label) out.push_back(std::string(1, ch));
  return out;
}

Outcome labelling(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const auto a = random_group::sample_labelling(g, geti(c, "k"), seed_of(c));
  const auto rel = random_group::relators(g, a, geti(c, "basepoint"));
  Outcome o;
  o.result = {{"labels", labels_json(a)},
              {"relators", rel},
              {"inverse_consistent", a.inverse_consistent(g)},
              {"cycle_rank", g.edge_count() - g.vertex_count() + 1}};
  o.pass = a.inverse_consistent(g) && static_cast<int>(rel.size()) == g.edge_count() - g.vertex_count() + 1;
  return o;
}

std::string table_csv(const random_group::WordTable& t) {
  std::string csv = "word,mass\n";
  for (const auto& [w, q] : t) csv += (w.empty() ? std::string("e") : w) + "," + csv_number(q) + "\n";
  return csv;
}

Outcome pushforward(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const auto a = random_group::sample_labelling(g, geti(c, "k"), seed_of(c));
  const auto t = random_group::pushforward_walk(g, a, geti(c, "n"));
  double total = 0.0;
  for (const auto& [w, q] : t) total += q;
  Outcome o;
  const auto id = t.find("");
  o.result = {{"labels", labels_json(a)},
              {"support", t.size()},
              {"total_mass", total},
              {"identity_mass", id == t.end() ? 0.0 : id->second}};
  o.pass = std::abs(total - 1.0) <= 1e-12;
  o.csv = table_csv(t);
  return o;
}

Outcome p_profile(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const int n = geti(c, "n");
  const auto p = random_group::p_profile(g, n);
  double total = 0.0, worst_row = 0.0;
  for (double w : p.weights) total += w;
  for (const auto& row : p.per_vertex) {
    double s = 0.0;
    for (double x : row) s += x;
    worst_row = std::max(worst_row, std::abs(s - 1.0));
  }
  const int gir = graph::girth(g);
  const bool tree_like = gir == graph::kInfiniteGirth || 2 * n < gir;
  Outcome o;
  o.result = {{"weights", p.weights}, {"tail", p.tail}, {"weight_sum", total},
              {"max_row_defect", worst_row}, {"tree_like", tree_like}};
  o.pass = std::abs(total - 1.0) <= 1e-12 && worst_row <= 1e-12;
  if (tree_like) {
    const double b = random_group::bernoulli_tail(n);
    o.result["bernoulli_tail"] = b;
    o.pass = o.pass && p.tail <= b + 1e-12;
  }
  std::string csv = "l,weight\n";
  for (int l = 0; l <= n; ++l) csv += std::to_string(l) + "," + csv_number(p.weights[l]) + "\n";
  o.csv = csv;
  return o;
}

Outcome weighted_sum(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const int k = geti(c, "k"), n = geti(c, "n");
  const auto check = random_group::weighted_sum_check(g, k, n, geti(c, "trials"), seed_of(c));
  Outcome o;
  std::string csv = "word,mean,predicted,sigma\n";
  for (const auto& e : check.entries)
    csv += (e.word.empty() ? std::string("e") : e.word) + "," + csv_number(e.mean) + "," +
           csv_number(e.predicted) + "," + csv_number(e.sigma) + "\n";
  o.csv = csv;
  o.result = {{"entries", check.entries.size()},
              {"max_deviation", check.max_deviation},
              {"max_z", check.max_z},
              {"within_3_sigma", check.within_budget}};
  if (const auto* id = check.find("")) {
    o.result["identity"] = {{"mean", id->mean}, {"predicted", id->predicted}, {"sigma", id->sigma}};
  }
  o.pass = check.within_budget;
  const double labellings = std::pow(2.0 * k, g.edge_count());
  if (labellings <= random_group::kMaxExhaustiveLabellings) {
    const auto exact = random_group::exact_expected_pushforward(g, k, n);
    const auto predicted = random_group::predicted_pushforward(random_group::p_profile(g, n), k);
    double defect = 0.0;
    for (const auto& [w, q] : predicted) {
      const auto it = exact.find(w);
      defect = std::max(defect, std::abs((it == exact.end() ? 0.0 : it->second) - q));
    }
    for (const auto& [w, q] : exact)
      if (!predicted.count(w)) defect = std::max(defect, q);
    o.result["exact_defect"] = defect;
    o.pass = o.pass && defect <= 1e-12;
  } else {
    o.result["exact_defect"] = nullptr;
  }
  return o;
}

Outcome bernoulli(const json& c) {
  const int n = geti(c, "n");
  require(n >= 2, "n must be >= 2");
  const auto b = random_group::bernoulli_bound(n);
  const double erf_ref = std::erf(1.0 / std::numbers::sqrt2);
  Outcome o;
  o.result = {{"value", b.value}, {"gaussian_limit", b.limit}, {"gaussian_limit_erf", erf_ref},
              {"distance_to_limit", std::abs(b.value - b.limit)},
              {"c_observed", b.c_observed}, {"argmax", b.argmax}};
  o.pass = std::abs(b.limit - erf_ref) <= 1e-12 && b.c_observed < 1.0;
  return o;
}

template <class S>
json transplant_trials(const graph::Graph& g, const S& space, const random_group::LambdaLower& lower,
                       int trials, int n_max, Rng& rng, bool& pass) {
  double worst = -std::numeric_limits<double>::infinity();
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<typename S::Point> phi;
    for (int v = 0; v < g.vertex_count(); ++v) phi.push_back(cat0::random_point(space, rng));
    const auto r = random_group::spectral_transplant_check<S>(g, space, phi, n_max, lower);
    failures += !r.holds();
    for (const auto& row : r.rows) worst = std::max(worst, row.lhs - row.rhs);
  }
  pass = failures == 0;
  return {{"lambda_lower", lower.value}, {"route", lower.route}, {"failures", failures},
          {"max_lhs_minus_rhs", worst}};
}

Outcome transplant(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const auto target = parse_target(gets(c, "target"));
  positive(c, "trials");
  positive(c, "n_max");
  Rng rng(seed_of(c));
  Outcome o;
  if (target.kind == "euclid") {
    o.result = transplant_trials(g, cat0::Euclidean(target.size), random_group::lambda_lower_real(g),
                                 geti(c, "trials"), geti(c, "n_max"), rng, o.pass);
  } else {
    require(target.size >= 2, "pod targets need at least two legs for a distortion certificate");
    const auto lower = random_group::lambda_lower_distortion(g, invariants::pod_distortion(target.size - 1));
    o.result = transplant_trials(g, cat0::Pod(target.size), lower, geti(c, "trials"), geti(c, "n_max"), rng, o.pass);
  }
  return o;
}

Outcome pipeline(const json& c) {
  const std::string ref = gets(c, "graph");
  std::optional<graph::Graph> g;
  if (!ref.empty()) g = io::load_graph(ref);
  const double c_abs = getd(c, "c_abs");
  const auto p = random_group::fixed_point_pipeline(getd(c, "lambda0"), c_abs, g ? &*g : nullptr);
  Outcome o;
  o.result = {{"n", p.n},
              {"eps", p.eps},
              {"g0", p.g0},
              {"c_grad", optional_num(p.c_grad)},
              {"c_abs_is_default", c_abs == random_group::default_c_abs()},
              {"c_abs_note", "the absolute constant is an input; the default 8/(1 - C_observed) is an engineering choice"}};
  if (p.graph) {
    o.result["graph"] = {{"girth", girth_json(p.graph->girth)},
                         {"diameter", p.graph->diameter},
                         {"min_degree", p.graph->min_degree},
                         {"max_degree", p.graph->max_degree},
                         {"girth_ok", p.graph->girth_ok},
                         {"degree_ok", p.graph->degree_ok},
                         {"spectral_gap", optional_num(p.graph->spectral_gap)},
                         {"gap_ok", p.graph->gap_ok ? json(*p.graph->gap_ok) : json(nullptr)},
                         {"diameter_girth_ratio", optional_num(p.graph->diameter_girth_ratio)},
                         {"short_paths", p.graph->short_paths ? json(*p.graph->short_paths) : json(nullptr)},
                         {"path_growth", optional_num(p.graph->path_growth)}};
  }
  o.pass = p.eps > 0.0;
  return o;
}

Outcome concentration(const json& c) {
  const auto g = io::load_graph(gets(c, "graph"));
  const auto r = random_group::concentration_experiment(g, geti(c, "k"), geti(c, "n"), geti(c, "trials"), seed_of(c));
  Outcome o;
  o.result = {{"trials", r.trials},
              {"lower_events", r.lower_events},
              {"upper_events", r.upper_events},
              {"lower_frequency", optional_num(r.lower_frequency)},
              {"upper_frequency", optional_num(r.upper_frequency)}};
  return o;
}

// ---- catalog ---------------------------------------------------------------

Param seed_param() { return {"seed", nullptr, "random seed (required)"}; }

std::vector<Experiment> build_catalog() {
  std::vector<Experiment> v;
  v.push_back({"graph-info", "Spectral gap of the standard random walk on a finite graph",
               "size, degrees, girth, diameter and lambda_1(G, R) of a graph",
               {{"graph", "petersen", io::kGraphRefHelp}, {"emit_graph", false, "embed the graph as JSON"}},
               graph_info});
  v.push_back({"lps", "Ramanujan Cayley graphs X^{p,q} as expanders of large girth",
               "build X^{p,q} and certify size, degree, bipartiteness, girth, diameter and spectral gap",
               {{"p", 5, "prime p = 1 mod 4"}, {"q", 13, "prime q = 1 mod 4, q > 2 sqrt(p)"}}, lps});
  v.push_back({"generalized-triangle", "Incidence graph of the projective plane PG(2, r)",
               "certify the generalized triangle: (r+1)-regular, bipartite, girth 6, spectral gap",
               {{"r", 2, "prime"}}, generalized_triangle});
  v.push_back({"barycenter", "Barycenters of finite measures on CAT(0) spaces",
               "exact barycenter vs the inductive mean vs a brute-force grid oracle",
               {{"space", "tree", "tree or pod"}, {"legs", 4, "pod legs"}, {"trials", 100, "random measures"},
                {"max_support", 6, "largest support"}, {"grid_step", 1e-3, "oracle grid spacing h"}, seed_param()},
               barycenter});
  v.push_back({"variance-lemma", "Variance inequalities and the tangent-cone inner product inequality",
               "random finite measures against the variance and inner-product inequalities",
               {{"space", "euclidean", "euclidean, pod, tree or cone"}, {"dim", 3, "euclidean dimension"},
                {"legs", 3, "pod legs"}, {"trials", 1000, "random measures"}, {"max_support", 6, "largest support"},
                seed_param()},
               variance_lemma});
  v.push_back({"z-example", "Energies of Z acting on the line by translation and reflection",
               "n-step energies against n tau^2/2 and 2(alpha - tau/2)^2",
               {{"trials", 50, "random (tau, alpha)"}, {"n_max", 10, "largest n"}, {"range", 2.0, "sampling range"},
                seed_param()},
               z_example});
  v.push_back({"cayley-energy", "n-step energy of the free group acting on its Cayley tree",
               "exact E_{mu^n} against m n^2 / (2m - 1)",
               {{"m", 2, "free group rank"}, {"n_max", 6, "largest n"}}, cayley_energy});
  v.push_back({"inequality-suite", "n-step energy and gradient inequalities for equivariant maps",
               "slacks of every n-step inequality on random Euclidean or tree actions",
               {{"action", "euclidean", "euclidean or tree"}, {"rank", 2, "free group rank"}, {"dim", 3, "dimension"},
                {"trials", 200, "random actions"}, {"n_max", 6, "largest n"}, seed_param()},
               inequality_suite});
  v.push_back({"affine-identity", "Gradient identity for affine isometric actions on Hilbert space",
               "-Delta_n f = (I + M + ... + M^(n-1))(-Delta_1 f) and equality at harmonic maps",
               {{"dim", 4, "dimension"}, {"trials", 20, "random actions"}, {"n_max", 6, "largest n"}, seed_param()},
               affine_identity});
  v.push_back({"descent", "Discrete energy descent to a fixed point",
               "iterate toward the one-step barycenter; trace as CSV",
               {{"action", "flip", "flip, shift or tree"}, {"tau", 1.7, "translation of the line actions"},
                {"start", 5.0, "start on the line"}, {"step", 0.5, "geodesic step in (0, 1]"},
                {"tol", 1e-9, "stopping tolerance"}, {"max_iter", 100000, "iteration cap"}, seed_param()},
               descent});
  v.push_back({"converse", "Converse n-step bound for tree actions with a fixed point",
               "E_{mu^n} <= 2k E_mu on random tree actions",
               {{"trials", 30, "random actions"}, {"n_max", 6, "largest n"}, seed_param()}, converse});
  v.push_back({"gram-spectrum", "Eigenvalues of the Gram matrices on the generalized triangle",
               "numeric spectrum against the four closed-form eigenvalue groups",
               {{"r", 2, "prime"}, {"a", 0.0, "distance-2 inner product"}, {"b", 0.0, "distance-3 inner product"},
                {"optimal", true, "use the optimal (a, b)"}, {"random_specs", 0, "extra random PSD (a, b)"},
                {"seed", nullptr, "random seed (required with random_specs)"}},
               gram_spectrum});
  v.push_back({"optimal-ab", "Optimal embedding of the cone over the generalized triangle",
               "a*, b*, the distortion formula and exhaustive pair scans",
               {{"r", 2, "prime"}, {"grid_per_edge", 0, "interior directions per edge in a grid scan"}}, optimal_ab});
  v.push_back({"delta-mu0", "Delta invariant of the uniform vertex measure",
               "Gram-mean bound against (sqrt r - 1)^2 / (2(r - sqrt r + 1))", {{"r", 2, "prime"}}, delta_mu0});
  v.push_back({"pod-distortion", "Distortion of pods", "realized ratio of the simplex embedding vs sqrt(2r/(r+1))",
               {{"r_max", 10, "largest r"}}, pod_distortion});
  v.push_back({"building-bounds", "Distortion and delta bounds for tangent cones of Euclidean buildings",
               "bounds 2/d_min and 1 - (d_min/2)^2 as CSV",
               {{"n_max", 6, "largest building dimension"}, {"r", 2, "prime"}}, building_bounds});
  v.push_back({"wang", "Wang invariant lambda_1(G, T)", "Rayleigh-quotient search with lower-bound consistency",
               {{"graph", "petersen", io::kGraphRefHelp}, {"target", "euclid:2", "line, tripod, euclid:D or pod:M"},
                {"restarts", 4, "random restarts"}, seed_param()},
               wang});
  v.push_back({"labelling", "S-labellings and the graph model of random groups",
               "sample a labelling and the fundamental-cycle relators",
               {{"graph", "petersen", io::kGraphRefHelp}, {"k", 2, "free group rank"}, {"basepoint", 0, "spanning tree root"},
                seed_param()},
               labelling});
  v.push_back({"pushforward", "Push-forward of the graph random walk to the free group",
               "exact mu-bar^n_alpha as a word table",
               {{"graph", "petersen", io::kGraphRefHelp}, {"k", 2, "free group rank"}, {"n", 2, "steps"}, seed_param()},
               pushforward});
  v.push_back({"p-profile", "Distance profile P_G^n(l) of the graph random walk",
               "weights, tail Q_G^n and Bernoulli domination",
               {{"graph", "petersen", io::kGraphRefHelp}, {"n", 2, "steps"}}, p_profile});
  v.push_back({"weighted-sum", "Weighted-sum decomposition of the expected push-forward",
               "Monte Carlo mean over labellings against sum_l P(l) mu_Gamma^l",
               {{"graph", "petersen", io::kGraphRefHelp}, {"k", 2, "free group rank"}, {"n", 2, "steps"},
                {"trials", 20000, "labellings"}, seed_param()},
               weighted_sum});
  v.push_back({"bernoulli", "Bernoulli comparison for the walk displacement",
               "b^n(sqrt n), its Gaussian limit and the observed constant", {{"n", 200, "steps"}}, bernoulli});
  v.push_back({"transplant", "Transplanted spectral gap for n-step energies of vertex maps",
               "E_{mu^n}(phi) <= (2 / lambda_lower) E_mu(phi) on random maps",
               {{"graph", "complete:4", io::kGraphRefHelp}, {"target", "euclid:3", "euclid:D or pod:M"},
                {"trials", 1000, "random maps"}, {"n_max", 4, "largest n"}, seed_param()},
               transplant});
  v.push_back({"pipeline", "Fixed-point criterion for random groups: constants n, eps, g0, C_grad",
               "n = min{m : C/lambda0 < sqrt m} and the girth threshold g0 = 2n",
               {{"lambda0", 1.0, "spectral lower bound"}, {"c_abs", random_group::default_c_abs(), "absolute constant"},
                {"graph", "", "optional graph to check against g0"}},
               pipeline});
  v.push_back({"concentration", "Concentration of the push-forward around its expectation",
               "frequencies of the two concentration events over labellings",
               {{"graph", "petersen", io::kGraphRefHelp}, {"k", 2, "free group rank"}, {"n", 2, "steps"},
                {"trials", 200, "labellings"}, seed_param()},
               concentration});
  return v;
}

}  // namespace

const std::vector<Experiment>& catalog() {
  static const std::vector<Experiment> c = build_catalog();
  return c;
}

const Experiment& find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  fail(ErrorKind::kPrecondition, "unknown experiment '" + name + "'");
}

json complete_config(const Experiment& e, const json& config) {
  require(config.is_object(), "config must be a JSON object");
  json out = json::object();
  for (const auto& p : e.params) out[p.key] = p.default_value;
  for (const auto& [key, value] : config.items()) {
    const auto it = std::find_if(e.params.begin(), e.params.end(), [&](const Param& p) { return p.key == key; });
    require(it != e.params.end(), "unknown config key '" + key + "' for " + e.name);
    const json& d = it->default_value;
    bool ok = false;
    if (d.is_null()) {
      ok = value.is_number_unsigned() || (value.is_number_integer() && value.get<std::int64_t>() >= 0);
    } else if (d.is_boolean()) {
      ok = value.is_boolean();
    } else if (d.is_string()) {
      ok = value.is_string();
    } else if (d.is_number_float()) {
      ok = value.is_number();
    } else if (d.is_number_integer()) {
      ok = value.is_number_integer();
    }
    require(ok, "config key '" + key + "' has the wrong type");
    out[key] = d.is_number_float() ? json(value.get<double>()) : value;
  }
  return out;
}

Report run(const std::string& name, const json& config) {
  const auto& e = find(name);
  const json full = complete_config(e, config);
  Outcome o = e.run(full);
  Report r;
  r.pass = o.pass;
  r.csv = std::move(o.csv);
  r.document = {{"tool", "cat0lab"},
                {"version", kVersion},
                {"experiment", e.name},
                {"anchor", e.anchor},
                {"config", full},
                {"result", std::move(o.result)},
                {"pass", o.pass}};
  return r;
}

}  // namespace cat0lab::experiments
