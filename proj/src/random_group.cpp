//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/random_group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <limits>
#include <numbers>

namespace cat0lab::random_group {

char SLabelling::read(const graph::Graph& g, int edge, int from) const {
  const char c = label[edge];
  return g.edge(edge).u == from ? c : energy::inverse_letter(c);
}

bool SLabelling::inverse_consistent(const graph::Graph& g) const {
  if (static_cast<int>(label.size()) != g.edge_count()) return false;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (read(g, e, ed.v) != energy::inverse_letter(read(g, e, ed.u))) return false;
  }
  return true;
}

namespace {

void check_labelling_graph(const graph::Graph& g, int k) {
  require(k >= 1 && k <= 26, "S-labelling: need 1 <= k <= 26");
  require(g.min_degree() >= 2, "S-labelling: every vertex needs degree >= 2");
  for (const auto& e : g.edges())
    if (e.u == e.v) fail(ErrorKind::kUnsupported, "S-labelling: self-loops have no inverse-consistent label");
}

void check_labelling(const graph::Graph& g, const SLabelling& alpha) {
  require(static_cast<int>(alpha.label.size()) == g.edge_count(),
          "S-labelling: one label per edge required");
  const auto letters = energy::alphabet(alpha.k);
  for (char c : alpha.label)
    require(std::find(letters.begin(), letters.end(), c) != letters.end(),
            "S-labelling: label outside the alphabet");
}

}  // namespace

SLabelling sample_labelling(const graph::Graph& g, int k, Rng& rng) {
  check_labelling_graph(g, k);
  const auto letters = energy::alphabet(k);
  SLabelling out{k, std::vector<char>(g.edge_count())};
  for (auto& c : out.label) c = letters[uniform_index(rng, letters.size())];
  return out;
}

SLabelling sample_labelling(const graph::Graph& g, int k, std::uint64_t seed) {
  Rng rng(seed);
  return sample_labelling(g, k, rng);
}

std::vector<Word> relators(const graph::Graph& g, const SLabelling& alpha, int basepoint) {
  check_labelling(g, alpha);
  require(basepoint >= 0 && basepoint < g.vertex_count(), "relators: basepoint out of range");
  const int nv = g.vertex_count();
  std::vector<Word> path(nv);
  std::vector<bool> seen(nv, false);
  std::vector<bool> tree_edge(g.edge_count(), false);
  std::queue<int> q;
  q.push(basepoint);
  seen[basepoint] = true;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (const auto& [v, e] : g.incident(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      tree_edge[e] = true;
      path[v] = path[u] + alpha.read(g, e, u);
      q.push(v);
    }
  }
  std::vector<Word> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    const auto& ed = g.edge(e);
    out.push_back(energy::reduce(path[ed.u] + alpha.read(g, e, ed.u) + energy::inverse(path[ed.v])));
  }
  return out;
}

WordTable pushforward_walk(const graph::Graph& g, const SLabelling& alpha, int n) {
  check_labelling(g, alpha);
  require(n >= 0, "pushforward_walk: need n >= 0");
  if (n > kMaxPushforwardSteps)
    fail(ErrorKind::kSize, "pushforward_walk: at most " + std::to_string(kMaxPushforwardSteps) + " steps");
  const double walks = 2.0 * g.edge_count() * std::pow(double(g.max_degree()), std::max(0, n - 1));
  if (walks > kMaxPushforwardWalks) fail(ErrorKind::kSize, "pushforward_walk: walk count exceeds budget");

  const auto walk = graph::standard_walk(g);
  WordTable out;
  Word word;
  std::function<void(int, int, double)> step = [&](int u, int left, double p) {
    if (left == 0) {
      out[word] += p;
      return;
    }
    const double q = p / g.degree(u);
    for (const auto& [v, e] : g.incident(u)) {
      const char c = alpha.read(g, e, u);
      if (!word.empty() && word.back() == energy::inverse_letter(c)) {
        word.pop_back();
        step(v, left - 1, q);
        word.push_back(energy::inverse_letter(c));
      } else {
        word.push_back(c);
        step(v, left - 1, q);
        word.pop_back();
      }
    }
  };
  for (int u = 0; u < g.vertex_count(); ++u) step(u, n, walk.nu.weights[u]);
  return out;
}

WeightedSumDecomposition p_profile(const graph::Graph& g, int n) {
  require(n >= 1, "p_profile: need n >= 1");
  const auto walk = graph::standard_walk(g);
  const auto power = graph::kernel_power(walk.mu, n);
  const auto dist = g.hop_distances();
  WeightedSumDecomposition out;
  out.n = n;
  out.weights.assign(n + 1, 0.0);
  out.per_vertex.assign(g.vertex_count(), std::vector<double>(n + 1, 0.0));
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (const auto& [v, p] : power.row(u)) {
      const int l = dist[u][v];
      if (l > n) fail(ErrorKind::kDiscrepancy, "p_profile: walk ended beyond n hops");
      out.per_vertex[u][l] += p;
    }
    for (int l = 0; l <= n; ++l) out.weights[l] += walk.nu.weights[u] * out.per_vertex[u][l];
  }
  for (int l = 0; l <= n; ++l)
    if (l * l <= n) out.tail += out.weights[l];
  return out;
}

WordTable predicted_pushforward(const WeightedSumDecomposition& p, int k) {
  WordTable out;
  if (p.weights[0] > 0.0) out[Word{}] += p.weights[0];
  if (p.n == 0) return out;
  const auto powers = energy::free_walk_powers(k, p.n);
  for (int l = 1; l <= p.n; ++l) {
    if (p.weights[l] == 0.0) continue;
    for (const auto& [w, q] : powers[l - 1].table) out[w] += p.weights[l] * q;
  }
  return out;
}

void check_weighted_sum_preconditions(const graph::Graph& g, int k, int n) {
  check_labelling_graph(g, k);
  require(n >= 1, "weighted sum: need n >= 1");
  const int gir = graph::girth(g);
  require(gir == graph::kInfiniteGirth || 2 * n < gir, "weighted sum: need n < girth / 2");
}

const WeightedSumEntry* WeightedSumCheck::find(const Word& w) const {
  for (const auto& e : entries)
    if (e.word == w) return &e;
  return nullptr;
}

WeightedSumCheck weighted_sum_check(const graph::Graph& g, int k, int n, int trials,
                                    std::uint64_t seed) {
  check_weighted_sum_preconditions(g, k, n);
  require(trials >= 2, "weighted_sum_check: need at least 2 trials");
  const auto predicted = predicted_pushforward(p_profile(g, n), k);

  std::map<Word, std::pair<double, double>> moments;  // sum, sum of squares
  for (const auto& [w, q] : predicted) moments[w];
  for (int t = 0; t < trials; ++t) {
    const auto alpha = sample_labelling(g, k, derive_seed(seed, t));
    for (const auto& [w, q] : pushforward_walk(g, alpha, n)) {
      auto& m = moments[w];
      m.first += q;
      m.second += q * q;
    }
  }

  WeightedSumCheck out;
  out.trials = trials;
  out.within_budget = true;
  const double nt = trials;
  for (const auto& [w, m] : moments) {
    WeightedSumEntry e;
    e.word = w;
    e.mean = m.first / nt;
    const auto it = predicted.find(w);
    e.predicted = it == predicted.end() ? 0.0 : it->second;
    const double var = std::max(0.0, (m.second - nt * e.mean * e.mean) / (nt - 1.0));
    e.sigma = std::sqrt(var / nt);
    const double dev = std::abs(e.mean - e.predicted);
    out.max_deviation = std::max(out.max_deviation, dev);
    if (e.sigma > 0.0) out.max_z = std::max(out.max_z, dev / e.sigma);
    if (dev > 3.0 * e.sigma + 1e-12) out.within_budget = false;
    out.entries.push_back(std::move(e));
  }
  return out;
}

WordTable exact_expected_pushforward(const graph::Graph& g, int k, int n) {
  check_labelling_graph(g, k);
  const auto letters = energy::alphabet(k);
  const double count = std::pow(double(letters.size()), g.edge_count());
  if (count > kMaxExhaustiveLabellings)
    fail(ErrorKind::kSize, "exact_expected_pushforward: too many labellings");
  const auto total = static_cast<std::int64_t>(count);
  SLabelling alpha{k, std::vector<char>(g.edge_count())};
  WordTable out;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t r = idx;
    for (auto& c : alpha.label) {
      c = letters[r % letters.size()];
      r /= static_cast<std::int64_t>(letters.size());
    }
    for (const auto& [w, q] : pushforward_walk(g, alpha, n)) out[w] += q / count;
  }
  return out;
}

namespace {

// log C(n, j) - n log 2
double log_binomial_half(int n, int j) {
  return std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) -
         n * std::numbers::ln2;
}

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double bernoulli_tail(int n) {
  require(n >= 1, "bernoulli_tail: need n >= 1");
  // S_n = 2j - n; keep |2j - n|^2 <= n in integers.
  const auto inside = [n](int j) {
    const long long s = 2LL * j - n;
    return s * s <= n;
  };
  if (n <= 60) {
    // Exact counts: C(60, 30) < 2^63, and dividing by 2^n is exact.
    std::uint64_t count = 0, c = 1;
    for (int j = 0; j <= n; ++j) {
      if (inside(j)) count += c;
      c = c * static_cast<std::uint64_t>(n - j) / static_cast<std::uint64_t>(j + 1);
    }
    return std::ldexp(static_cast<double>(count), -n);
  }
  long double sum = 0.0L;
  for (int j = 0; j <= n; ++j)
    if (inside(j)) sum += std::exp(static_cast<long double>(log_binomial_half(n, j)));
  return static_cast<double>(sum);
}

double gaussian_mass_one_sigma() {
  const auto f = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); };
  const double fa = f(-1.0), fm = f(0.0), fb = f(1.0);
  const double whole = 2.0 / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, -1.0, 1.0, fa, fm, fb, whole, 1e-15, 50);
}

BernoulliBound bernoulli_bound(int n) {
  require(n >= 1, "bernoulli_bound: need n >= 1");
  BernoulliBound out;
  out.n = n;
  out.value = bernoulli_tail(n);
  out.limit = gaussian_mass_one_sigma();
  for (int m = 2; m <= n; ++m) {
    const double b = m == n ? out.value : bernoulli_tail(m);
    if (b > out.c_observed) {
      out.c_observed = b;
      out.argmax = m;
    }
  }
  return out;
}

LambdaLower lambda_lower_real(const graph::Graph& g) {
  return {graph::spectral_gap_real(g), "real"};
}

LambdaLower lambda_lower_distortion(const graph::Graph& g, double distortion) {
  require(distortion >= 1.0, "lambda_lower_distortion: distortion must be >= 1");
  return {graph::spectral_gap_real(g) / (distortion * distortion), "distortion"};
}

LambdaLower lambda_lower_delta(const graph::Graph& g, double delta) {
  require(delta >= 0.0 && delta < 1.0, "lambda_lower_delta: need 0 <= delta < 1");
  return {(1.0 - delta) * graph::spectral_gap_real(g), "delta"};
}

bool TransplantCheck::holds(double tol) const {
  return std::all_of(rows.begin(), rows.end(),
                     [&](const TransplantRow& r) { return r.lhs <= r.rhs + tol; });
}

double default_c_abs() { return 8.0 / (1.0 - bernoulli_bound(200).c_observed); }

Pipeline fixed_point_pipeline(double lambda0, double c_abs, const graph::Graph* g) {
  require(std::isfinite(lambda0) && lambda0 > 0.0, "fixed_point_pipeline: lambda0 must be positive");
  require(std::isfinite(c_abs) && c_abs > 0.0, "fixed_point_pipeline: C must be positive");
  const double x = c_abs / lambda0;
  if (x * x > 4e18) fail(ErrorKind::kSize, "fixed_point_pipeline: n overflows");
  auto n = static_cast<std::int64_t>(std::floor(x * x)) + 1;
  while (std::sqrt(double(n)) <= x) ++n;
  while (n > 1 && std::sqrt(double(n - 1)) > x) --n;
  if (n > std::numeric_limits<int>::max()) fail(ErrorKind::kSize, "fixed_point_pipeline: n overflows");

  Pipeline out;
  out.lambda0 = lambda0;
  out.c_abs = c_abs;
  out.n = static_cast<int>(n);
  out.eps = std::sqrt(double(n)) - x;
  out.g0 = 2 * n;
  if (n >= 2) out.c_grad = energy::n_step_gradient_constant(out.n, out.eps);
  if (g) {
    PipelineGraphCheck c;
    const auto gd = graph::girth_and_diameter(*g);
    c.girth = gd.girth;
    c.diameter = gd.diameter;
    c.min_degree = g->min_degree();
    c.max_degree = g->max_degree();
    c.girth_ok = c.girth == graph::kInfiniteGirth || c.girth >= out.g0;
    c.degree_ok = c.min_degree >= 2;
    if (g->vertex_count() <= graph::kMaxDenseVertices) {
      c.spectral_gap = graph::spectral_gap_real(*g);
      c.gap_ok = *c.spectral_gap >= lambda0;
    }
    if (c.girth != graph::kInfiniteGirth) {
      c.diameter_girth_ratio = double(c.diameter) / c.girth;
      c.short_paths = graph::count_embedded_paths(*g, (c.girth + 1) / 2);
      c.path_growth = std::pow(double(*c.short_paths), 2.0 / c.girth);
    }
    out.graph = c;
  }
  return out;
}

ConcentrationReport concentration_experiment(const graph::Graph& g, int k, int n, int trials,
                                             std::uint64_t seed) {
  check_weighted_sum_preconditions(g, k, n);
  require(trials >= 0, "concentration_experiment: trials must be >= 0");
  const auto predicted = predicted_pushforward(p_profile(g, n), k);
  const double step = 1.0 / (2.0 * k);
  ConcentrationReport out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const auto alpha = sample_labelling(g, k, derive_seed(seed, t));
    const auto pushed = pushforward_walk(g, alpha, n);
    bool lower = true;
    for (const auto& [w, q] : predicted) {
      if (q <= 0.0) continue;
      const auto it = pushed.find(w);
      const double got = it == pushed.end() ? 0.0 : it->second;
      if (got < 0.5 * q - 1e-15) {
        lower = false;
        break;
      }
    }
    bool upper = true;
    for (const auto& [w, q] : n == 1 ? pushed : pushforward_walk(g, alpha, 1)) {
      const double cap = w.size() == 1 ? step : 0.0;
      if (q > cap + 1e-15) {
        upper = false;
        break;
      }
    }
    out.lower_events += lower;
    out.upper_events += upper;
  }
  if (trials > 0) {
    out.lower_frequency = double(out.lower_events) / trials;
    out.upper_frequency = double(out.upper_events) / trials;
  }
  return out;
}

}  // namespace cat0lab::random_group
