//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_RANDOM_GROUP_HPP_
#define CAT0LAB_RANDOM_GROUP_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cat0lab/energy/energy.hpp"
#include "cat0lab/energy/free_group.hpp"
#include "cat0lab/graph.hpp"

namespace cat0lab::random_group {

using energy::Word;

/// S-labelling: label[e] is the letter read when traversing edge e from
/// edge(e).u to edge(e).v; the reverse traversal reads its inverse.
struct SLabelling {
  int k = 1;
  std::vector<char> label;

  char read(const graph::Graph& g, int edge, int from) const;
  /// Exact inverse-consistency check over every directed edge.
  bool inverse_consistent(const graph::Graph& g) const;
};

/// Independent uniform label per edge; rejects k = 0 and graphs with a
/// vertex of degree < 2.
SLabelling sample_labelling(const graph::Graph& g, int k, std::uint64_t seed);
SLabelling sample_labelling(const graph::Graph& g, int k, Rng& rng);

/// Reduced words of the fundamental cycles of the BFS spanning tree at
/// `basepoint`; they normally generate the same subgroup as all cycle words.
std::vector<Word> relators(const graph::Graph& g, const SLabelling& alpha, int basepoint = 0);

/// One row mu-bar^n_{Gamma,alpha}(e, .) of the push-forward walk.
using WordTable = std::map<Word, double>;

inline constexpr int kMaxPushforwardSteps = 8;
inline constexpr double kMaxPushforwardWalks = 2e7;

/// Exact: every n-step walk p from every start contributes
/// nu_G(p_0) mu_G(p) to the reduced word alpha(p).
WordTable pushforward_walk(const graph::Graph& g, const SLabelling& alpha, int n);

/// Weights of the decomposition of the expected push-forward.
struct WeightedSumDecomposition {
  int n = 0;
  std::vector<double> weights;                  // P_G^n(l), l = 0..n
  std::vector<std::vector<double>> per_vertex;  // P_{G,u}^n(l)
  double tail = 0.0;                            // Q_G^n = sum_{l <= sqrt n} P(l)
};

/// P_{G,u}^n(l) = probability that the n-step walk from u ends at graph
/// distance l from u, from the exact kernel power and BFS distances.
WeightedSumDecomposition p_profile(const graph::Graph& g, int n);

/// sum_l P_G^n(l) mu_Gamma^l(e, .).
WordTable predicted_pushforward(const WeightedSumDecomposition& p, int k);

/// Rejects min degree < 2, n < 1 and n >= girth/2.
void check_weighted_sum_preconditions(const graph::Graph& g, int k, int n);

struct WeightedSumEntry {
  Word word;
  double mean = 0.0;
  double predicted = 0.0;
  double sigma = 0.0;  // standard error of the mean
};

struct WeightedSumCheck {
  int trials = 0;
  std::vector<WeightedSumEntry> entries;  // union of observed and predicted support
  double max_deviation = 0.0;
  double max_z = 0.0;          // max |mean - predicted| / sigma (entries with sigma > 0)
  bool within_budget = false;  // every entry within 3 sigma (+1e-12)
  const WeightedSumEntry* find(const Word& w) const;
};

/// Monte Carlo mean of pushforward_walk over `trials` labellings (trial i
/// uses derive_seed(seed, i)) against the decomposition.
WeightedSumCheck weighted_sum_check(const graph::Graph& g, int k, int n, int trials,
                                    std::uint64_t seed);

inline constexpr double kMaxExhaustiveLabellings = 1e6;

/// Expectation of the push-forward over all (2k)^|E| labellings.
WordTable exact_expected_pushforward(const graph::Graph& g, int k, int n);

/// b^n(sqrt n) = P(|S_n| <= sqrt n) for the simple +-1 walk.
double bernoulli_tail(int n);
/// int_{-1}^{1} (2 pi)^{-1/2} e^{-x^2/2} dx by adaptive Simpson quadrature.
double gaussian_mass_one_sigma();

struct BernoulliBound {
  int n = 0;
  double value = 0.0;       // b^n(sqrt n)
  double limit = 0.0;       // Gaussian reference
  double c_observed = 0.0;  // max_{2 <= m <= n} b^m(sqrt m)
  int argmax = 0;
};
BernoulliBound bernoulli_bound(int n);

/// Certified lower bound on lambda_1(G, T).
struct LambdaLower {
  double value = 0.0;
  std::string route;  // "real", "distortion" or "delta"
};
LambdaLower lambda_lower_real(const graph::Graph& g);
/// lambda_1(G, R) / D^2.
LambdaLower lambda_lower_distortion(const graph::Graph& g, double distortion);
/// (1 - delta) lambda_1(G, R).
LambdaLower lambda_lower_delta(const graph::Graph& g, double delta);

struct TransplantRow {
  int n = 0;
  double lhs = 0.0;  // E_{mu_G^n}(phi)
  double rhs = 0.0;  // (2 / lambda_lower) E_{mu_G}(phi)
};

struct TransplantCheck {
  LambdaLower lower;
  std::vector<TransplantRow> rows;
  bool holds(double tol = 1e-8) const;
};

/// E_{mu_G^n}(phi) <= (2 / lambda_lower) E_{mu_G}(phi) for n = 1..n_max.
template <class S>
TransplantCheck spectral_transplant_check(const graph::Graph& g, const S& space,
                                          std::span<const typename S::Point> phi, int n_max,
                                          const LambdaLower& lower) {
  require(n_max >= 1, "spectral_transplant_check: need n_max >= 1");
  require(lower.value > 0.0, "spectral_transplant_check: lower bound must be positive");
  const auto walk = graph::standard_walk(g);
  TransplantCheck out{lower, {}};
  const double e1 = energy::vertex_energy<S>(space, walk.mu, walk.nu, phi);
  graph::WalkKernel power = walk.mu;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) power = graph::convolve(power, walk.mu);
    out.rows.push_back({n, energy::vertex_energy<S>(space, power, walk.nu, phi), 2.0 / lower.value * e1});
  }
  return out;
}

/// Default for the absolute constant: 8 / (1 - C_observed), C_observed = 0.875.
double default_c_abs();

struct PipelineGraphCheck {
  int girth = 0;
  int diameter = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool girth_ok = false;   // girth >= g0
  bool degree_ok = false;  // min degree >= 2
  std::optional<double> spectral_gap;  // absent above the dense limit
  std::optional<bool> gap_ok;          // spectral_gap >= lambda0
  // Absent for forests.
  std::optional<double> diameter_girth_ratio;
  std::optional<std::uint64_t> short_paths;  // embedded paths of length < girth/2
  std::optional<double> path_growth;         // short_paths^(2/girth): least beta with count <= beta^(girth/2)
};

struct Pipeline {
  double lambda0 = 0.0;
  double c_abs = 0.0;
  int n = 0;                      // min{m : C/lambda0 < sqrt m}
  double eps = 0.0;               // sqrt n - C/lambda0
  std::int64_t g0 = 0;            // 2n
  std::optional<double> c_grad;   // 2 eps^2 / (n^2 (n-1)^2); absent for n = 1
  std::optional<PipelineGraphCheck> graph;
};

Pipeline fixed_point_pipeline(double lambda0, double c_abs,
                              const graph::Graph* g = nullptr);

struct ConcentrationReport {
  int trials = 0;
  int lower_events = 0;  // mu-bar^n_alpha >= mu-bar^n_G / 2 on the support
  int upper_events = 0;  // mu-bar^1_alpha <= mu_Gamma entrywise
  std::optional<double> lower_frequency;
  std::optional<double> upper_frequency;
};

ConcentrationReport concentration_experiment(const graph::Graph& g, int k, int n, int trials,
                                             std::uint64_t seed);

}  // namespace cat0lab::random_group

#endif  // CAT0LAB_RANDOM_GROUP_HPP_
