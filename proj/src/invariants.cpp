//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "cat0lab/cat0/sampling.hpp"
#include "cat0lab/energy/energy.hpp"
#include "cat0lab/error.hpp"
#include "cat0lab/random.hpp"
#include "cat0lab/special_graphs.hpp"

namespace cat0lab::invariants {

namespace {

constexpr double kPi = std::numbers::pi;

void check_prime(int r) {
  require(special::is_prime(r), "invariants: r must be prime");
}

}  // namespace

Eigen::MatrixXd gram_matrix(const GramSpec& spec) {
  check_prime(spec.r);
  const auto gt = special::generalized_triangle(spec.r);
  const auto hops = gt.graph.hop_distances();
  const int n = gt.graph.vertex_count();
  const double by_distance[4] = {1.0, 0.5, spec.a, spec.b};
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int d = hops[i][j];
      if (d > 3) fail(ErrorKind::kDiscrepancy, "gram_matrix: generalized triangle has diameter > 3");
      g(i, j) = by_distance[d];
    }
  }
  return g;
}

std::vector<EigenvalueGroup> gram_formula(const GramSpec& spec) {
  const double r = spec.r;
  const double big = r * r + r + 1.0;
  const double mult = r * r + r;
  return {
      {big * (spec.a + spec.b) + (1.0 - spec.a) + (0.5 - spec.b) * (r + 1.0), 1},
      {big * (spec.a - spec.b) + (1.0 - spec.a) - (0.5 - spec.b) * (r + 1.0), 1},
      {(1.0 - spec.a) + (0.5 - spec.b) * std::sqrt(r), static_cast<int>(mult)},
      {(1.0 - spec.a) - (0.5 - spec.b) * std::sqrt(r), static_cast<int>(mult)},
  };
}

GramSpectrum gram_eigenvalues(const GramSpec& spec, double tol) {
  const Eigen::MatrixXd g = gram_matrix(spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g, Eigen::EigenvaluesOnly);
  GramSpectrum out;
  out.numeric = eig.eigenvalues();
  out.formula = gram_formula(spec);
  out.trace = g.trace();
  std::vector<double> expected;
  for (const auto& group : out.formula) expected.insert(expected.end(), group.multiplicity, group.value);
  std::sort(expected.begin(), expected.end());
  if (static_cast<int>(expected.size()) != out.numeric.size()) {
    fail(ErrorKind::kDiscrepancy, "gram_eigenvalues: multiplicities do not add up to N");
  }
  for (int i = 0; i < out.numeric.size(); ++i) {
    out.max_defect = std::max(out.max_defect, std::abs(out.numeric[i] - expected[i]));
  }
  if (out.max_defect > tol) {
    std::ostringstream msg;
    msg << "gram_eigenvalues: closed form off by " << out.max_defect << " for r=" << spec.r
        << " a=" << spec.a << " b=" << spec.b;
    fail(ErrorKind::kDiscrepancy, msg.str());
  }
  return out;
}

double min_gram_eigenvalue(const GramSpec& spec) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_matrix(spec), Eigen::EigenvaluesOnly);
  return eig.eigenvalues()[0];
}

bool is_psd(const GramSpec& spec) { return min_gram_eigenvalue(spec) >= -kPsdTolerance; }

GramSpec random_psd_spec(int r, Rng& rng) {
  for (;;) {
    const GramSpec spec{r, uniform(rng, -0.5, 1.0), uniform(rng, -0.5, 1.0)};
    if (is_psd(spec)) return spec;
  }
}

double iota_distortion(double a, double b) {
  require(a < 1.0 && b < 1.0, "iota_distortion: need a, b < 1");
  return std::max(std::sqrt(3.0 / (2.0 - 2.0 * a)), std::sqrt(2.0 / (1.0 - b)));
}

OptimalAB optimal_ab_formula(int r) {
  check_prime(r);
  const double rr = r;
  const double sr = std::sqrt(rr);
  OptimalAB out;
  out.a = (rr - 1.0 - sr) / (2.0 * rr);
  out.b = (rr * rr - rr - (rr + 1.0) * sr) / (2.0 * rr * rr);
  out.distortion = 2.0 * rr / std::sqrt((rr + 1.0) * (rr + sr));
  out.formula_distortion = iota_distortion(out.a, out.b);
  return out;
}

OptimalAB optimal_ab(int r) {
  OptimalAB out = optimal_ab_formula(r);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_matrix({r, out.a, out.b}),
                                                     Eigen::EigenvaluesOnly);
  out.min_eigenvalue = eig.eigenvalues()[0];
  for (int i = 0; i < eig.eigenvalues().size(); ++i) out.w_dimension += eig.eigenvalues()[i] > kPsdTolerance;
  if (out.min_eigenvalue < -kPsdTolerance) {
    fail(ErrorKind::kDiscrepancy, "optimal_ab: G_{a*,b*} is not positive semidefinite");
  }
  if (out.w_dimension != r * r + r + 1) {
    fail(ErrorKind::kDiscrepancy, "optimal_ab: dim W_{a*,b*} differs from r^2+r+1");
  }
  if (std::abs(out.distortion - out.formula_distortion) > 1e-10) {
    fail(ErrorKind::kDiscrepancy, "optimal_ab: minimum distortion disagrees with its closed form");
  }
  if (out.distortion >= 2.0) fail(ErrorKind::kDiscrepancy, "optimal_ab: distortion not below 2");
  return out;
}

Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  require(lambda[0] >= -kPsdTolerance, "psd_factor: Gram matrix is not positive semidefinite");
  std::vector<int> keep;
  for (int i = 0; i < lambda.size(); ++i) {
    if (lambda[i] > kPsdTolerance) keep.push_back(i);
  }
  Eigen::MatrixXd x(keep.size(), gram.rows());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    x.row(k) = std::sqrt(lambda[keep[k]]) * eig.eigenvectors().col(keep[k]).transpose();
  }
  return x;
}

ConeEmbedding::ConeEmbedding(cat0::GraphCone cone, Eigen::MatrixXd vertex_vectors)
    : cone_(std::move(cone)), vectors_(std::move(vertex_vectors)) {
  const graph::Graph& s = cone_.directions().graph();
  require(vectors_.cols() == s.vertex_count(), "cone embedding: one vector per vertex");
  for (int e = 0; e < s.edge_count(); ++e) {
    const graph::Edge& edge = s.edge(e);
    require(edge.length < kPi, "cone embedding: edges must be shorter than pi");
    const double c = vectors_.col(edge.u).dot(vectors_.col(edge.v));
    require(std::abs(c - std::cos(edge.length)) <= 1e-9,
            "cone embedding: adjacent vectors must meet at the edge angle");
  }
}

Eigen::VectorXd ConeEmbedding::direction(const cat0::Position& u) const {
  cone_.directions().check(u);
  const graph::Edge& edge = cone_.directions().graph().edge(u.edge);
  const double len = edge.length;
  return (std::sin(len - u.offset) * vectors_.col(edge.u) + std::sin(u.offset) * vectors_.col(edge.v)) /
         std::sin(len);
}

Eigen::VectorXd ConeEmbedding::operator()(const cat0::GraphCone::Point& v) const {
  if (v.radius == 0.0) return Eigen::VectorXd::Zero(dimension());
  return v.radius * direction(v.direction);
}

cat0::GraphCone triangle_cone(int r) { return cat0::GraphCone(special::generalized_triangle(r).graph); }

ConeEmbedding iota_embedding(const GramSpec& spec) {
  return ConeEmbedding(triangle_cone(spec.r), psd_factor(gram_matrix(spec)));
}

Eigen::VectorXd PodEmbedding::operator()(const cat0::Pod::Point& v) const {
  return v.radius * legs.col(v.leg);
}

PodEmbedding pod_embedding(int r) {
  require(r >= 1, "pod_embedding: need r >= 1");
  // Gram matrix of r+1 unit vectors with pairwise inner product -1/r.
  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(r + 1, r + 1, -1.0 / r);
  g.diagonal().setOnes();
  return {cat0::Pod(r + 1), psd_factor(g)};
}

double pod_distortion(int r) {
  require(r >= 1, "pod_distortion: need r >= 1");
  return std::sqrt(2.0 * r / (r + 1.0));
}

namespace {

template <class P, class Dist, class Map>
DistortionScan scan_pairs(const std::vector<P>& directions, const std::vector<double>& radii,
                          Dist dist, Map map) {
  DistortionScan out;
  std::vector<Eigen::VectorXd> unit;
  for (const P& u : directions) {
    unit.push_back(map(u, 1.0));
    out.norm_defect = std::max(out.norm_defect, std::abs(unit.back().norm() - 1.0));
  }
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (std::size_t j = 0; j < directions.size(); ++j) {
      for (double t : radii) {
        for (double s : radii) {
          const double d = dist(directions[i], t, directions[j], s);
          const double e = (t * unit[i] - s * unit[j]).norm();
          ++out.pairs;
          out.lipschitz_excess = std::max(out.lipschitz_excess, e - d);
          if (d > 1e-12) out.max_ratio = std::max(out.max_ratio, d / e);
        }
      }
    }
  }
  return out;
}

DistortionScan scan_cone(const ConeEmbedding& iota, const std::vector<cat0::Position>& dirs,
                         const std::vector<double>& radii) {
  const auto& cone = iota.cone();
  return scan_pairs(
      dirs, radii,
      [&](const cat0::Position& u, double t, const cat0::Position& w, double s) {
        return cone.distance({u, t}, {w, s});
      },
      [&](const cat0::Position& u, double t) { return iota({u, t}); });
}

}  // namespace

DistortionScan scan_vertex_pairs(const ConeEmbedding& iota, const std::vector<double>& radii) {
  std::vector<cat0::Position> dirs;
  const auto& metric = iota.cone().directions();
  for (int v = 0; v < metric.graph().vertex_count(); ++v) dirs.push_back(metric.vertex(v));
  return scan_cone(iota, dirs, radii);
}

DistortionScan scan_grid(const ConeEmbedding& iota, int per_edge, const std::vector<double>& radii) {
  require(per_edge >= 0, "scan_grid: per_edge must be nonnegative");
  std::vector<cat0::Position> dirs;
  const auto& metric = iota.cone().directions();
  for (int v = 0; v < metric.graph().vertex_count(); ++v) dirs.push_back(metric.vertex(v));
  for (int e = 0; e < metric.graph().edge_count(); ++e) {
    for (int k = 1; k <= per_edge; ++k) dirs.push_back({e, metric.length(e) * k / (per_edge + 1.0)});
  }
  return scan_cone(iota, dirs, radii);
}

DistortionScan scan_pod(const PodEmbedding& iota, const std::vector<double>& radii) {
  std::vector<int> legs(iota.pod.legs());
  for (int i = 0; i < iota.pod.legs(); ++i) legs[i] = i;
  return scan_pairs(
      legs, radii,
      [&](int u, double t, int w, double s) { return iota.pod.distance({u, t}, {w, s}); },
      [&](int u, double t) { return iota({u, t}); });
}

double delta_mu0_bound(const GramSpec& spec) {
  const Eigen::MatrixXd g = gram_matrix(spec);
  const double n = static_cast<double>(g.rows());
  return g.sum() / (n * n);
}

double delta_mu0_formula(int r) {
  check_prime(r);
  const double sr = std::sqrt(static_cast<double>(r));
  return (sr - 1.0) * (sr - 1.0) / (2.0 * (r - sr + 1.0));
}

DeltaMu0 delta_mu0(int r) {
  const OptimalAB opt = optimal_ab(r);
  DeltaMu0 out{delta_mu0_bound({r, opt.a, opt.b}), delta_mu0_formula(r)};
  if (std::abs(out.bound - out.formula) > 1e-10) {
    fail(ErrorKind::kDiscrepancy, "delta_mu0: Gram mean disagrees with the closed form");
  }
  return out;
}

double delta_from_distortion(double distortion) {
  require(distortion >= 1.0, "delta_from_distortion: distortion must be >= 1");
  return 1.0 - 1.0 / (distortion * distortion);
}

double building_d_min(int n) {
  require(n >= 1, "building: need n >= 1");
  if (n % 2 == 1) return std::sqrt(2.0 - 2.0 * std::sqrt((n - 1.0) / (n + 3.0)));
  return 2.0 / std::sqrt(n + 2.0);
}

BuildingDistances building_distances(const BuildingSpec& spec) {
  require(spec.n >= 1, "building: need n >= 1");
  BuildingDistances out;
  const int n = spec.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double ratio = static_cast<double>(i) * (n + 1 - j) / (static_cast<double>(j) * (n + 1 - i));
      const double d = std::sqrt(2.0 - 2.0 * std::sqrt(ratio));
      out.table.push_back({i, j, d});
      out.table_min = std::min(out.table_min.value_or(d), d);
    }
  }
  out.d_min = building_d_min(n);
  return out;
}

BuildingBounds building_bounds(const BuildingSpec& spec) {
  require(special::is_prime(spec.r), "building: r must be prime");
  BuildingBounds out;
  out.n = spec.n;
  out.r = spec.r;
  out.d_min = building_d_min(spec.n);
  out.distortion = 2.0 / out.d_min;
  out.delta = 1.0 - 0.25 * out.d_min * out.d_min;
  if (spec.n == 2 && spec.r <= kMaxCertificateR) {
    // Unit vectors at mutual distance d_min = 1 have pairwise inner product
    // 1/2, which is iota_{1/2,1/2}.
    out.certificate = scan_vertex_pairs(iota_embedding({spec.r, 0.5, 0.5}), {0.0, 0.5, 1.0, 2.0});
  }
  return out;
}

std::string building_bounds_csv(const std::vector<BuildingBounds>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "n,r,d_min,distortion_bound,delta_bound\n";
  for (const auto& b : rows) {
    out << b.n << ',' << b.r << ',' << b.d_min << ',' << b.distortion << ',' << b.delta << '\n';
  }
  return out.str();
}

namespace {

template <class S>
struct Target {
  const S& space;
  std::vector<typename S::Point> anchors;
  std::function<typename S::Point(double)> line;  // x in [-1, 1]
};

template <class S>
double rq(const S& space, const graph::StandardWalk& walk, const std::vector<typename S::Point>& phi) {
  const double energy = energy::vertex_energy<S>(space, walk.mu, walk.nu, phi);
  const auto bar = space.barycenter(phi, walk.nu.weights);
  double spread = 0.0;
  for (std::size_t u = 0; u < phi.size(); ++u) {
    const double d = space.distance(phi[u], bar);
    spread += walk.nu.weights[u] * d * d;
  }
  if (spread < 1e-20) return std::numeric_limits<double>::infinity();
  return energy / spread;
}

template <class S>
WangEstimate<typename S::Point> wang_search(const graph::Graph& g, const Target<S>& target,
                                            const WangOptions& options) {
  using P = typename S::Point;
  require(g.vertex_count() <= kMaxWangVertices, "wang_estimate: more than 200 vertices");
  require(options.restarts >= 1, "wang_estimate: need at least one start");
  const auto walk = graph::standard_walk(g);
  const auto gap = graph::spectral_gap(g);

  WangEstimate<P> out;
  out.lambda_real = gap.value;
  out.value = std::numeric_limits<double>::infinity();
  const int n = g.vertex_count();

  for (int start = 0; start < options.restarts; ++start) {
    Rng rng(derive_seed(options.seed, start));
    std::vector<P> phi;
    if (start == 0) {
      const double scale = gap.eigenfunction.cwiseAbs().maxCoeff();
      for (int u = 0; u < n; ++u) phi.push_back(target.line(gap.eigenfunction[u] / scale));
    } else {
      for (int u = 0; u < n; ++u) phi.push_back(cat0::random_point(target.space, rng));
    }
    double value = rq(target.space, walk, phi);
    double step = 0.5;
    int sweeps = 0;
    while (step >= options.min_step) {
      if (sweeps++ >= options.max_sweeps) {
        out.budget_exhausted = true;
        break;
      }
      bool improved = false;
      for (int u = 0; u < n; ++u) {
        std::vector<P> toward = target.anchors;
        for (const graph::Incidence& inc : g.incident(u)) toward.push_back(phi[inc.to]);
        const P here = phi[u];
        P best = here;
        double best_value = value;
        for (const P& a : toward) {
          phi[u] = target.space.geodesic_point(here, a, step);
          const double v = rq(target.space, walk, phi);
          if (v < best_value - 1e-15 * std::abs(best_value)) {
            best_value = v;
            best = phi[u];
          }
        }
        phi[u] = best;
        if (best_value < value) {
          value = best_value;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    if (value < out.value) {
      out.value = value;
      out.witness = phi;
    }
  }
  if (options.distortion) {
    require(*options.distortion >= 1.0, "wang_estimate: distortion must be >= 1");
    out.distortion_lower = out.lambda_real / (*options.distortion * *options.distortion);
    out.consistent = out.consistent && out.value >= *out.distortion_lower - 1e-6;
  }
  if (options.delta) {
    require(*options.delta >= 0.0 && *options.delta <= 1.0, "wang_estimate: delta must lie in [0, 1]");
    out.delta_lower = (1.0 - *options.delta) * out.lambda_real;
    out.consistent = out.consistent && out.value >= *out.delta_lower - 1e-6;
  }
  return out;
}

}  // namespace

WangEstimate<Eigen::VectorXd> wang_estimate(const graph::Graph& g, const cat0::Euclidean& t,
                                           const WangOptions& options) {
  Target<cat0::Euclidean> target{t, {t.origin()}, nullptr};
  for (int i = 0; i < t.dimension(); ++i) {
    for (double sign : {2.0, -2.0}) {
      Eigen::VectorXd a = t.origin();
      a[i] = sign;
      target.anchors.push_back(a);
    }
  }
  target.line = [&t](double x) {
    Eigen::VectorXd p = t.origin();
    p[0] = x;
    return p;
  };
  return wang_search(g, target, options);
}

WangEstimate<cat0::Pod::Point> wang_estimate(const graph::Graph& g, const cat0::Pod& t,
                                            const WangOptions& options) {
  Target<cat0::Pod> target{t, {t.origin()}, nullptr};
  for (int j = 0; j < t.legs(); ++j) target.anchors.push_back({j, 2.0});
  const int other = t.legs() >= 2 ? 1 : 0;
  target.line = [other](double x) {
    if (other == 0) return cat0::Pod::Point{0, x + 1.0};
    return x >= 0.0 ? cat0::Pod::Point{0, x} : cat0::Pod::Point{1, -x};
  };
  return wang_search(g, target, options);
}

WangEstimate<cat0::Position> wang_estimate(const graph::Graph& g, const cat0::MetricTree& t,
                                          const WangOptions& options) {
  Target<cat0::MetricTree> target{t, {}, nullptr};
  const int nv = t.graph().vertex_count();
  for (int v = 0; v < nv; ++v) target.anchors.push_back(t.vertex(v));
  int a = 0;
  int b = 0;
  for (int u = 0; u < nv; ++u) {
    for (int v = 0; v < nv; ++v) {
      if (t.metric().vertex_distance(u, v) > t.metric().vertex_distance(a, b)) {
        a = u;
        b = v;
      }
    }
  }
  const double diam = t.metric().vertex_distance(a, b);
  target.line = [&t, a, b, diam](double x) {
    return t.metric().along(t.vertex(a), t.vertex(b), 0.5 * (x + 1.0) * diam);
  };
  return wang_search(g, target, options);
}

WangEstimate<cat0::GraphCone::Point> wang_estimate(const graph::Graph& g, const cat0::GraphCone& t,
                                                  const WangOptions& options) {
  Target<cat0::GraphCone> target{t, {t.origin()}, nullptr};
  const auto& metric = t.directions();
  const int nv = metric.graph().vertex_count();
  for (int v = 0; v < nv; ++v) target.anchors.push_back(t.vertex_point(v, 2.0));
  int a = 0;
  int b = 0;
  for (int u = 0; u < nv; ++u) {
    for (int v = 0; v < nv; ++v) {
      if (metric.vertex_distance(u, v) > metric.vertex_distance(a, b)) {
        a = u;
        b = v;
      }
    }
  }
  target.line = [&t, a, b](double x) {
    return x >= 0.0 ? t.vertex_point(a, x) : t.vertex_point(b, -x);
  };
  return wang_search(g, target, options);
}

}  // namespace cat0lab::invariants
