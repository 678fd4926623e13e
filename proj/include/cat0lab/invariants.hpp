//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_INVARIANTS_HPP_
#define CAT0LAB_INVARIANTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cat0lab/cat0/euclidean.hpp"
#include "cat0lab/cat0/graph_cone.hpp"
#include "cat0lab/cat0/metric_tree.hpp"
#include "cat0lab/cat0/pod.hpp"
#include "cat0lab/graph.hpp"
#include "cat0lab/random.hpp"

namespace cat0lab::invariants {

inline constexpr double kPsdTolerance = 1e-9;

/// Inner products on the vertex space of the generalized triangle G_r:
/// <e_i, e_j> = 1, 1/2, a, b at combinatorial distance 0, 1, 2, 3.
struct GramSpec {
  int r = 2;
  double a = 0.0;
  double b = 0.0;
};

Eigen::MatrixXd gram_matrix(const GramSpec& spec);

struct EigenvalueGroup {
  double value = 0.0;
  int multiplicity = 0;
};

/// The four closed-form eigenvalues of G_{a,b}:
/// (r^2+r+1)(a +- b) + (1-a) +- (1/2-b)(r+1), each once, and
/// (1-a) +- (1/2-b) sqrt(r), each r^2+r times.
std::vector<EigenvalueGroup> gram_formula(const GramSpec& spec);

struct GramSpectrum {
  Eigen::VectorXd numeric;  // ascending
  std::vector<EigenvalueGroup> formula;
  double max_defect = 0.0;  // sorted numeric vs sorted formula multiset
  double trace = 0.0;
};

/// Eigensolve plus the closed-form check; a defect above `tol` throws a
/// discrepancy error.
GramSpectrum gram_eigenvalues(const GramSpec& spec, double tol = 1e-8);

double min_gram_eigenvalue(const GramSpec& spec);
bool is_psd(const GramSpec& spec);
/// Uniform (a, b) in [-1/2, 1]^2 conditioned on G_{a,b} being PSD.
GramSpec random_psd_spec(int r, Rng& rng);

/// max{sqrt(3 / (2 - 2a)), sqrt(2 / (1 - b))}: the worst ratio of cone
/// distance to embedded distance, attained at vertices two and three apart.
double iota_distortion(double a, double b);

struct OptimalAB {
  double a = 0.0;
  double b = 0.0;
  double distortion = 0.0;       // 2r / sqrt((r+1)(r+sqrt r))
  double formula_distortion = 0.0;  // iota_distortion(a, b)
  int w_dimension = 0;           // number of positive eigenvalues
  double min_eigenvalue = 0.0;
};

/// a* = (r-1-sqrt r)/(2r), b* = (r^2-r-(r+1)sqrt r)/(2r^2) and both
/// distortion expressions, without the eigensolve (usable for large r).
OptimalAB optimal_ab_formula(int r);
/// optimal_ab_formula plus certification. Throws a
/// discrepancy error unless G_{a*,b*} is PSD, dim W = r^2+r+1, the two
/// distortion expressions agree to 1e-10 and D* < 2.
OptimalAB optimal_ab(int r);

/// Columns x_i with x_i . x_j = G_ij, keeping positive eigenvalues only.
/// Throws a precondition error when min eigenvalue < -1e-9.
Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& gram);

/// Radial map of the cone over a metric graph: vertex directions go to unit
/// vectors, and a direction at arc length th along an edge of length L goes
/// to (sin(L - th) x_u + sin(th) x_v) / sin L, which is an isometry of the
/// edge sector when x_u . x_v = cos L.
class ConeEmbedding {
 public:
  ConeEmbedding(cat0::GraphCone cone, Eigen::MatrixXd vertex_vectors);

  const cat0::GraphCone& cone() const { return cone_; }
  int dimension() const { return static_cast<int>(vectors_.rows()); }
  const Eigen::MatrixXd& vertex_vectors() const { return vectors_; }

  Eigen::VectorXd direction(const cat0::Position& u) const;
  Eigen::VectorXd operator()(const cat0::GraphCone::Point& v) const;

 private:
  cat0::GraphCone cone_;
  Eigen::MatrixXd vectors_;
};

/// The cone C(G_r) over the generalized triangle with edges of length pi/3.
cat0::GraphCone triangle_cone(int r);
/// iota_{a,b} into W_{a,b}; rejects non-PSD specs.
ConeEmbedding iota_embedding(const GramSpec& spec);

/// Radial map of the (r+1)-pod: legs through the vertices of a regular
/// r-simplex centred at the origin of R^r.
struct PodEmbedding {
  cat0::Pod pod;
  Eigen::MatrixXd legs;  // r x (r+1), unit columns, pairwise -1/r

  Eigen::VectorXd operator()(const cat0::Pod::Point& v) const;
};
PodEmbedding pod_embedding(int r);
/// sqrt(2r / (r+1)).
double pod_distortion(int r);

/// Result of an exhaustive pair scan of a radial embedding.
struct DistortionScan {
  double max_ratio = 1.0;          // max d_T / |iota v - iota v'| over distinct pairs
  double lipschitz_excess = 0.0;   // max |iota v - iota v'| - d_T (must be <= 1e-10)
  double norm_defect = 0.0;        // max ||iota(u)| - 1| over directions
  std::size_t pairs = 0;
};

/// Scans all vertex-direction pairs of C(G) at the given radii.
DistortionScan scan_vertex_pairs(const ConeEmbedding& iota, const std::vector<double>& radii);
/// Also includes `per_edge` interior directions on every edge.
DistortionScan scan_grid(const ConeEmbedding& iota, int per_edge, const std::vector<double>& radii);
DistortionScan scan_pod(const PodEmbedding& iota, const std::vector<double>& radii);

/// |mean_i iota(e_i)|^2 / mean_i |iota(e_i)|^2 = 1^T G 1 / N^2 for the
/// uniform measure mu_0 on the vertices of G_r.
double delta_mu0_bound(const GramSpec& spec);
/// (sqrt r - 1)^2 / (2 (r - sqrt r + 1)).
double delta_mu0_formula(int r);

struct DeltaMu0 {
  double bound = 0.0;    // via iota_{a*,b*}
  double formula = 0.0;
};
/// Throws a discrepancy error when the two differ by more than 1e-10.
DeltaMu0 delta_mu0(int r);

/// 1 - 1/D^2 for D >= 1.
double delta_from_distortion(double distortion);

/// Distances between the vertices of a chamber of the spherical building of
/// PGL(n+1, F_r) in its cone: sqrt(2 - 2 sqrt(i(n+1-j) / (j(n+1-i)))).
struct BuildingSpec {
  int n = 1;
  int r = 2;
};

struct ChamberDistance {
  int i = 0;
  int j = 0;
  double distance = 0.0;
};

struct BuildingDistances {
  std::vector<ChamberDistance> table;
  double d_min = 0.0;          // the case-split closed form
  std::optional<double> table_min;  // absent for n = 1 (no pairs)
};

double building_d_min(int n);
BuildingDistances building_distances(const BuildingSpec& spec);

struct BuildingBounds {
  int n = 0;
  int r = 0;
  double d_min = 0.0;
  double distortion = 0.0;  // 2 / d_min
  double delta = 0.0;       // 1 - (d_min / 2)^2
  /// n = 2 only: the regular-simplex embedding at mutual distance d_min = 1
  /// scanned on all vertex pairs.
  std::optional<DistortionScan> certificate;
};

inline constexpr int kMaxCertificateR = 5;

BuildingBounds building_bounds(const BuildingSpec& spec);
/// Header n,r,d_min,distortion_bound,delta_bound.
std::string building_bounds_csv(const std::vector<BuildingBounds>& rows);

/// Target of the Rayleigh-quotient search.
struct WangOptions {
  int restarts = 4;
  std::uint64_t seed = 1;
  int max_sweeps = 400;
  double min_step = 1e-7;
  /// Certificates giving lower bounds on the Wang invariant.
  std::optional<double> distortion;
  std::optional<double> delta;
};

template <class P>
struct WangEstimate {
  double value = 0.0;         // best RQ found (an upper bound)
  std::vector<P> witness;
  double lambda_real = 0.0;   // lambda_1(G, R)
  std::optional<double> distortion_lower;  // lambda_real / D^2
  std::optional<double> delta_lower;       // (1 - delta) lambda_real
  bool budget_exhausted = false;
  bool consistent = true;     // value >= every lower bound - 1e-6
};

/// Multi-start coordinate descent on RQ: the Fiedler vector mapped onto a
/// geodesic of T seeds the first start, random maps the rest; each sweep
/// moves one vertex image at a time toward the best of a set of anchor
/// points, shrinking the step when no move helps.
WangEstimate<Eigen::VectorXd> wang_estimate(const graph::Graph& g, const cat0::Euclidean& t,
                                           const WangOptions& options = {});
WangEstimate<cat0::Pod::Point> wang_estimate(const graph::Graph& g, const cat0::Pod& t,
                                            const WangOptions& options = {});
WangEstimate<cat0::Position> wang_estimate(const graph::Graph& g, const cat0::MetricTree& t,
                                          const WangOptions& options = {});
WangEstimate<cat0::GraphCone::Point> wang_estimate(const graph::Graph& g, const cat0::GraphCone& t,
                                                  const WangOptions& options = {});

inline constexpr int kMaxWangVertices = 200;

}  // namespace cat0lab::invariants

#endif  // CAT0LAB_INVARIANTS_HPP_
