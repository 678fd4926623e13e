//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_GRAPH_HPP_
#define CAT0LAB_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cat0lab::graph {

struct Edge {
  int u = 0;
  int v = 0;
  double length = 1.0;
};

struct Incidence {
  int to;
  int edge;
};

struct GraphOptions {
  bool allow_multi_edges = false;
  bool allow_self_loops = false;
};

/// Finite connected graph. Immutable after construction; the constructor
/// checks connectivity and computes the degree table.
class Graph {
 public:
  /// Validates and builds a graph. When `vertex_count` is absent it is taken
  /// as one past the largest endpoint index.
  static Graph from_edges(std::vector<Edge> edges,
                          std::optional<int> vertex_count = std::nullopt,
                          GraphOptions options = {});
  static Graph from_pairs(const std::vector<std::pair<int, int>>& pairs,
                          std::optional<int> vertex_count = std::nullopt,
                          GraphOptions options = {});

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  std::span<const Incidence> incident(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int min_degree() const;
  int max_degree() const;
  bool is_multigraph() const { return multigraph_; }

  /// Id of an edge joining u and v, if any.
  std::optional<int> find_edge(int u, int v) const;

  /// Hop distances from `source` (BFS).
  std::vector<int> bfs_distances(int source) const;
  /// All-pairs hop distances.
  std::vector<std::vector<int>> hop_distances() const;
  /// All-pairs shortest-path distances using edge lengths.
  std::vector<std::vector<double>> metric_distances() const;

  bool is_bipartite() const;
  bool is_tree() const { return edge_count() == vertex_count() - 1; }

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  bool multigraph_ = false;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct GirthDiameter {
  int girth;  // kInfiniteGirth for forests
  int diameter;
};

GirthDiameter girth_and_diameter(const Graph& g);
int girth(const Graph& g);
/// Length of the shortest closed walk found by a BFS rooted at `root`; equals
/// the girth whenever `root` lies on a shortest cycle (e.g. vertex-transitive
/// graphs).
int shortest_cycle_through(const Graph& g, int root);
int diameter(const Graph& g);

/// Replaces every edge by a path of `j` edges through `j - 1` new vertices.
/// New edges carry length / j. Original vertices keep their ids.
Graph subdivide(const Graph& g, int j);

/// Probability measure on vertices.
struct VertexMeasure {
  std::vector<double> weights;
};

/// Finitely supported Markov kernel on integer states, stored by rows.
class WalkKernel {
 public:
  using Row = std::vector<std::pair<int, double>>;  // sorted by state

  WalkKernel() = default;
  explicit WalkKernel(std::vector<Row> rows);

  int state_count() const { return static_cast<int>(rows_.size()); }
  const Row& row(int u) const { return rows_[u]; }
  double operator()(int u, int v) const;

  Eigen::MatrixXd dense() const;

  /// Largest |row sum - 1|.
  double row_sum_defect() const;
  /// Largest |nu(u) k(u,v) - nu(v) k(v,u)|.
  double detailed_balance_defect(const VertexMeasure& nu) const;

 private:
  std::vector<Row> rows_;
};

/// (k * l)(u, w) = sum_v k(u, v) l(v, w).
WalkKernel convolve(const WalkKernel& k, const WalkKernel& l);
WalkKernel kernel_power(const WalkKernel& k, int n);

struct StandardWalk {
  WalkKernel mu;
  VertexMeasure nu;
};

/// mu_G(u, v) = (edges uv) / deg(u); nu_G(u) = deg(u) / 2|E|.
StandardWalk standard_walk(const Graph& g);

inline constexpr int kMaxDenseVertices = 4000;

/// Spectrum of the Laplacian I - mu_G, ascending, via the symmetrized
/// operator D^{1/2} (I - mu_G) D^{-1/2}.
Eigen::VectorXd laplacian_spectrum(const Graph& g);
/// Second-smallest Laplacian eigenvalue and a nu_G-orthogonal eigenfunction.
struct SpectralGap {
  double value;
  Eigen::VectorXd eigenfunction;  // nonconstant real function on V
};
SpectralGap spectral_gap(const Graph& g);
double spectral_gap_real(const Graph& g);
/// Ascending adjacency spectrum (multi-edges counted).
Eigen::VectorXd adjacency_spectrum(const Graph& g);

/// Rayleigh quotient of a real function: the standard 1-step energy over the
/// nu_G-variance.
double rayleigh_quotient(const Graph& g, std::span<const double> phi);

/// Number of simple paths with 1 <= length < max_length, counted as vertex
/// sequences up to reversal. Throws kSize on accumulator overflow.
std::uint64_t count_embedded_paths(const Graph& g, int max_length);

// Named small graphs used throughout the tests and the CLI.
Graph triangle();
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen();

}  // namespace cat0lab::graph

#endif  // CAT0LAB_GRAPH_HPP_
