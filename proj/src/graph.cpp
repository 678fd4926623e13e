//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "cat0lab/error.hpp"

namespace cat0lab::graph {

Graph Graph::from_edges(std::vector<Edge> edges, std::optional<int> vertex_count,
                        GraphOptions options) {
  require(!edges.empty(), "graph: empty edge list");
  int n = 0;
  for (const Edge& e : edges) {
    require(e.u >= 0 && e.v >= 0, "graph: negative vertex index");
    require(e.length > 0 && std::isfinite(e.length),
            "graph: edge lengths must be positive and finite");
    n = std::max({n, e.u + 1, e.v + 1});
  }
  if (vertex_count) {
    require(*vertex_count >= n, "graph: edge endpoint exceeds vertex count");
    n = *vertex_count;
  }

  Graph g;
  g.adjacency_.resize(n);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const int id = static_cast<int>(i);
    if (e.u == e.v) {
      require(options.allow_self_loops,
              "graph: self-loop at vertex " + std::to_string(e.u));
      g.adjacency_[e.u].push_back({e.u, id});
      g.adjacency_[e.u].push_back({e.u, id});
      g.multigraph_ = true;
      continue;
    }
    const auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      require(options.allow_multi_edges,
              "graph: duplicate edge " + std::to_string(key.first) + "-" +
                  std::to_string(key.second));
      g.multigraph_ = true;
    }
    g.adjacency_[e.u].push_back({e.v, id});
    g.adjacency_[e.v].push_back({e.u, id});
  }
  g.edges_ = std::move(edges);

  // Connectivity; name one vertex per component on failure.
  std::vector<int> component(n, -1);
  int components = 0;
  std::vector<int> representatives;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    representatives.push_back(s);
    std::vector<int> stack{s};
    component[s] = components;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.adjacency_[u]) {
        if (component[inc.to] < 0) {
          component[inc.to] = components;
          stack.push_back(inc.to);
        }
      }
    }
    ++components;
  }
  if (components > 1) {
    std::ostringstream msg;
    msg << "graph: disconnected, " << components
        << " components; representative vertices:";
    for (int r : representatives) msg << ' ' << r;
    fail(ErrorKind::kPrecondition, msg.str());
  }
  return g;
}

Graph Graph::from_pairs(const std::vector<std::pair<int, int>>& pairs,
                        std::optional<int> vertex_count, GraphOptions options) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
  return from_edges(std::move(edges), vertex_count, options);
}

int Graph::min_degree() const {
  int d = std::numeric_limits<int>::max();
  for (int v = 0; v < vertex_count(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
  return d;
}

std::optional<int> Graph::find_edge(int u, int v) const {
  for (const Incidence& inc : adjacency_[u]) {
    if (inc.to == v) return inc.edge;
  }
  return std::nullopt;
}

std::vector<int> Graph::bfs_distances(int source) const {
  std::vector<int> dist(vertex_count(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const Incidence& inc : adjacency_[u]) {
      if (dist[inc.to] < 0) {
        dist[inc.to] = dist[u] + 1;
        queue.push(inc.to);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> Graph::hop_distances() const {
  std::vector<std::vector<int>> out;
  out.reserve(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) out.push_back(bfs_distances(v));
  return out;
}

std::vector<std::vector<double>> Graph::metric_distances() const {
  const int n = vertex_count();
  std::vector<std::vector<double>> out(
      n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
  using Item = std::pair<double, int>;
  for (int s = 0; s < n; ++s) {
    auto& dist = out[s];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0.0;
    heap.push({0.0, s});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (const Incidence& inc : adjacency_[u]) {
        const double nd = d + edges_[inc.edge].length;
        if (nd < dist[inc.to]) {
          dist[inc.to] = nd;
          heap.push({nd, inc.to});
        }
      }
    }
  }
  return out;
}

bool Graph::is_bipartite() const {
  std::vector<int> color(vertex_count(), -1);
  std::queue<int> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const Incidence& inc : adjacency_[u]) {
      if (color[inc.to] < 0) {
        color[inc.to] = 1 - color[u];
        queue.push(inc.to);
      } else if (color[inc.to] == color[u]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Shortest cycle through `root`, or shorter than `bound` if one exists.
int shortest_cycle_from(const Graph& g, int root, int bound) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<int> parent_edge(n, -1);
  std::queue<int> queue;
  dist[root] = 0;
  queue.push(root);
  int best = bound;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    if (2 * dist[u] + 1 >= best) break;
    for (const Incidence& inc : g.incident(u)) {
      if (inc.edge == parent_edge[u]) continue;
      if (dist[inc.to] < 0) {
        dist[inc.to] = dist[u] + 1;
        parent_edge[inc.to] = inc.edge;
        queue.push(inc.to);
      } else {
        best = std::min(best, dist[u] + dist[inc.to] + 1);
      }
    }
  }
  return best;
}

}  // namespace

int girth(const Graph& g) {
  if (!g.is_multigraph() && g.is_tree()) return kInfiniteGirth;
  int best = kInfiniteGirth;
  for (int v = 0; v < g.vertex_count(); ++v) {
    best = std::min(best, shortest_cycle_from(g, v, best));
  }
  return best;
}

int shortest_cycle_through(const Graph& g, int root) {
  return shortest_cycle_from(g, root, kInfiniteGirth);
}

int diameter(const Graph& g) {
  int diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto dist = g.bfs_distances(v);
    diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
  }
  return diam;
}

GirthDiameter girth_and_diameter(const Graph& g) {
  return {girth(g), diameter(g)};
}

Graph subdivide(const Graph& g, int j) {
  require(j >= 1, "subdivide: j must be positive");
  if (j == 1) return g;
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()) * j);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& old = g.edge(e);
    const double len = old.length / j;
    int prev = old.u;
    for (int t = 1; t < j; ++t) {
      const int mid = n + e * (j - 1) + (t - 1);
      edges.push_back({prev, mid, len});
      prev = mid;
    }
    edges.push_back({prev, old.v, len});
  }
  return Graph::from_edges(std::move(edges), n + (j - 1) * g.edge_count(),
                           {.allow_multi_edges = true, .allow_self_loops = false});
}

// ---------------------------------------------------------------------------
// Walk kernels

WalkKernel::WalkKernel(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (Row& row : rows_) std::sort(row.begin(), row.end());
}

double WalkKernel::operator()(int u, int v) const {
  const Row& row = rows_[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, -1.0));
  return (it != row.end() && it->first == v) ? it->second : 0.0;
}

Eigen::MatrixXd WalkKernel::dense() const {
  const int n = state_count();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (auto [v, p] : rows_[u]) m(u, v) += p;
  }
  return m;
}

double WalkKernel::row_sum_defect() const {
  double worst = 0.0;
  for (const Row& row : rows_) {
    double s = 0.0;
    for (const auto& entry : row) s += entry.second;
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

double WalkKernel::detailed_balance_defect(const VertexMeasure& nu) const {
  double worst = 0.0;
  for (int u = 0; u < state_count(); ++u) {
    for (auto [v, p] : rows_[u]) {
      worst = std::max(worst,
                       std::abs(nu.weights[u] * p - nu.weights[v] * (*this)(v, u)));
    }
  }
  return worst;
}

WalkKernel convolve(const WalkKernel& k, const WalkKernel& l) {
  require(k.state_count() == l.state_count(), "convolve: state sets differ");
  const int n = k.state_count();
  std::vector<WalkKernel::Row> rows(n);
  std::vector<double> acc(n, 0.0);
  std::vector<int> touched;
  for (int u = 0; u < n; ++u) {
    touched.clear();
    for (auto [v, p] : k.row(u)) {
      for (auto [w, q] : l.row(v)) {
        if (acc[w] == 0.0) touched.push_back(w);
        acc[w] += p * q;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int w : touched) {
      if (acc[w] != 0.0) rows[u].push_back({w, acc[w]});
      acc[w] = 0.0;
    }
  }
  return WalkKernel(std::move(rows));
}

WalkKernel kernel_power(const WalkKernel& k, int n) {
  require(n >= 1, "kernel_power: n must be positive");
  WalkKernel out = k;
  for (int i = 1; i < n; ++i) out = convolve(out, k);
  return out;
}

StandardWalk standard_walk(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<WalkKernel::Row> rows(n);
  VertexMeasure nu;
  nu.weights.resize(n);
  const double total = 2.0 * g.edge_count();
  for (int u = 0; u < n; ++u) {
    const double deg = g.degree(u);
    std::vector<std::pair<int, double>> row;
    for (const Incidence& inc : g.incident(u)) row.push_back({inc.to, 1.0 / deg});
    std::sort(row.begin(), row.end());
    // Merge parallel edges.
    for (auto& [v, p] : row) {
      if (!rows[u].empty() && rows[u].back().first == v) {
        rows[u].back().second += p;
      } else {
        rows[u].push_back({v, p});
      }
    }
    nu.weights[u] = deg / total;
  }
  return {WalkKernel(std::move(rows)), std::move(nu)};
}

namespace {

Eigen::MatrixXd symmetrized_walk(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxDenseVertices) {
    fail(ErrorKind::kSize, "eigensolve: " + std::to_string(n) +
                               " vertices exceeds dense limit " +
                               std::to_string(kMaxDenseVertices));
  }
  // D^{1/2} mu D^{-1/2} with D = diag(nu) has entries m_uv / sqrt(d_u d_v).
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (const Incidence& inc : g.incident(u)) {
      s(u, inc.to) += 1.0 / std::sqrt(double(g.degree(u)) * g.degree(inc.to));
    }
  }
  return s;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_checked(
    const Eigen::MatrixXd& m, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolve did not converge (n=" << m.rows() << ")";
    if (vectors) {
      const double residual =
          (m * solver.eigenvectors() -
           solver.eigenvectors() * solver.eigenvalues().asDiagonal())
              .norm();
      msg << ", residual " << residual;
    }
    fail(ErrorKind::kConvergence, msg.str());
  }
  return solver;
}

}  // namespace

Eigen::VectorXd laplacian_spectrum(const Graph& g) {
  const Eigen::MatrixXd s = symmetrized_walk(g);
  const Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(s.rows(), s.cols()) - s;
  return solve_checked(lap, false).eigenvalues();
}

SpectralGap spectral_gap(const Graph& g) {
  require(g.vertex_count() >= 2, "spectral_gap: need at least two vertices");
  const Eigen::MatrixXd s = symmetrized_walk(g);
  const Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(s.rows(), s.cols()) - s;
  const auto solver = solve_checked(lap, true);
  // Undo the similarity: phi = D^{-1/2} x.
  Eigen::VectorXd phi = solver.eigenvectors().col(1);
  for (int u = 0; u < g.vertex_count(); ++u) phi(u) /= std::sqrt(double(g.degree(u)));
  return {std::max(0.0, solver.eigenvalues()(1)), phi};
}

double spectral_gap_real(const Graph& g) { return spectral_gap(g).value; }

Eigen::VectorXd adjacency_spectrum(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxDenseVertices) fail(ErrorKind::kSize, "adjacency_spectrum: too large");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) += 1.0;
    if (e.u != e.v) a(e.v, e.u) += 1.0;
  }
  return solve_checked(a, false).eigenvalues();
}

double rayleigh_quotient(const Graph& g, std::span<const double> phi) {
  require(static_cast<int>(phi.size()) == g.vertex_count(),
          "rayleigh_quotient: function size mismatch");
  const double total = 2.0 * g.edge_count();
  double mean = 0.0;
  for (int u = 0; u < g.vertex_count(); ++u) mean += g.degree(u) * phi[u] / total;
  double num = 0.0;
  double den = 0.0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (const Incidence& inc : g.incident(u)) {
      const double d = phi[u] - phi[inc.to];
      num += d * d / total;  // nu(u) mu(u,v) = 1 / 2|E| per incidence
    }
    den += g.degree(u) / total * (phi[u] - mean) * (phi[u] - mean);
  }
  require(den > 0.0, "rayleigh_quotient: constant function");
  return 0.5 * num / den;
}

std::uint64_t count_embedded_paths(const Graph& g, int max_length) {
  require(max_length >= 1, "count_embedded_paths: max_length must be positive");
  const int n = g.vertex_count();
  // Distinct neighbours; parallel edges give the same vertex sequence.
  std::vector<std::vector<int>> nbrs(n);
  for (int u = 0; u < n; ++u) {
    for (const Incidence& inc : g.incident(u)) {
      if (inc.to != u) nbrs[u].push_back(inc.to);
    }
    std::sort(nbrs[u].begin(), nbrs[u].end());
    nbrs[u].erase(std::unique(nbrs[u].begin(), nbrs[u].end()), nbrs[u].end());
  }
  std::uint64_t directed = 0;
  std::vector<char> on_path(n, 0);
  // Iterative DFS over (vertex, next-neighbour index).
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    stack.assign(1, {s, 0});
    on_path[s] = 1;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      const int depth = static_cast<int>(stack.size()) - 1;  // edges so far
      if (depth + 1 >= max_length || idx >= nbrs[u].size()) {
        on_path[u] = 0;
        stack.pop_back();
        continue;
      }
      const int w = nbrs[u][idx++];
      if (on_path[w]) continue;
      if (__builtin_add_overflow(directed, std::uint64_t{1}, &directed)) {
        fail(ErrorKind::kSize, "count_embedded_paths: counter overflow");
      }
      on_path[w] = 1;
      stack.push_back({w, 0});
    }
  }
  return directed / 2;
}

Graph triangle() { return Graph::from_pairs({{0, 1}, {1, 2}, {2, 0}}); }

Graph complete_graph(int n) {
  require(n >= 2, "complete_graph: n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return Graph::from_pairs(pairs);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph: n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) pairs.push_back({u, (u + 1) % n});
  return Graph::from_pairs(pairs);
}

Graph path_graph(int n) {
  require(n >= 2, "path_graph: n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u + 1 < n; ++u) pairs.push_back({u, u + 1});
  return Graph::from_pairs(pairs);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star_graph: at least one leaf");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.push_back({0, i});
  return Graph::from_pairs(pairs);
}

Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.push_back({i, (i + 1) % 5});          // outer cycle
    pairs.push_back({i, i + 5});                // spokes
    pairs.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph::from_pairs(pairs);
}

}  // namespace cat0lab::graph
