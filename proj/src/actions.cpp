//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/energy/actions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cat0lab/error.hpp"

namespace cat0lab::energy {

EuclideanAction::EuclideanAction(std::vector<Eigen::MatrixXd> rotations,
                                 std::vector<Eigen::VectorXd> translations)
    : space_(rotations.empty() ? 1 : static_cast<int>(rotations[0].rows())),
      rotations_(std::move(rotations)),
      translations_(std::move(translations)) {
  require(!rotations_.empty() && rotations_.size() <= kMaxRank,
          "euclidean action: need 1..26 generators");
  require(rotations_.size() == translations_.size(),
          "euclidean action: rotation and translation counts differ");
  const int d = space_.dimension();
  for (std::size_t i = 0; i < rotations_.size(); ++i) {
    const Eigen::MatrixXd& q = rotations_[i];
    require(q.rows() == d && q.cols() == d && translations_[i].size() == d,
            "euclidean action: inconsistent dimensions");
    const double defect = (q.transpose() * q - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
    require(defect <= 1e-10, "euclidean action: linear part is not orthogonal");
  }
}

EuclideanAction EuclideanAction::integer_line(double u, double tau) {
  require(u == 1.0 || u == -1.0, "integer action: u must be +1 or -1");
  return EuclideanAction({Eigen::MatrixXd::Constant(1, 1, u)}, {Eigen::VectorXd::Constant(1, tau)});
}

EuclideanAction::Point EuclideanAction::apply(char c, const Point& x) const {
  const int i = generator_of(c);
  require(i < rank(), "euclidean action: letter beyond the rank");
  if (is_inverse_letter(c)) return rotations_[i].transpose() * (x - translations_[i]);
  return rotations_[i] * x + translations_[i];
}

Eigen::MatrixXd EuclideanAction::linear(char c) const {
  const int i = generator_of(c);
  require(i < rank(), "euclidean action: letter beyond the rank");
  return is_inverse_letter(c) ? Eigen::MatrixXd(rotations_[i].transpose()) : rotations_[i];
}

Eigen::MatrixXd EuclideanAction::averaging_operator() const {
  const int d = dimension();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (const auto& q : rotations_) m += q + q.transpose();
  return m / (2.0 * rank());
}

EuclideanAction::Point EuclideanAction::harmonic_basepoint() const {
  const int d = dimension();
  Eigen::VectorXd mean_b = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < rank(); ++i) {
    mean_b += translations_[i] - rotations_[i].transpose() * translations_[i];
  }
  mean_b /= 2.0 * rank();
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d) - averaging_operator();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  require(eig.eigenvalues().cwiseAbs().minCoeff() > 1e-10,
          "harmonic_basepoint: I - M is singular, no unique harmonic map");
  return eig.eigenvectors() *
         (eig.eigenvalues().cwiseInverse().asDiagonal() * (eig.eigenvectors().transpose() * mean_b));
}

Eigen::MatrixXd random_orthogonal(int d, Rng& rng) {
  Eigen::MatrixXd a(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) a(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

EuclideanAction random_euclidean_action(int k, int d, Rng& rng, double scale) {
  std::vector<Eigen::MatrixXd> rotations;
  std::vector<Eigen::VectorXd> translations;
  for (int i = 0; i < k; ++i) {
    rotations.push_back(random_orthogonal(d, rng));
    Eigen::VectorXd b(d);
    for (int j = 0; j < d; ++j) b[j] = scale * normal(rng);
    translations.push_back(b);
  }
  return EuclideanAction(std::move(rotations), std::move(translations));
}

TreeAction::TreeAction(cat0::MetricTree tree, std::vector<std::vector<int>> permutations)
    : tree_(std::move(tree)), forward_(std::move(permutations)) {
  require(!forward_.empty() && forward_.size() <= kMaxRank, "tree action: need 1..26 generators");
  const int n = tree_.graph().vertex_count();
  for (const auto& perm : forward_) {
    require(static_cast<int>(perm.size()) == n, "tree action: permutation of wrong size");
    std::vector<int> inv(n, -1);
    for (int v = 0; v < n; ++v) {
      require(perm[v] >= 0 && perm[v] < n && inv[perm[v]] < 0, "tree action: not a permutation");
      inv[perm[v]] = v;
    }
    backward_.push_back(inv);
    forward_edges_.push_back(edge_images(perm));
    backward_edges_.push_back(edge_images(inv));
  }
}

std::vector<TreeAction::EdgeImage> TreeAction::edge_images(const std::vector<int>& perm) const {
  const graph::Graph& g = tree_.graph();
  std::vector<EdgeImage> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const graph::Edge& edge = g.edge(e);
    const auto image = g.find_edge(perm[edge.u], perm[edge.v]);
    require(image.has_value(), "tree action: permutation is not a graph automorphism");
    require(std::abs(g.edge(*image).length - edge.length) <= 1e-12 * edge.length,
            "tree action: automorphism changes an edge length");
    out.push_back({*image, g.edge(*image).u != perm[edge.u]});
  }
  return out;
}

TreeAction::Point TreeAction::apply(char c, const Point& x) const {
  const int i = generator_of(c);
  require(i < rank(), "tree action: letter beyond the rank");
  tree_.metric().check(x);
  const EdgeImage& image = (is_inverse_letter(c) ? backward_edges_ : forward_edges_)[i][x.edge];
  const double len = tree_.metric().length(image.edge);
  return {image.edge, image.flipped ? len - x.offset : x.offset};
}

FixedSet TreeAction::fixed_set() const {
  const graph::Graph& g = tree_.graph();
  FixedSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool fixed = true;
    for (const auto& perm : forward_) fixed = fixed && perm[v] == v;
    if (fixed) out.vertices.push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    bool stable = true;
    bool flipped = false;
    for (const auto& images : forward_edges_) {
      stable = stable && images[e].edge == e;
      flipped = flipped || images[e].flipped;
    }
    if (!stable) continue;
    (flipped ? out.flipped_edges : out.edges).push_back(e);
  }
  return out;
}

TreeAction::Point TreeAction::fixed_point() const {
  const FixedSet fs = fixed_set();
  if (!fs.vertices.empty()) return tree_.vertex(fs.vertices.front());
  require(!fs.flipped_edges.empty(), "tree action: empty fixed set");
  const int e = fs.flipped_edges.front();
  return {e, 0.5 * tree_.metric().length(e)};
}

double TreeAction::distance_to_fixed_set(const Point& x) const {
  const FixedSet fs = fixed_set();
  require(!fs.empty(), "tree action: empty fixed set");
  if (std::find(fs.edges.begin(), fs.edges.end(), x.edge) != fs.edges.end()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int v : fs.vertices) best = std::min(best, tree_.metric().distance_to_vertex(x, v));
  for (int e : fs.flipped_edges) {
    best = std::min(best, tree_.distance(x, {e, 0.5 * tree_.metric().length(e)}));
  }
  return best;
}

SymmetricTree symmetric_tree(const std::vector<int>& branching, const std::vector<double>& lengths,
                             bool bicentral, double bridge) {
  require(!branching.empty() && branching.size() == lengths.size(),
          "symmetric_tree: need one length per level");
  for (std::size_t l = 0; l < branching.size(); ++l) {
    require(branching[l] >= 1 && lengths[l] > 0.0, "symmetric_tree: bad level");
  }
  require(bridge > 0.0, "symmetric_tree: bridge length must be positive");
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
  std::vector<graph::Edge> edges;
  const int copies = bicentral ? 2 : 1;
  int next = 0;
  for (int copy = 0; copy < copies; ++copy) {
    const int root = next++;
    roots.push_back(root);
    children.resize(next);
    std::vector<int> level{root};
    for (std::size_t l = 0; l < branching.size(); ++l) {
      std::vector<int> below;
      for (int x : level) {
        for (int j = 0; j < branching[l]; ++j) {
          const int c = next++;
          children.resize(next);
          children[x].push_back(c);
          edges.push_back({x, c, lengths[l]});
          below.push_back(c);
        }
      }
      level = std::move(below);
    }
  }
  if (bicentral) edges.push_back({roots[0], roots[1], bridge});
  return {graph::Graph::from_edges(std::move(edges), next), std::move(children), std::move(roots)};
}

std::vector<int> random_automorphism(const SymmetricTree& t, Rng& rng) {
  const int n = t.graph.vertex_count();
  std::vector<int> sigma(n, -1);
  std::vector<int> queue;
  if (t.roots.size() == 2 && uniform01(rng) < 0.5) {
    sigma[t.roots[0]] = t.roots[1];
    sigma[t.roots[1]] = t.roots[0];
  } else {
    for (int r : t.roots) sigma[r] = r;
  }
  queue = t.roots;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    const auto& from = t.children[x];
    const auto& to = t.children[sigma[x]];
    std::vector<int> order(from.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[uniform_index(rng, i)]);
    }
    for (std::size_t j = 0; j < from.size(); ++j) {
      sigma[from[j]] = to[order[j]];
      queue.push_back(from[j]);
    }
  }
  return sigma;
}

TreeAction random_tree_action(const SymmetricTree& t, int k, Rng& rng) {
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < k; ++i) perms.push_back(random_automorphism(t, rng));
  return TreeAction(cat0::MetricTree(t.graph), std::move(perms));
}

}  // namespace cat0lab::energy
