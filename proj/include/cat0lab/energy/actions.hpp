//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_ENERGY_ACTIONS_HPP_
#define CAT0LAB_ENERGY_ACTIONS_HPP_

#include <concepts>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cat0lab/cat0/euclidean.hpp"
#include "cat0lab/cat0/metric_tree.hpp"
#include "cat0lab/energy/free_group.hpp"
#include "cat0lab/random.hpp"

namespace cat0lab::energy {

/// An isometric action of F_k: each letter acts by an isometry of space().
template <class A>
concept GroupAction = requires(const A& a, char c, const typename A::Point& p) {
  typename A::Space;
  { a.space() } -> std::convertible_to<const typename A::Space&>;
  { a.rank() } -> std::convertible_to<int>;
  { a.apply(c, p) } -> std::same_as<typename A::Point>;
};

/// rho(w) y; the rightmost letter acts first.
template <GroupAction A>
typename A::Point act(const A& action, std::string_view w, typename A::Point y) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = action.apply(*it, y);
  return y;
}

/// Affine isometries x -> Q_i x + b_i of R^d, one per generator.
class EuclideanAction {
 public:
  using Space = cat0::Euclidean;
  using Point = Eigen::VectorXd;

  /// Checks that every Q_i is orthogonal to 1e-10.
  EuclideanAction(std::vector<Eigen::MatrixXd> rotations, std::vector<Eigen::VectorXd> translations);

  /// Z acting on R by x -> u x + tau with u = +-1.
  static EuclideanAction integer_line(double u, double tau);

  const Space& space() const { return space_; }
  int rank() const { return static_cast<int>(rotations_.size()); }
  int dimension() const { return space_.dimension(); }
  const Eigen::MatrixXd& rotation(int i) const { return rotations_[i]; }
  const Eigen::VectorXd& translation(int i) const { return translations_[i]; }

  Point apply(char c, const Point& x) const;
  /// Linear part of a letter.
  Eigen::MatrixXd linear(char c) const;

  /// M v = sum_s mu(e, s) rho_0(s) v for the standard walk.
  Eigen::MatrixXd averaging_operator() const;
  /// Basepoint of the harmonic map, solving (I - M) y = mean_s b(s). Throws
  /// a precondition error when I - M is singular.
  Point harmonic_basepoint() const;

 private:
  Space space_;
  std::vector<Eigen::MatrixXd> rotations_;
  std::vector<Eigen::VectorXd> translations_;
};

/// Haar-random orthogonal d x d matrix (QR of a Gaussian matrix).
Eigen::MatrixXd random_orthogonal(int d, Rng& rng);
/// Random Q_i and Gaussian b_i with standard deviation `scale`.
EuclideanAction random_euclidean_action(int k, int d, Rng& rng, double scale = 1.0);

/// Points fixed by every generator of a tree action: fixed vertices, edges
/// fixed pointwise, and edges flipped by some generator (only the midpoint).
struct FixedSet {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> flipped_edges;

  bool empty() const { return vertices.empty() && flipped_edges.empty(); }
};

/// F_k acting on a finite metric tree by length-preserving automorphisms,
/// given as vertex permutations.
class TreeAction {
 public:
  using Space = cat0::MetricTree;
  using Point = cat0::Position;

  /// Checks that each permutation maps edges onto edges of equal length.
  TreeAction(cat0::MetricTree tree, std::vector<std::vector<int>> permutations);

  const Space& space() const { return tree_; }
  int rank() const { return static_cast<int>(forward_.size()); }
  const std::vector<int>& permutation(int i) const { return forward_[i]; }

  Point apply(char c, const Point& x) const;

  FixedSet fixed_set() const;
  /// A point of the fixed set (a fixed vertex, else a flipped midpoint).
  Point fixed_point() const;
  double distance_to_fixed_set(const Point& x) const;

 private:
  struct EdgeImage {
    int edge;
    bool flipped;
  };
  std::vector<EdgeImage> edge_images(const std::vector<int>& perm) const;

  cat0::MetricTree tree_;
  std::vector<std::vector<int>> forward_;
  std::vector<std::vector<int>> backward_;
  std::vector<std::vector<EdgeImage>> forward_edges_;
  std::vector<std::vector<EdgeImage>> backward_edges_;
};

/// Spherically symmetric rooted tree: every vertex at depth l has
/// branching[l] children joined by edges of length lengths[l]. With
/// `bicentral`, two copies are joined root to root by an edge of length
/// `bridge`, so automorphisms may flip the central edge.
struct SymmetricTree {
  graph::Graph graph;
  std::vector<std::vector<int>> children;
  std::vector<int> roots;  // one root, or two when bicentral
};

SymmetricTree symmetric_tree(const std::vector<int>& branching, const std::vector<double>& lengths,
                             bool bicentral = false, double bridge = 1.0);
/// Uniform automorphism: independent uniform permutations of the children of
/// every vertex, plus a swap of the halves with probability 1/2 when bicentral.
std::vector<int> random_automorphism(const SymmetricTree& t, Rng& rng);
TreeAction random_tree_action(const SymmetricTree& t, int k, Rng& rng);

}  // namespace cat0lab::energy

#endif  // CAT0LAB_ENERGY_ACTIONS_HPP_
