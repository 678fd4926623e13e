//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_CAT0_SAMPLING_HPP_
#define CAT0LAB_CAT0_SAMPLING_HPP_

#include <vector>

#include "cat0lab/cat0/euclidean.hpp"
#include "cat0lab/cat0/graph_cone.hpp"
#include "cat0lab/cat0/measure.hpp"
#include "cat0lab/cat0/metric_tree.hpp"
#include "cat0lab/cat0/pod.hpp"
#include "cat0lab/random.hpp"

namespace cat0lab::cat0 {

// Random points for property tests and experiments. `scale` bounds the
// coordinates or radii.

inline Euclidean::Point random_point(const Euclidean& space, Rng& rng, double scale = 1.0) {
  Euclidean::Point x(space.dimension());
  for (int i = 0; i < x.size(); ++i) x[i] = scale * normal(rng);
  return x;
}

inline Pod::Point random_point(const Pod& pod, Rng& rng, double scale = 1.0) {
  // Occasionally land exactly on the apex.
  if (uniform01(rng) < 0.05) return pod.origin();
  return {static_cast<int>(uniform_index(rng, pod.legs())), scale * uniform01(rng)};
}

inline Position random_position(const MetricGraph& g, Rng& rng) {
  const int e = static_cast<int>(uniform_index(rng, g.graph().edge_count()));
  // Hit the endpoints with some probability; vertices are where trees branch.
  const double u = uniform01(rng);
  if (u < 0.1) return {e, 0.0};
  if (u < 0.2) return {e, g.length(e)};
  return {e, g.length(e) * uniform01(rng)};
}

inline MetricTree::Point random_point(const MetricTree& tree, Rng& rng, double = 1.0) {
  return random_position(tree.metric(), rng);
}

inline GraphCone::Point random_point(const GraphCone& cone, Rng& rng, double scale = 1.0) {
  if (uniform01(rng) < 0.05) return cone.origin();
  return {random_position(cone.directions(), rng), scale * uniform01(rng)};
}

/// Measure with `size` random support points and random positive weights.
template <class S>
FiniteMeasure<typename S::Point> random_measure(const S& space, Rng& rng, int size,
                                               double scale = 1.0) {
  std::vector<typename S::Point> pts;
  std::vector<double> w;
  double total = 0.0;
  for (int i = 0; i < size; ++i) {
    pts.push_back(random_point(space, rng, scale));
    w.push_back(0.05 + uniform01(rng));
    total += w.back();
  }
  for (double& x : w) x /= total;
  return FiniteMeasure<typename S::Point>(std::move(pts), std::move(w));
}

}  // namespace cat0lab::cat0

#endif  // CAT0LAB_CAT0_SAMPLING_HPP_
