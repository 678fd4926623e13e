//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_SPECIAL_GRAPHS_HPP_
#define CAT0LAB_SPECIAL_GRAPHS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cat0lab/graph.hpp"

namespace cat0lab::special {

bool is_prime(std::int64_t n);
/// Legendre symbol (a | p) for an odd prime p; 0 when p divides a.
int legendre(std::int64_t a, std::int64_t p);

struct LpsParameters {
  int p = 0;
  int q = 0;
  int legendre = 0;  // (p | q)
  bool bipartite = false;
};

/// Integer quaternions a0 + a1 i + a2 j + a3 k of norm p with a0 odd and
/// positive (p = 1 mod 4), found by brute force. There are p + 1 of them.
std::vector<std::array<int, 4>> lps_quaternions(int p);

struct LpsGraph {
  graph::Graph graph;
  LpsParameters params;
};

/// (p+1)-regular Cayley graph of PSL(2, F_q) or PGL(2, F_q).
LpsGraph lps_graph(int p, int q);

struct LpsCertificate {
  int vertex_count = 0;
  int degree = 0;
  bool bipartite = false;
  int girth = 0;
  int diameter = 0;
  std::optional<double> spectral_gap;  // absent above the dense limit
  double girth_bound = 0.0;
  double diameter_bound = 0.0;
  double ramanujan_gap_bound = 0.0;  // 1 - 2 sqrt(p) / (p + 1)
  bool girth_ok = false;
  bool diameter_ok = false;
  std::optional<bool> ramanujan_ok;
};

/// Girth/diameter/spectral certificate. Cayley graphs are vertex transitive,
/// so girth and eccentricity are measured from vertex 0.
LpsCertificate validate_lps(const graph::Graph& g, const LpsParameters& params);

struct ProjectivePlane {
  int r = 0;
  std::vector<std::array<int, 3>> points;  // normalized homogeneous triples
  std::vector<std::array<int, 3>> lines;
};

/// Points (and dually lines) of PG(2, r): nonzero triples over F_r whose
/// first nonzero coordinate is 1.
ProjectivePlane projective_plane(int r);

struct GeneralizedTriangle {
  graph::Graph graph;  // points are vertices [0, N/2), lines [N/2, N)
  ProjectivePlane plane;
};

/// Point-line incidence graph of PG(2, r), r prime, with every edge of
/// length pi/3.
GeneralizedTriangle generalized_triangle(int r);

}  // namespace cat0lab::special

#endif  // CAT0LAB_SPECIAL_GRAPHS_HPP_
