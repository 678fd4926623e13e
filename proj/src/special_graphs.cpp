//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/special_graphs.hpp"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <string>
#include <unordered_map>

#include "cat0lab/error.hpp"

namespace cat0lab::special {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  return pow_mod(a, p - 2, p);
}

// A square root of -1 mod q (q = 1 mod 4).
std::int64_t sqrt_minus_one(std::int64_t q) {
  for (std::int64_t x = 2; x < q; ++x) {
    if (x * x % q == q - 1) return x;
  }
  fail(ErrorKind::kPrecondition, "no square root of -1 mod " + std::to_string(q));
}

// 2x2 matrix over F_q modulo scalars, entries row-major.
using Mat = std::array<std::int64_t, 4>;

Mat multiply(const Mat& x, const Mat& y, std::int64_t q) {
  return {mod(x[0] * y[0] + x[1] * y[2], q), mod(x[0] * y[1] + x[1] * y[3], q),
          mod(x[2] * y[0] + x[3] * y[2], q), mod(x[2] * y[1] + x[3] * y[3], q)};
}

// Scale so that the first nonzero entry is 1.
Mat normalize(Mat m, std::int64_t q) {
  for (std::int64_t entry : m) {
    if (entry != 0) {
      const std::int64_t inv = inverse_mod(entry, q);
      for (auto& x : m) x = x * inv % q;
      return m;
    }
  }
  fail(ErrorKind::kDiscrepancy, "lps: zero matrix");
}

std::int64_t encode(const Mat& m, std::int64_t q) {
  return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = pow_mod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::vector<std::array<int, 4>> lps_quaternions(int p) {
  std::vector<std::array<int, 4>> out;
  const int bound = static_cast<int>(std::sqrt(double(p))) + 1;
  for (int a0 = 1; a0 <= bound; a0 += 2) {
    for (int a1 = -bound; a1 <= bound; ++a1) {
      for (int a2 = -bound; a2 <= bound; ++a2) {
        for (int a3 = -bound; a3 <= bound; ++a3) {
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p) out.push_back({a0, a1, a2, a3});
        }
      }
    }
  }
  return out;
}

LpsGraph lps_graph(int p, int q) {
  require(is_prime(p) && is_prime(q), "lps: p and q must be prime");
  require(p % 4 == 1 && q % 4 == 1, "lps: p and q must be 1 mod 4");
  require(p != q, "lps: p and q must be distinct");
  require(q > 2.0 * std::sqrt(double(p)), "lps: need q > 2 sqrt(p)");

  LpsParameters params;
  params.p = p;
  params.q = q;
  params.legendre = legendre(p, q);
  params.bipartite = params.legendre == -1;

  const auto quats = lps_quaternions(p);
  if (static_cast<int>(quats.size()) != p + 1) {
    fail(ErrorKind::kDiscrepancy, "lps: expected p+1 quaternion generators");
  }
  const std::int64_t i = sqrt_minus_one(q);
  std::vector<Mat> gens;
  for (const auto& a : quats) {
    gens.push_back(normalize({mod(a[0] + a[1] * i, q), mod(a[2] + a[3] * i, q),
                              mod(-a[2] + a[3] * i, q), mod(a[0] - a[1] * i, q)},
                             q));
  }

  // BFS from the identity. Generators of square determinant stay in PSL, so
  // the reachable set is PSL(2,q) when (p|q) = 1 and PGL(2,q) otherwise.
  std::unordered_map<std::int64_t, int> index;
  std::vector<Mat> elements;
  const Mat identity{1, 0, 0, 1};
  index.emplace(encode(identity, q), 0);
  elements.push_back(identity);
  std::vector<graph::Edge> edges;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const Mat g = elements[head];
    for (const Mat& s : gens) {
      const Mat h = normalize(multiply(g, s, q), q);
      const auto key = encode(h, q);
      auto [it, inserted] = index.emplace(key, static_cast<int>(elements.size()));
      if (inserted) elements.push_back(h);
      const int u = static_cast<int>(head);
      const int v = it->second;
      if (u < v) edges.push_back({u, v, 1.0});
    }
  }
  const std::int64_t order = std::int64_t{q} * (std::int64_t{q} * q - 1);
  const std::int64_t expected = params.bipartite ? order : order / 2;
  if (static_cast<std::int64_t>(elements.size()) != expected) {
    fail(ErrorKind::kDiscrepancy, "lps: reached " + std::to_string(elements.size()) +
                                      " elements, expected " +
                                      std::to_string(expected));
  }
  auto g = graph::Graph::from_edges(std::move(edges), static_cast<int>(elements.size()));
  if (g.min_degree() != p + 1 || g.max_degree() != p + 1) {
    fail(ErrorKind::kDiscrepancy, "lps: graph is not (p+1)-regular");
  }
  return {std::move(g), params};
}

LpsCertificate validate_lps(const graph::Graph& g, const LpsParameters& params) {
  LpsCertificate cert;
  cert.vertex_count = g.vertex_count();
  cert.degree = g.max_degree();
  cert.bipartite = g.is_bipartite();

  // Shortest cycle through vertex 0 and its eccentricity.
  const auto dist = g.bfs_distances(0);
  cert.diameter = *std::max_element(dist.begin(), dist.end());
  cert.girth = graph::shortest_cycle_through(g, 0);

  const double logp = std::log(double(params.p));
  const double logq = std::log(double(params.q));
  cert.girth_bound = params.bipartite ? 4.0 * logq / logp - std::log(4.0) / logp
                                      : 2.0 * logq / logp;
  cert.diameter_bound =
      2.0 * std::log(double(cert.vertex_count)) / logp + 2.0 * std::log(2.0) / logp + 1.0;
  cert.ramanujan_gap_bound = 1.0 - 2.0 * std::sqrt(double(params.p)) / (params.p + 1);
  cert.girth_ok = cert.girth >= cert.girth_bound;
  cert.diameter_ok = cert.diameter <= cert.diameter_bound;
  if (g.vertex_count() <= graph::kMaxDenseVertices) {
    cert.spectral_gap = graph::spectral_gap_real(g);
    cert.ramanujan_ok = *cert.spectral_gap >= cert.ramanujan_gap_bound - 1e-9;
  }
  return cert;
}

ProjectivePlane projective_plane(int r) {
  require(is_prime(r), "projective plane: r must be prime (prime powers unsupported)");
  ProjectivePlane plane;
  plane.r = r;
  for (int x = 0; x < r; ++x) {
    for (int y = 0; y < r; ++y) plane.points.push_back({1, x, y});
  }
  for (int y = 0; y < r; ++y) plane.points.push_back({0, 1, y});
  plane.points.push_back({0, 0, 1});
  plane.lines = plane.points;  // dual coordinates
  return plane;
}

GeneralizedTriangle generalized_triangle(int r) {
  ProjectivePlane plane = projective_plane(r);
  const int half = static_cast<int>(plane.points.size());
  std::vector<graph::Edge> edges;
  for (int i = 0; i < half; ++i) {
    for (int j = 0; j < half; ++j) {
      const auto& pt = plane.points[i];
      const auto& ln = plane.lines[j];
      if ((pt[0] * ln[0] + pt[1] * ln[1] + pt[2] * ln[2]) % r == 0) {
        edges.push_back({i, half + j, std::numbers::pi / 3.0});
      }
    }
  }
  return {graph::Graph::from_edges(std::move(edges), 2 * half), std::move(plane)};
}

}  // namespace cat0lab::special
