#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "fanoscape/arith.hpp"
#include "fanoscape/polytope.hpp"

namespace fixtures {

using fanoscape::IntMatrix;
using fanoscape::Integer;
using fanoscape::LatticePolytope;
using fanoscape::LatticeVector;
using fanoscape::UnimodularMap;

inline std::vector<LatticeVector> points(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<LatticeVector> out;
  for (auto r : rows) out.emplace_back(r);
  return out;
}

inline LatticePolytope hull(std::initializer_list<std::initializer_list<long>> rows) {
  return fanoscape::convex_hull(points(rows));
}

inline LatticePolytope p3_simplex() { return hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}); }
inline LatticePolytope p2_triangle() { return hull({{1, 0}, {0, 1}, {-1, -1}}); }

// Product of random elementary matrices and sign flips.
inline UnimodularMap random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 6) {
  IntMatrix m = fanoscape::identity_matrix(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& x : m[i]) x = -x;
      continue;
    }
    const long c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
  }
  return UnimodularMap(m);
}

// Random full-dimensional point set in [-r, r]^n.
inline std::vector<LatticeVector> random_points(std::size_t n, std::size_t count, long r,
                                                std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-r, r);
  for (;;) {
    std::vector<LatticeVector> pts;
    for (std::size_t i = 0; i < count; ++i) {
      LatticeVector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = coord(rng);
      pts.push_back(v);
    }
    if (fanoscape::affine_dimension(pts) == static_cast<long>(n)) return pts;
  }
}

// Random Fano polytope: random primitive points around the origin, retried
// until the origin is interior and all vertices are primitive.
inline LatticePolytope random_fano(std::size_t n, std::size_t count, long r, std::mt19937_64& rng) {
  for (;;) {
    auto pts = random_points(n, count, r, rng);
    std::vector<LatticeVector> prim;
    for (const auto& p : pts)
      if (!p.is_zero()) prim.push_back(p.primitive());
    if (fanoscape::affine_dimension(prim) != static_cast<long>(n)) continue;
    auto p = fanoscape::convex_hull(prim);
    if (fanoscape::is_fano(p)) return p;
  }
}

}  // namespace fixtures
