#include <doctest.h>

#include <random>

#include "fanoscape/errors.hpp"
#include "fanoscape/grading.hpp"
#include "fanoscape/wps.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace fanoscape;
using fixtures::hull;
using fixtures::points;

namespace {

TruncatedSeries series(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return TruncatedSeries(std::move(c));
}

LatticePolytope quartic_mirror_simplex() {
  return newton_polytope(przyjalkowski_mirror({1, 1, 1, 1, 1}, 4));
}

}  // namespace

TEST_CASE("truncated series arithmetic truncates to the shorter order") {
  const auto a = series({1, 2, 3});
  const auto b = series({1, 1});
  CHECK(a + b == series({2, 3}));
  CHECK(a * b == series({1, 3}));
  CHECK(a.truncated(2) == series({1, 2}));
  CHECK_THROWS_AS(a.truncated(4), InvalidArgument);
}

TEST_CASE("generating function expansions agree") {
  const auto h = hilbert_series_complete_intersection({1, 1, 1, 1, 1}, {4});
  CHECK(h.expand(3) == series({1, 5, 15}));
  for (long d = 0; d < 12; ++d) {
    const Integer expected = binomial(d + 4, 4) - (d >= 4 ? binomial(d, 4) : Integer(0));
    CHECK(h.expand(12)[d] == Rational(expected));
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> w(1, 7), cnt(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int64_t> weights, degrees;
    for (long i = cnt(rng); i > 0; --i) weights.push_back(w(rng));
    for (long i = cnt(rng) % 3; i > 0; --i) degrees.push_back(w(rng) * 2);
    const auto g = hilbert_series_complete_intersection(weights, degrees);
    CHECK(g.expand(20) == g.expand_geometric(20));
  }
  CHECK_THROWS_AS(RationalGeneratingFunction({Integer(1)}, {0}), ZeroWeight);
  CHECK_THROWS_AS(hilbert_series_complete_intersection({1, 0}, {}), ZeroWeight);
}

TEST_CASE("hilbert series examples") {
  CHECK(hilbert_series_complete_intersection({2, 3, 4, 5, 6, 7}, {12, 14}).expand(2)[1] == 0);
  CHECK(hilbert_series_complete_intersection({1, 1, 1, 1, 1, 2}, {3, 3}).expand(2)[1] == 5);
}

TEST_CASE("veronese subseries") {
  const RationalGeneratingFunction p3({Integer(1)}, {1, 1, 1, 1});
  const auto full = p3.expand(40);
  const auto v = p3.veronese(4).expand(10);
  for (std::size_t k = 0; k < 10; ++k) CHECK(v[k] == full[4 * k]);
}

TEST_CASE("ehrhart series of duals") {
  CHECK(ehrhart_series(dual(fixtures::p3_simplex()), 3) == series({1, 35, 165}));
  const auto tri = fixtures::p2_triangle();
  const auto e = ehrhart_series(dual(tri), 6);
  for (long k = 0; k < 6; ++k)
    CHECK(e[k] == Rational(oracle::dual_dilation_count(tri.vertices(), k)));
  CHECK(e[1] == 10);
  CHECK(e[2] == 28);
}

TEST_CASE("ehrhart counts agree with box scans on random fano polytopes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = trial % 3 ? 3 : 2;
    const auto p = fixtures::random_fano(n, 6, 2, rng);
    const auto e = ehrhart_series(dual(p), 4);
    CHECK(e[0] == 1);
    for (long k = 0; k < 4; ++k) {
      CHECK(e[k] == Rational(oracle::dual_dilation_count(p.vertices(), k)));
      if (k) CHECK(e[k] >= e[k - 1]);
    }
  }
}

TEST_CASE("hilbert bases of small cones") {
  {
    const auto hb = hilbert_basis(PointedCone(points({{1, 0}, {1, 2}})));
    CHECK(hb.elements == points({{1, 0}, {1, 1}, {1, 2}}));
  }
  {
    const auto hb =
        hilbert_basis(PointedCone(points({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})));
    CHECK(hb.elements.size() == 4);
  }
  {
    // cone((1,0),(1,3)) needs every (1, i).
    const auto hb = hilbert_basis(PointedCone(points({{1, 0}, {1, 3}})));
    CHECK(hb.elements == points({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  }
  {
    // cone((2,-1),(2,1)) contains (1,0), which is not a generator.
    const auto hb = hilbert_basis(PointedCone(points({{2, -1}, {2, 1}})));
    CHECK(hb.elements.size() == 3);
  }
  CHECK_THROWS_AS(PointedCone(points({{1, 0}, {-1, 0}, {0, 1}})), NotPointed);
}

TEST_CASE("anticanonical hilbert bases pass the bounded certification") {
  const auto p3 = fixtures::p3_simplex();
  const auto hb = hilbert_basis(anticanonical_cone(dual(p3)));
  CHECK(hb.elements.size() == 35);
  CHECK(oracle::certify_anticanonical_hilbert_basis(p3.vertices(), hb.elements, 3) == 0);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = fixtures::random_fano(3, 6, 2, rng);
    const auto basis = hilbert_basis(anticanonical_cone(dual(p))).elements;
    CHECK(oracle::certify_anticanonical_hilbert_basis(p.vertices(), basis, 3) == 0);
  }
  const auto terminal = hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}});
  const auto tb = hilbert_basis(anticanonical_cone(dual(terminal))).elements;
  CHECK(oracle::certify_anticanonical_hilbert_basis(terminal.vertices(), tb, 4) == 0);
}

TEST_CASE("anticanonical cone needs a threefold") {
  CHECK_THROWS_AS(anticanonical_cone(dual(fixtures::p2_triangle())), DimensionMismatch);
  CHECK_THROWS_AS(genus(fixtures::p2_triangle()), DimensionMismatch);
}

TEST_CASE("genus and codimension") {
  CHECK(genus(fixtures::p3_simplex()) == 33);
  CHECK(codimension_estimate(fixtures::p3_simplex()) == 31);
  const auto q = quartic_mirror_simplex();
  CHECK(genus(q) == 3);
  CHECK(codimension_estimate(q) == 1);
  CHECK(hilbert_basis(anticanonical_cone(dual(q))).elements.size() == 5);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = fixtures::random_fano(3, 6, 2, rng);
    const auto u = fixtures::random_unimodular(3, rng);
    CHECK(genus(p) == static_cast<long>(ehrhart_series(dual(p), 2)[1].get_num().get_si()) - 2);
    CHECK(genus(p.transformed(u)) == genus(p));
    CHECK(codimension_estimate(p.transformed(u)) == codimension_estimate(p));
  }
}

TEST_CASE("series matching") {
  const auto q = quartic_mirror_simplex();
  const auto h = hilbert_series_complete_intersection({1, 1, 1, 1, 1}, {4});
  CHECK(series_match(h, ehrhart_series(dual(q), 10)));
  const RationalGeneratingFunction p3({Integer(1)}, {1, 1, 1, 1});
  CHECK(series_match(p3.veronese(4), ehrhart_series(dual(fixtures::p3_simplex()), 8)));
  auto wrong = ehrhart_series(dual(q), 4);
  wrong[1] += 1;
  CHECK_FALSE(series_match(h, wrong));
  CHECK_THROWS_AS(series_match(h, TruncatedSeries(0)), InvalidArgument);
}
