#include <doctest.h>

#include <algorithm>

#include "fanoscape/errors.hpp"
#include "fanoscape/grading.hpp"
#include "fanoscape/wps.hpp"
#include "support/oracle.hpp"

using namespace fanoscape;

namespace {

HypersurfaceCandidate cand(std::vector<long> w, long d) { return HypersurfaceCandidate::make(w, d); }

const std::vector<HypersurfaceCandidate>& famous() {
  static const auto list = search_famous_95(40);
  return list;
}

}  // namespace

TEST_CASE("candidate construction") {
  const auto c = cand({1, 33, 5, 22, 6}, 66);
  CHECK(c.weights == std::array<long, 5>{1, 5, 6, 22, 33});
  CHECK(c.label() == "X_66(1,5,6,22,33)");
  CHECK_THROWS_AS(cand({1, 1, 1, 1, 1}, 5), WeightMismatch);
  CHECK_THROWS_AS(cand({2, 1, 1, 1, 1}, 4), InvalidArgument);
  CHECK_THROWS_AS(cand({1, 0, 1, 1, 1}, 3), ZeroWeight);
}

TEST_CASE("przyjalkowski mirrors") {
  const auto quartic = przyjalkowski_mirror({1, 1, 1, 1, 1}, 4);
  CHECK(quartic.num_variables() == 3);
  CHECK(quartic.constant_term() == 0);
  CHECK(quartic.coefficient(LatticeVector{-1, -1, -1}) == 1);
  CHECK(quartic.coefficient(LatticeVector{0, 0, -1}) == 12);

  const auto cubic = przyjalkowski_mirror({1, 1, 1}, 3);
  CHECK(cubic.num_variables() == 2);
  // (1+x+y)^3/(xy) - 6 has ten monomials minus the cancelled constant.
  CHECK(cubic.size() == 9);
  CHECK(cubic.coefficient(LatticeVector{2, -1}) == 1);
  CHECK(cubic.coefficient(LatticeVector{1, 0}) == 3);

  CHECK_THROWS_AS(przyjalkowski_mirror({1, 1, 1, 1, 1}, 7), WeightMismatch);
}

TEST_CASE("interior point formula") {
  CHECK(interior_point_formula(66) == 43680);
  CHECK(interior_point_formula(4) == 1);
  CHECK(interior_point_formula(5) == 4);
  CHECK(interior_lattice_points(newton_polytope(przyjalkowski_mirror({1, 1, 1, 1, 1}, 4))).size() == 1);
  CHECK(interior_lattice_points(newton_polytope(przyjalkowski_mirror({1, 1, 1, 1, 2}, 5))).size() == 4);
}

TEST_CASE("interior point formula matches every mirror simplex in the list") {
  std::set<long> degrees;
  for (const auto& c : famous()) {
    if (!degrees.insert(c.degree).second) continue;
    const auto f = przyjalkowski_mirror(std::vector<long>(c.weights.begin(), c.weights.end()), c.degree);
    CHECK(static_cast<long>(interior_lattice_points(newton_polytope(f)).size()) ==
          interior_point_formula(c.degree));
  }
}

TEST_CASE("quasismoothness certificates") {
  const auto a = is_quasismooth(cand({1, 1, 1, 1, 1}, 4));
  CHECK(a.verdict);
  CHECK(a.witness.size() == 31);
  for (const auto& w : a.witness) CHECK(w.certified);
  CHECK(is_quasismooth(cand({1, 1, 1, 1, 2}, 5)).verdict);
  CHECK(is_quasismooth(cand({1, 2, 2, 2, 2}, 8)).verdict);

  // On x0 = x1 = x4 = 0 only x0 has a tangent monomial x2^a x3^b x0.
  CHECK_FALSE(is_quasismooth(cand({1, 2, 3, 3, 5}, 13)).verdict);

  // The verdict is the conjunction of the stratum certificates.
  const auto b = is_quasismooth(cand({1, 1, 3, 3, 5}, 12));
  bool any_failed = false;
  for (const auto& w : b.witness) any_failed |= !w.certified;
  CHECK(b.verdict == !any_failed);
}

TEST_CASE("terminality") {
  const auto smooth = is_terminal(cand({1, 1, 1, 1, 1}, 4));
  CHECK(smooth.verdict);
  CHECK(smooth.singular_points.empty());

  const auto x66 = is_terminal(cand({1, 5, 6, 22, 33}, 66));
  CHECK(x66.verdict);
  CHECK_FALSE(x66.singular_points.empty());
  for (const auto& q : x66.singular_points) {
    CHECK(q.reid_tai_minimum > 1);
    CHECK(oracle::terminal_lemma(q.index, q.weights));
  }

  const auto bad = is_terminal(cand({1, 2, 2, 2, 2}, 8));
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(bad.non_isolated.empty());
  CHECK_FALSE(is_well_formed(cand({1, 2, 2, 2, 2}, 8)));
}

TEST_CASE("reid-tai agrees with the terminal lemma") {
  for (long r = 2; r <= 23; ++r)
    for (long a = 1; a < r; ++a)
      for (long b = a; b < r; ++b)
        for (long c = b; c < r; ++c) {
          if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1 || std::gcd(c, r) != 1) continue;
          CHECK((reid_tai_minimum(r, {a, b, c}) > 1) == oracle::terminal_lemma(r, {a, b, c}));
        }
}

TEST_CASE("non-quasismooth input to the terminality test") {
  // First non-quasismooth candidate with small weights.
  bool thrown = false;
  for (long a1 = 1; a1 <= 8 && !thrown; ++a1)
    for (long a2 = a1; a2 <= 8 && !thrown; ++a2)
      for (long a3 = a2; a3 <= 8 && !thrown; ++a3)
        for (long a4 = a3; a4 <= 8 && !thrown; ++a4) {
          const auto c = cand({1, a1, a2, a3, a4}, a1 + a2 + a3 + a4);
          if (is_quasismooth(c).verdict) continue;
          CHECK_THROWS_AS(is_terminal(c), NotQuasismooth);
          thrown = true;
        }
  CHECK(thrown);
}

TEST_CASE("the search finds 95 families") {
  const auto& list = famous();
  CHECK(list.size() == 95);
  CHECK(std::is_sorted(list.begin(), list.end()));
  CHECK(list.back() == cand({1, 5, 6, 22, 33}, 66));
  CHECK(list.front() == cand({1, 1, 1, 1, 1}, 4));
  CHECK(search_famous_95(66) == list);

  const auto small = search_famous_95(2);
  CHECK(small.size() < list.size());
  for (const auto& c : small) CHECK(std::binary_search(list.begin(), list.end(), c));

  // Permuting the weights gives the same candidate.
  for (const auto& c : list) {
    auto w = std::vector<long>(c.weights.begin(), c.weights.end());
    std::reverse(w.begin() + 1, w.end());
    CHECK(cand(w, c.degree) == c);
  }
}

TEST_CASE("candidate invariants") {
  CHECK(candidate_invariants(cand({1, 1, 1, 1, 1}, 4)).genus == 3);
  CHECK(candidate_invariants(cand({1, 5, 6, 22, 33}, 66)).genus == -1);
}

TEST_CASE("mirror invariants agree with the candidate for every family") {
  for (const auto& c : famous()) {
    const std::vector<long> w(c.weights.begin(), c.weights.end());
    const auto f = przyjalkowski_mirror(w, c.degree);
    const auto p = newton_polytope(f);
    const auto inv = candidate_invariants(c);
    CHECK(genus(p) == inv.genus);
    CHECK(series_match(inv.hilbert_series, ehrhart_series(dual(p), 6)));
    CHECK(classical_period(f, 2).series[1] == 0);
  }
}

TEST_CASE("quasismoothness agrees with the finite field probe") {
  oracle::QuasismoothProbe probe(20240601);
  for (const auto& c : famous()) {
    INFO(c.label());
    CHECK(probe.general_member_is_quasismooth(c));
  }
  std::vector<HypersurfaceCandidate> rejected;
  for (long a4 = 2; a4 <= 30 && rejected.size() < 20; ++a4)
    for (long a3 = 1; a3 <= a4 && rejected.size() < 20; ++a3)
      for (long a2 = 1; a2 <= a3 && rejected.size() < 20; ++a2)
        for (long a1 = 1; a1 <= a2 && rejected.size() < 20; ++a1) {
          const auto c = cand({1, a1, a2, a3, a4}, a1 + a2 + a3 + a4);
          if (is_well_formed(c) && !is_quasismooth(c).verdict) rejected.push_back(c);
        }
  REQUIRE(rejected.size() == 20);
  for (const auto& c : rejected) {
    INFO(c.label());
    CHECK_FALSE(probe.general_member_is_quasismooth(c));
  }
}
