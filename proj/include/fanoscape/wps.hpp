#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fanoscape/arith.hpp"
#include "fanoscape/grading.hpp"
#include "fanoscape/laurent.hpp"

namespace fanoscape {

/// Hypersurface X_d in P(1, a1, a2, a3, a4) with d = a1 + a2 + a3 + a4.
struct HypersurfaceCandidate {
  std::array<long, 5> weights{};  // weights[0] == 1, tail sorted ascending
  long degree = 0;

  /// Sorts the tail. Throws InvalidArgument unless there are five positive
  /// weights starting with 1, WeightMismatch if d is not the tail sum.
  static HypersurfaceCandidate make(const std::vector<long>& weights, long degree);

  /// "X_66(1,5,6,22,33)"
  std::string label() const;

  friend bool operator==(const HypersurfaceCandidate&, const HypersurfaceCandidate&) = default;
  friend auto operator<=>(const HypersurfaceCandidate& a, const HypersurfaceCandidate& b) {
    if (a.degree != b.degree) return a.degree <=> b.degree;
    return a.weights <=> b.weights;
  }
};

/// One coordinate stratum {x_j = 0 for j outside `coordinates`}.
struct StratumCertificate {
  std::vector<std::size_t> coordinates;
  bool certified = false;
  /// Either one monomial of degree d in the stratum variables, or one
  /// monomial per stratum variable of the form (stratum monomial) * x_e with
  /// distinct e. Exponent vectors have five entries.
  std::vector<std::array<long, 5>> monomials;
};

struct QuasismoothReport {
  bool verdict = false;
  std::vector<StratumCertificate> witness;  // failing strata have certified == false
};

/// Cyclic quotient point 1/r(b1, b2, b3) on the general member.
struct QuotientSingularity {
  long index = 1;
  std::array<long, 3> weights{};
  Rational reid_tai_minimum;  // min over k of sum {k b_i / r}
  long multiplicity = 1;      // number of points of this kind on one stratum
};

struct TerminalityReport {
  bool verdict = false;
  std::vector<QuotientSingularity> singular_points;
  /// Empty when every singular stratum meets X in isolated points, otherwise
  /// a short description of the first positive-dimensional one.
  std::string non_isolated;
};

LaurentPolynomial przyjalkowski_mirror(const std::vector<long>& weights, long degree);
long interior_point_formula(long d);

/// Minimum of sum {k b_i / r} over k = 1..r-1 (r > 1).
Rational reid_tai_minimum(long r, const std::array<long, 3>& b);

/// gcd of the four tail weights is 1 and every three of them are coprime
/// (equivalently, gcd of any three weights divides d), and X is not a linear cone.
bool is_well_formed(const HypersurfaceCandidate& c);
QuasismoothReport is_quasismooth(const HypersurfaceCandidate& c);
TerminalityReport is_terminal(const HypersurfaceCandidate& c);
std::vector<HypersurfaceCandidate> search_famous_95(long weight_bound);

struct CandidateInvariants {
  long genus;
  RationalGeneratingFunction hilbert_series;
};
CandidateInvariants candidate_invariants(const HypersurfaceCandidate& c);

}  // namespace fanoscape
