#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fanoscape/arith.hpp"
#include "fanoscape/grading.hpp"
#include "fanoscape/polytope.hpp"

namespace fanoscape {

/// Finitely supported map from exponent vectors to nonzero rational
/// coefficients. Terms are kept in lexicographic exponent order.
class LaurentPolynomial {
 public:
  using Terms = std::map<LatticeVector, Rational>;

  explicit LaurentPolynomial(std::size_t n) : n_(n) {}
  LaurentPolynomial(std::size_t n, const std::vector<std::pair<LatticeVector, Rational>>& terms);

  static LaurentPolynomial constant(std::size_t n, const Rational& c);
  static LaurentPolynomial monomial(const LatticeVector& exponent, const Rational& c = 1);
  /// The variable x_i in n variables.
  static LaurentPolynomial variable(std::size_t n, std::size_t i);

  std::size_t num_variables() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const LatticeVector& exponent) const;
  Rational constant_term() const;
  std::vector<LatticeVector> support() const;
  bool has_integer_coefficients() const;

  void add_term(const LatticeVector& exponent, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& s);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

  LaurentPolynomial pow(unsigned k) const;
  /// Monomial change of variables: the term x^e becomes x^{U e}.
  LaurentPolynomial transformed(const UnimodularMap& u) const;
  /// Multiplies every exponent by the monomial x^shift.
  LaurentPolynomial shifted(const LatticeVector& shift) const;
  /// Exact quotient in the Laurent ring, or std::nullopt if `divisor` does not divide.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Coefficients c'_d of the constant term of f^d.
struct ClassicalPeriod {
  TruncatedSeries series;
};

/// Grading vector and a factor supported in degree zero with respect to it.
class MutationData {
 public:
  /// Throws InvalidArgument unless the weight is primitive and every exponent
  /// of the factor pairs to zero with it.
  MutationData(LatticeVector weight, LaurentPolynomial factor);

  const LatticeVector& weight() const noexcept { return weight_; }
  const LaurentPolynomial& factor() const noexcept { return factor_; }
  /// The inverse mutation: negated weight, same factor.
  MutationData inverse() const { return MutationData(-weight_, factor_); }

 private:
  LatticeVector weight_;
  LaurentPolynomial factor_;
};

struct MutationBounds {
  std::size_t max_factor_support = 0;  // factors (1 + x^u)^k have k + 1 terms
  long max_weight_entry = 0;
};

struct MutationNeighbour {
  MutationData mutation;
  LaurentPolynomial result;
};

/// Convex hull of the support; DegenerateHull unless full-dimensional.
LatticePolytope newton_polytope(const LaurentPolynomial& f);
ClassicalPeriod classical_period(const LaurentPolynomial& f, std::size_t order);
LaurentPolynomial algebraic_mutation(const LaurentPolynomial& f, const MutationData& m);
/// Polytope-level mutation with factor polytope conv(factor_points), which
/// must lie in the hyperplane <weight, .> = 0.
LatticePolytope combinatorial_mutation(const LatticePolytope& p, const LatticeVector& weight,
                                       std::span<const LatticeVector> factor_points);
std::vector<MutationNeighbour> mutation_neighbours(const LaurentPolynomial& f,
                                                   const MutationBounds& bounds);

/// Canonical representative of f up to GL(n,Z) monomial changes of variables.
/// Requires a full-dimensional Newton polytope.
LaurentPolynomial canonical_form(const LaurentPolynomial& f);

}  // namespace fanoscape
