#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fanoscape/arith.hpp"
#include "fanoscape/polytope.hpp"

namespace fanoscape {

/// Prefix of a power series in t: coefficient i holds the t^i term, and the
/// order (exclusive truncation) equals the number of stored coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t order) : coeffs_(order, Rational(0)) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }

  TruncatedSeries truncated(std::size_t order) const;

  /// Sum and product truncate to the smaller order.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  std::vector<Rational> coeffs_;
};

/// numerator(t) / prod_j (1 - t^{w_j}) with positive exponents w_j.
class RationalGeneratingFunction {
 public:
  RationalGeneratingFunction(std::vector<Integer> numerator, std::vector<std::int64_t> denominator);

  const std::vector<Integer>& numerator() const noexcept { return numerator_; }
  const std::vector<std::int64_t>& denominator() const noexcept { return denominator_; }

  /// Power-series expansion by long division against the expanded denominator.
  TruncatedSeries expand(std::size_t order) const;
  /// Same expansion computed as numerator times a product of geometric series.
  TruncatedSeries expand_geometric(std::size_t order) const;
  /// Generating function of the coefficients a_{rk}, k >= 0.
  RationalGeneratingFunction veronese(std::int64_t r) const;

  friend bool operator==(const RationalGeneratingFunction& a, const RationalGeneratingFunction& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }

 private:
  std::vector<Integer> numerator_;
  std::vector<std::int64_t> denominator_;
};

/// Full-dimensional pointed rational polyhedral cone.
class PointedCone {
 public:
  /// Generators are replaced by their primitive multiples. Throws NotPointed
  /// if the cone contains a line, DegenerateHull if it is not full-dimensional.
  explicit PointedCone(std::vector<LatticeVector> generators);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  /// Inner facet normals: x is in the cone iff <normal, x> >= 0 for all of them.
  const std::vector<LatticeVector>& facet_normals() const noexcept { return facet_normals_; }

  bool contains(const LatticeVector& x) const;
  /// Integral linear form that is positive on every nonzero cone point.
  const LatticeVector& grading() const noexcept { return grading_; }

 private:
  std::size_t dim_;
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> facet_normals_;
  LatticeVector grading_;
};

/// Minimal generating set of the monoid of lattice points of a cone.
struct HilbertBasis {
  std::vector<LatticeVector> elements;  // sorted by (grading, lex)
  PointedCone cone;
};

TruncatedSeries ehrhart_series(const RationalPolytope& q, std::size_t order);
PointedCone anticanonical_cone(const RationalPolytope& q);
HilbertBasis hilbert_basis(const PointedCone& cone);
long genus(const LatticePolytope& p);
long codimension_estimate(const LatticePolytope& p);
RationalGeneratingFunction hilbert_series_complete_intersection(
    const std::vector<std::int64_t>& weights, const std::vector<std::int64_t>& degrees);
bool series_match(const RationalGeneratingFunction& h, const TruncatedSeries& s);

}  // namespace fanoscape
