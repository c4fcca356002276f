#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace fanoscape {

using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Integer binomial(long n, long k);
Integer factorial(long n);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);
/// Accepts "p", "-p" and "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

/// Element of the lattice N (or M, depending on context): a tuple of exact integers.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, Integer(0)) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector unit(std::size_t n, std::size_t i);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  /// gcd of the coordinates (0 for the zero vector).
  Integer content() const;
  bool is_primitive() const { return content() == 1; }
  LatticeVector primitive() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& s);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  /// Lexicographic order; this is the canonical order used everywhere.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

 private:
  std::vector<Integer> coords_;
};

/// Element of M tensor Q.
class DualVector {
 public:
  DualVector() = default;
  explicit DualVector(std::size_t n) : coords_(n, Rational(0)) {}
  explicit DualVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit DualVector(const LatticeVector& v);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_integral() const;
  /// Only valid when is_integral().
  LatticeVector to_lattice() const;
  /// Least common multiple of the denominators.
  Integer denominator() const;

  friend bool operator==(const DualVector& a, const DualVector& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const DualVector& a, const DualVector& b) { return !(a == b); }
  friend bool operator<(const DualVector& a, const DualVector& b);

 private:
  std::vector<Rational> coords_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const DualVector& u, const LatticeVector& v);
Rational dot(const DualVector& u, const DualVector& v);

std::string to_string(const LatticeVector& v);
std::string to_string(const DualVector& v);

/// Row-major dense integer matrix.
using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
LatticeVector apply(const IntMatrix& m, const LatticeVector& v);
Integer determinant(IntMatrix m);
std::size_t rank(const std::vector<LatticeVector>& rows);
/// Exact inverse of a square matrix; std::nullopt when singular.
std::optional<RatMatrix> inverse(const IntMatrix& m);
/// Matrix whose columns are the given vectors.
IntMatrix columns_to_matrix(const std::vector<LatticeVector>& cols);

/// Row-style Hermite normal form of a square nonsingular matrix:
/// transform * m == hnf, transform unimodular, hnf upper triangular with
/// positive diagonal and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix hnf;
  IntMatrix transform;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Integer vector orthogonal to the hyperplane through n affinely independent
/// points in dimension n, made primitive. Orientation is unspecified.
LatticeVector hyperplane_normal(const std::vector<LatticeVector>& points);

/// Tracks the linear span of a growing set of vectors.
class RankTracker {
 public:
  explicit RankTracker(std::size_t n) : n_(n) {}
  /// Adds v; returns true when the rank increased.
  bool add(const LatticeVector& v);
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Dimension of the affine hull of the points (-1 for an empty set).
long affine_dimension(const std::vector<LatticeVector>& points);

}  // namespace fanoscape
