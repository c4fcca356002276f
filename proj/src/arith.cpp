#include "fanoscape/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanoscape/errors.hpp"

namespace fanoscape {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw ParseError("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

// --- LatticeVector -----------------------------------------------------------

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  LatticeVector e(n);
  e[i] = 1;
  return e;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) g = gcd(g, c);
  return g;
}

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (g == 0) throw InvalidArgument("zero vector has no primitive multiple");
  LatticeVector r = *this;
  for (auto& c : r.coords_) c /= g;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.dim() != dim()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.dim() != dim()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

// --- DualVector --------------------------------------------------------------

DualVector::DualVector(const LatticeVector& v) {
  coords_.reserve(v.dim());
  for (const auto& c : v) coords_.emplace_back(c);
}

bool DualVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

LatticeVector DualVector::to_lattice() const {
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& q : coords_) {
    if (q.get_den() != 1) throw InvalidArgument("dual vector is not integral");
    out.push_back(q.get_num());
  }
  return LatticeVector(std::move(out));
}

Integer DualVector::denominator() const {
  Integer l = 1;
  for (const auto& q : coords_) l = lcm(l, q.get_den());
  return l;
}

bool operator<(const DualVector& a, const DualVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const DualVector& u, const LatticeVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

Rational dot(const DualVector& u, const DualVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const DualVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// --- matrices ----------------------------------------------------------------

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), std::vector<Integer>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix c(rows, std::vector<Integer>(cols, Integer(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw DimensionMismatch("matrix shapes do not compose");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

LatticeVector apply(const IntMatrix& m, const LatticeVector& v) {
  LatticeVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.dim()) throw DimensionMismatch("matrix and vector shapes differ");
    for (std::size_t j = 0; j < v.dim(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Integer determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(const std::vector<LatticeVector>& rows) {
  if (rows.empty()) return 0;
  RankTracker t(rows.front().dim());
  for (const auto& r : rows) t.add(r);
  return t.rank();
}

std::optional<RatMatrix> inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  RatMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

IntMatrix columns_to_matrix(const std::vector<LatticeVector>& cols) {
  if (cols.empty()) return {};
  const std::size_t n = cols.front().dim();
  IntMatrix m(n, std::vector<Integer>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  return m;
}

namespace {

void row_combine(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                 const Integer& c, const Integer& d) {
  // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
  for (std::size_t k = 0; k < m[i].size(); ++k) {
    Integer x = m[i][k];
    Integer y = m[j][k];
    m[i][k] = a * x + b * y;
    m[j][k] = c * x + d * y;
  }
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& input) {
  const std::size_t n = input.size();
  IntMatrix h = input;
  IntMatrix u = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    if (h[col].size() != n) throw DimensionMismatch("hermite_normal_form expects a square matrix");
    for (std::size_t r = col + 1; r < n; ++r) {
      if (h[r][col] == 0) continue;
      const Integer a = h[col][col];
      const Integer b = h[r][col];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer ag = a / g;
      const Integer bg = b / g;
      // [s t; -b/g a/g] has determinant 1.
      row_combine(h, col, r, s, t, -bg, ag);
      row_combine(u, col, r, s, t, -bg, ag);
    }
    if (h[col][col] == 0) throw InvalidArgument("hermite_normal_form: singular matrix");
    if (h[col][col] < 0) {
      for (auto& x : h[col]) x = -x;
      for (auto& x : u[col]) x = -x;
    }
    for (std::size_t r = 0; r < col; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[r][col].get_mpz_t(), h[col][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        h[r][k] -= q * h[col][k];
        u[r][k] -= q * u[col][k];
      }
    }
  }
  return {std::move(h), std::move(u)};
}

LatticeVector hyperplane_normal(const std::vector<LatticeVector>& points) {
  const std::size_t n = points.front().dim();
  if (points.size() != n) throw InvalidArgument("hyperplane_normal expects n points in dimension n");
  IntMatrix diffs;
  for (std::size_t i = 1; i < n; ++i) {
    LatticeVector d = points[i] - points[0];
    diffs.push_back(d.coords());
  }
  LatticeVector normal(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    for (const auto& row : diffs) {
      std::vector<Integer> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(row[k]);
      minor.push_back(std::move(r));
    }
    Integer d = determinant(minor);
    normal[j] = (j % 2 == 0) ? d : Integer(-d);
  }
  if (normal.is_zero()) throw DegenerateHull("points do not span a hyperplane");
  return normal.primitive();
}

bool RankTracker::add(const LatticeVector& v) {
  if (v.dim() != n_) throw DimensionMismatch("rank tracker dimension mismatch");
  std::vector<Rational> row(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t k = 0; k < n_; ++k) row[k] -= f * rows_[r][k];
  }
  std::size_t p = 0;
  while (p < n_ && row[p] == 0) ++p;
  if (p == n_) return false;
  const Rational lead = row[p];
  for (auto& x : row) x /= lead;
  // Keep previous rows reduced in the new pivot column.
  for (auto& other : rows_) {
    if (other[p] == 0) continue;
    const Rational f = other[p];
    for (std::size_t k = 0; k < n_; ++k) other[k] -= f * row[k];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

long affine_dimension(const std::vector<LatticeVector>& points) {
  if (points.empty()) return -1;
  RankTracker t(points.front().dim());
  for (std::size_t i = 1; i < points.size(); ++i) t.add(points[i] - points[0]);
  return static_cast<long>(t.rank());
}

}  // namespace fanoscape
