#include "fanoscape/laurent.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "fanoscape/errors.hpp"

namespace fanoscape {

LaurentPolynomial::LaurentPolynomial(std::size_t n,
                                     const std::vector<std::pair<LatticeVector, Rational>>& terms)
    : n_(n) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t n, const Rational& c) {
  LaurentPolynomial f(n);
  f.add_term(LatticeVector(n), c);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(const LatticeVector& exponent, const Rational& c) {
  LaurentPolynomial f(exponent.dim());
  f.add_term(exponent, c);
  return f;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t n, std::size_t i) {
  return monomial(LatticeVector::unit(n, i));
}

Rational LaurentPolynomial::coefficient(const LatticeVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::constant_term() const { return coefficient(LatticeVector(n_)); }

std::vector<LatticeVector> LaurentPolynomial::support() const {
  std::vector<LatticeVector> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

bool LaurentPolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

void LaurentPolynomial::add_term(const LatticeVector& exponent, const Rational& c) {
  if (exponent.dim() != n_) throw DimensionMismatch("exponent has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.n_ != n_) throw DimensionMismatch("polynomials in different numbers of variables");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  if (other.n_ != n_) throw DimensionMismatch("polynomials in different numbers of variables");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("polynomials in different numbers of variables");
  LaurentPolynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(n_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::transformed(const UnimodularMap& u) const {
  if (u.dim() != n_) throw DimensionMismatch("map and polynomial dimensions differ");
  LaurentPolynomial out(n_);
  for (const auto& [e, c] : terms_) out.add_term(u.apply(e), c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(const LatticeVector& shift) const {
  LaurentPolynomial out(n_);
  for (const auto& [e, c] : terms_) out.add_term(e + shift, c);
  return out;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(
    const LaurentPolynomial& divisor) const {
  if (divisor.n_ != n_) throw DimensionMismatch("polynomials in different numbers of variables");
  if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
  LaurentPolynomial quotient(n_);
  if (is_zero()) return quotient;

  // In an exact quotient, coordinatewise extremes of the support add up, which
  // confines the quotient support to a box.
  std::vector<Integer> lo(n_), hi(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto extreme = [i](const Terms& t, bool want_max) {
      Integer best = t.begin()->first[i];
      for (const auto& [e, c] : t) best = want_max ? std::max(best, e[i]) : std::min(best, e[i]);
      return best;
    };
    lo[i] = extreme(terms_, false) - extreme(divisor.terms_, false);
    hi[i] = extreme(terms_, true) - extreme(divisor.terms_, true);
    if (lo[i] > hi[i]) return std::nullopt;
  }

  const auto& [lead_exp, lead_coeff] = *divisor.terms_.rbegin();
  LaurentPolynomial rest = *this;
  while (!rest.is_zero()) {
    const auto& [top_exp, top_coeff] = *rest.terms_.rbegin();
    LatticeVector e = top_exp - lead_exp;
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    const Rational c = top_coeff / lead_coeff;
    quotient.add_term(e, c);
    for (const auto& [de, dc] : divisor.terms_) rest.add_term(de + e, -c * dc);
  }
  return quotient;
}

// --- Newton polytope and periods -------------------------------------------------

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DegenerateHull("the zero polynomial has no Newton polytope");
  const auto support = f.support();
  return convex_hull(support);
}

namespace {

// Decides whether an intermediate exponent can still return to the origin
// within `remaining` further multiplications by f.
class ReturnTest {
 public:
  explicit ReturnTest(const LaurentPolynomial& f) : n_(f.num_variables()) {
    const auto support = f.support();
    lo_ = support.front().coords();
    hi_ = lo_;
    for (const auto& e : support) {
      for (std::size_t i = 0; i < n_; ++i) {
        lo_[i] = std::min(lo_[i], e[i]);
        hi_[i] = std::max(hi_[i], e[i]);
      }
    }
    try {
      facets_ = newton_polytope(f).facets();
      full_ = true;
    } catch (const DegenerateHull&) {
      full_ = false;
    }
    origin_reachable_ = true;
    for (std::size_t i = 0; i < n_; ++i)
      if (lo_[i] > 0 || hi_[i] < 0) origin_reachable_ = false;
    if (full_) {
      for (const auto& h : facets_)
        if (h.offset < 0) origin_reachable_ = false;
    }
  }

  bool origin_reachable() const { return origin_reachable_; }

  // Valid because the origin lies in the Newton polytope, so the r'-fold sums
  // for r' <= r are all inside r times the polytope.
  bool can_return(const LatticeVector& e, long remaining) const {
    const Integer r = remaining;
    for (std::size_t i = 0; i < n_; ++i) {
      if (-e[i] < r * lo_[i] || -e[i] > r * hi_[i]) return false;
    }
    if (full_) {
      for (const auto& h : facets_)
        if (-dot(h.normal, e) > r * h.offset) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Integer> lo_, hi_;
  std::vector<Halfspace> facets_;
  bool full_ = false;
  bool origin_reachable_ = false;
};

}  // namespace

ClassicalPeriod classical_period(const LaurentPolynomial& f, std::size_t order) {
  if (order < 1) throw InvalidArgument("classical_period order must be at least 1");
  TruncatedSeries series(order);
  series[0] = 1;
  if (f.is_zero() || order == 1) return {series};

  const ReturnTest test(f);
  if (!test.origin_reachable()) return {series};

  const bool integral = f.has_integer_coefficients();
  LaurentPolynomial power = LaurentPolynomial::constant(f.num_variables(), 1);
  for (std::size_t d = 1; d < order; ++d) {
    const long remaining = static_cast<long>(order - 1 - d);
    LaurentPolynomial next(f.num_variables());
    for (const auto& [ep, cp] : power.terms()) {
      for (const auto& [ef, cf] : f.terms()) {
        LatticeVector e = ep + ef;
        if (!test.can_return(e, remaining)) continue;
        next.add_term(e, cp * cf);
      }
    }
    power = std::move(next);
    series[d] = power.constant_term();
    if (integral && series[d].get_den() != 1) {
      throw std::logic_error("non-integral period coefficient for an integral polynomial");
    }
  }
  return {series};
}

// --- mutations ----------------------------------------------------------------------

MutationData::MutationData(LatticeVector weight, LaurentPolynomial factor)
    : weight_(std::move(weight)), factor_(std::move(factor)) {
  if (weight_.dim() != factor_.num_variables())
    throw DimensionMismatch("weight and factor dimensions differ");
  if (!weight_.is_primitive()) throw InvalidArgument("mutation weight must be primitive");
  if (factor_.is_zero()) throw InvalidArgument("mutation factor must be nonzero");
  for (const auto& [e, c] : factor_.terms()) {
    if (dot(weight_, e) != 0) throw InvalidArgument("mutation factor must have weight degree zero");
  }
}

LaurentPolynomial algebraic_mutation(const LaurentPolynomial& f, const MutationData& m) {
  const std::size_t n = f.num_variables();
  if (m.weight().dim() != n) throw DimensionMismatch("mutation data dimension mismatch");

  std::map<long, LaurentPolynomial> graded;
  for (const auto& [e, c] : f.terms()) {
    const long k = dot(m.weight(), e).get_si();
    graded.try_emplace(k, n).first->second.add_term(e, c);
  }

  LaurentPolynomial result(n);
  for (const auto& [k, part] : graded) {
    const LaurentPolynomial factor_power = m.factor().pow(static_cast<unsigned>(k < 0 ? -k : k));
    if (k >= 0) {
      result += part * factor_power;
    } else {
      auto q = part.divide_exact(factor_power);
      if (!q) {
        throw NotMutable("degree " + std::to_string(k) +
                         " part is not divisible by the required power of the factor");
      }
      result += *q;
    }
  }
  return result;
}

LatticePolytope combinatorial_mutation(const LatticePolytope& p, const LatticeVector& weight,
                                       std::span<const LatticeVector> factor_points) {
  const std::size_t n = p.dim();
  if (weight.dim() != n) throw DimensionMismatch("weight dimension mismatch");
  if (!weight.is_primitive()) throw InvalidArgument("mutation weight must be primitive");
  if (factor_points.empty()) throw InvalidArgument("empty factor polytope");
  for (const auto& f : factor_points) {
    if (f.dim() != n) throw DimensionMismatch("factor dimension mismatch");
    if (dot(weight, f) != 0) throw InvalidArgument("factor must lie in the weight hyperplane");
  }

  std::map<Integer, std::vector<LatticeVector>> slices;
  for (auto& x : lattice_points(p)) slices[dot(weight, x)].push_back(std::move(x));

  std::vector<LatticeVector> image;
  for (const auto& [h, pts] : slices) {
    if (h >= 0) {
      for (const auto& x : pts)
        for (const auto& f : factor_points) image.push_back(x + h * f);
      continue;
    }
    // Lattice points of the slice with |h| F removed.
    const Integer depth = -h;
    std::vector<LatticeVector> kept;
    for (const auto& y : pts) {
      LatticeVector x = y - depth * factor_points.front();
      bool fits = std::all_of(factor_points.begin(), factor_points.end(),
                              [&](const LatticeVector& f) { return p.contains(x + depth * f); });
      if (fits) kept.push_back(std::move(x));
    }
    std::sort(kept.begin(), kept.end());
    for (const auto& v : p.vertices()) {
      if (dot(weight, v) != h) continue;
      const bool covered =
          std::any_of(factor_points.begin(), factor_points.end(), [&](const LatticeVector& f) {
            return std::binary_search(kept.begin(), kept.end(), v - depth * f);
          });
      if (!covered) {
        throw NotMutable("slice at height " + h.get_str() + " does not admit the factor");
      }
    }
    image.insert(image.end(), kept.begin(), kept.end());
  }
  return convex_hull(image);
}

LaurentPolynomial canonical_form(const LaurentPolynomial& f) {
  const NormalFormResult nf = linear_normal_form(newton_polytope(f));
  std::optional<LaurentPolynomial> best;
  for (const auto& u : nf.maps) {
    LaurentPolynomial g = f.transformed(u);
    if (!best || g.terms() < best->terms()) best = std::move(g);
  }
  return *best;
}

namespace {

void primitive_vectors(std::size_t n, long bound, std::vector<LatticeVector>& out) {
  LatticeVector v(n);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      if (!v.is_zero() && v.is_primitive()) out.push_back(v);
      return;
    }
    for (long x = -bound; x <= bound; ++x) {
      v[i] = x;
      walk(i + 1);
    }
  };
  walk(0);
}

}  // namespace

std::vector<MutationNeighbour> mutation_neighbours(const LaurentPolynomial& f,
                                                   const MutationBounds& bounds) {
  std::vector<MutationNeighbour> out;
  if (bounds.max_factor_support < 2 || bounds.max_weight_entry < 1) return out;
  const std::size_t n = f.num_variables();

  std::vector<LatticeVector> candidates;
  primitive_vectors(n, bounds.max_weight_entry, candidates);

  std::set<LaurentPolynomial::Terms> seen;
  for (const auto& w : candidates) {
    for (const auto& u : candidates) {
      if (dot(w, u) != 0) continue;
      const LaurentPolynomial binomial =
          LaurentPolynomial::constant(n, 1) + LaurentPolynomial::monomial(u);
      for (std::size_t k = 1; k + 1 <= bounds.max_factor_support; ++k) {
        MutationData m(w, binomial.pow(static_cast<unsigned>(k)));
        LaurentPolynomial g(n);
        try {
          g = algebraic_mutation(f, m);
        } catch (const NotMutable&) {
          continue;
        }
        LaurentPolynomial key = g;
        try {
          key = canonical_form(g);
        } catch (const DegenerateHull&) {
        }
        if (!seen.insert(key.terms()).second) continue;
        out.push_back({std::move(m), std::move(g)});
      }
    }
  }
  return out;
}

}  // namespace fanoscape
