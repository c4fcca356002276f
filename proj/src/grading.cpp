#include "fanoscape/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "fanoscape/errors.hpp"

namespace fanoscape {

// --- TruncatedSeries -------------------------------------------------------------

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) throw InvalidArgument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// --- RationalGeneratingFunction ----------------------------------------------------

RationalGeneratingFunction::RationalGeneratingFunction(std::vector<Integer> numerator,
                                                       std::vector<std::int64_t> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (auto w : denominator_) {
    if (w == 0) throw ZeroWeight("denominator factor 1 - t^0");
    if (w < 0) throw InvalidArgument("denominator exponents must be positive");
  }
  while (numerator_.size() > 1 && numerator_.back() == 0) numerator_.pop_back();
  if (numerator_.empty()) numerator_.push_back(0);
}

TruncatedSeries RationalGeneratingFunction::expand(std::size_t order) const {
  // Expanded denominator, truncated.
  std::vector<Integer> den(order, Integer(0));
  if (order == 0) return TruncatedSeries(0);
  den[0] = 1;
  for (auto w : denominator_) {
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t i = order; i-- > step;) den[i] -= den[i - step];
  }
  TruncatedSeries out(order);
  for (std::size_t k = 0; k < order; ++k) {
    Rational acc = k < numerator_.size() ? Rational(numerator_[k]) : Rational(0);
    for (std::size_t i = 1; i <= k; ++i)
      if (den[i] != 0) acc -= den[i] * out[k - i];
    out[k] = acc;  // den[0] == 1
  }
  return out;
}

TruncatedSeries RationalGeneratingFunction::expand_geometric(std::size_t order) const {
  TruncatedSeries out(order);
  for (std::size_t k = 0; k < order && k < numerator_.size(); ++k) out[k] = numerator_[k];
  for (auto w : denominator_) {
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t k = step; k < order; ++k) out[k] += out[k - step];
  }
  return out;
}

RationalGeneratingFunction RationalGeneratingFunction::veronese(std::int64_t r) const {
  if (r < 1) throw InvalidArgument("veronese degree must be positive");
  // Rewrite every factor 1 - t^w as (1 - t^L) / (1 + t^w + ... + t^{L-w}) with
  // L = lcm(w, r); the denominator then only involves powers of t^r.
  std::vector<Integer> num = numerator_;
  std::vector<std::int64_t> den;
  for (auto w : denominator_) {
    const std::int64_t l = std::lcm(w, r);
    std::vector<Integer> next(num.size() + static_cast<std::size_t>(l - w), Integer(0));
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (num[i] == 0) continue;
      for (std::int64_t j = 0; j < l; j += w) next[i + static_cast<std::size_t>(j)] += num[i];
    }
    num = std::move(next);
    den.push_back(l / r);
  }
  std::vector<Integer> picked;
  for (std::size_t i = 0; i < num.size(); i += static_cast<std::size_t>(r)) picked.push_back(num[i]);
  return RationalGeneratingFunction(std::move(picked), std::move(den));
}

// --- cones -----------------------------------------------------------------------------

PointedCone::PointedCone(std::vector<LatticeVector> generators) {
  if (generators.empty()) throw DegenerateHull("cone without generators");
  dim_ = generators.front().dim();
  for (auto& g : generators) {
    if (g.dim() != dim_) throw DimensionMismatch("generators of different dimensions");
    if (g.is_zero()) throw InvalidArgument("zero cone generator");
    g = g.primitive();
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);

  std::vector<LatticeVector> pts = generators_;
  const LatticeVector origin(dim_);
  pts.push_back(origin);
  const LatticePolytope hull = convex_hull(pts);
  if (!std::binary_search(hull.vertices().begin(), hull.vertices().end(), origin)) {
    throw NotPointed("cone contains a line");
  }
  grading_ = LatticeVector(dim_);
  for (const auto& f : hull.facets()) {
    if (f.offset != 0) continue;
    facet_normals_.push_back(-f.normal);
    grading_ += -f.normal;
  }
}

bool PointedCone::contains(const LatticeVector& x) const {
  return std::all_of(facet_normals_.begin(), facet_normals_.end(),
                     [&](const LatticeVector& a) { return dot(a, x) >= 0; });
}

namespace {

// Nonzero lattice points of the half-open parallelepiped spanned by linearly
// independent generators. Coset representatives of Z^n / L come from a
// lower-triangular basis of L = G Z^n; each is folded back into the
// parallelepiped by taking fractional parts of its G-coordinates.
void parallelepiped_points(const std::vector<LatticeVector>& gens,
                           std::set<LatticeVector>& out) {
  const std::size_t n = gens.size();
  const IntMatrix g = columns_to_matrix(gens);
  const auto g_inv = inverse(g);
  // Row-style HNF of G^T gives U G^T = H, so G U^T = H^T is lower triangular.
  const HermiteForm hf = hermite_normal_form(transpose(g));
  std::vector<Integer> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = hf.hnf[i][i];

  LatticeVector rep(n);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      DualVector point(n);
      bool zero = true;
      for (std::size_t k = 0; k < n; ++k) {
        Rational lambda = 0;
        for (std::size_t j = 0; j < n; ++j) lambda += (*g_inv)[k][j] * rep[j];
        const Rational frac = lambda - Rational(floor_of(lambda));
        if (frac == 0) continue;
        zero = false;
        for (std::size_t j = 0; j < n; ++j) point[j] += frac * gens[k][j];
      }
      if (!zero) out.insert(point.to_lattice());
      return;
    }
    for (Integer x = 0; x < diag[i]; ++x) {
      rep[i] = x;
      walk(i + 1);
    }
  };
  walk(0);
}

}  // namespace

HilbertBasis hilbert_basis(const PointedCone& cone) {
  const std::size_t n = cone.dim();
  const auto& gens = cone.generators();

  // Every Hilbert basis element lies in a simplicial subcone spanned by
  // linearly independent generators (Caratheodory), where it is either a
  // generator or a parallelepiped point.
  std::set<LatticeVector> candidates(gens.begin(), gens.end());
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const RankTracker&)> choose = [&](std::size_t start,
                                                                    const RankTracker& t) {
    if (chosen.size() == n) {
      std::vector<LatticeVector> basis;
      for (std::size_t idx : chosen) basis.push_back(gens[idx]);
      parallelepiped_points(basis, candidates);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      RankTracker next = t;
      if (!next.add(gens[i])) continue;
      chosen.push_back(i);
      choose(i + 1, next);
      chosen.pop_back();
    }
  };
  choose(0, RankTracker(n));

  struct Graded {
    Integer grade;
    LatticeVector v;
  };
  std::vector<Graded> ordered;
  for (const auto& c : candidates) ordered.push_back({dot(cone.grading(), c), c});
  std::sort(ordered.begin(), ordered.end(), [](const Graded& a, const Graded& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    return a.v < b.v;
  });

  // x is reducible iff x - h lies in the cone for some basis element h of
  // smaller degree; those are all known by the time x is reached.
  std::vector<Graded> basis;
  for (const auto& c : ordered) {
    bool reducible = false;
    for (const auto& h : basis) {
      if (h.grade >= c.grade) break;
      if (cone.contains(c.v - h.v)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(c);
  }
  HilbertBasis hb{{}, cone};
  for (auto& b : basis) hb.elements.push_back(std::move(b.v));
  return hb;
}

// --- polytope invariants ------------------------------------------------------------------

TruncatedSeries ehrhart_series(const RationalPolytope& q, std::size_t order) {
  if (order < 1) throw InvalidArgument("ehrhart_series order must be at least 1");
  if (!q.contains(DualVector(q.dim()))) throw InvalidArgument("polytope must contain the origin");
  TruncatedSeries out(order);
  for (std::size_t k = 0; k < order; ++k) {
    out[k] = Rational(static_cast<unsigned long>(count_lattice_points(q, Integer(static_cast<unsigned long>(k)))));
  }
  return out;
}

PointedCone anticanonical_cone(const RationalPolytope& q) {
  if (q.dim() != 3) throw DimensionMismatch("anticanonical cone needs a 3-dimensional polytope");
  std::vector<LatticeVector> gens;
  for (const auto& v : q.vertices()) {
    const Integer d = v.denominator();
    LatticeVector lift(4);
    for (std::size_t i = 0; i < 3; ++i) lift[i] = Rational(v[i] * d).get_num();
    lift[3] = d;
    gens.push_back(lift.primitive());
  }
  return PointedCone(std::move(gens));
}

long genus(const LatticePolytope& p) {
  if (p.dim() != 3) throw DimensionMismatch("genus is defined for 3-dimensional polytopes");
  return static_cast<long>(count_lattice_points(dual(p))) - 2;
}

long codimension_estimate(const LatticePolytope& p) {
  if (p.dim() != 3) throw DimensionMismatch("codimension is defined for 3-dimensional polytopes");
  const HilbertBasis hb = hilbert_basis(anticanonical_cone(dual(p)));
  return static_cast<long>(hb.elements.size()) - 4;
}

RationalGeneratingFunction hilbert_series_complete_intersection(
    const std::vector<std::int64_t>& weights, const std::vector<std::int64_t>& degrees) {
  if (weights.empty()) throw InvalidArgument("at least one weight is required");
  for (auto w : weights) {
    if (w == 0) throw ZeroWeight("weights must be positive");
    if (w < 0) throw InvalidArgument("weights must be positive");
  }
  std::vector<Integer> num{Integer(1)};
  for (auto d : degrees) {
    if (d <= 0) throw InvalidArgument("degrees must be positive");
    std::vector<Integer> next(num.size() + static_cast<std::size_t>(d), Integer(0));
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + static_cast<std::size_t>(d)] -= num[i];
    }
    num = std::move(next);
  }
  return RationalGeneratingFunction(std::move(num), weights);
}

bool series_match(const RationalGeneratingFunction& h, const TruncatedSeries& s) {
  if (s.order() < 1) throw InvalidArgument("series must have order at least 1");
  return h.expand(s.order()) == s;
}

}  // namespace fanoscape
