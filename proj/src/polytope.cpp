#include "fanoscape/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fanoscape/errors.hpp"

namespace fanoscape {

// --- UnimodularMap -----------------------------------------------------------

UnimodularMap::UnimodularMap(IntMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n == 0) throw InvalidArgument("unimodular map of dimension 0");
  for (const auto& row : matrix_)
    if (row.size() != n) throw InvalidArgument("unimodular map must be square");
  const Integer det = determinant(matrix_);
  if (det != 1 && det != -1) throw InvalidArgument("matrix is not unimodular");
}

UnimodularMap UnimodularMap::identity(std::size_t n) { return UnimodularMap(identity_matrix(n)); }

LatticeVector UnimodularMap::apply(const LatticeVector& v) const {
  return fanoscape::apply(matrix_, v);
}

DualVector UnimodularMap::apply_dual(const DualVector& u) const {
  const IntMatrix inv_t = transpose(inverse().matrix());
  DualVector out(u.dim());
  for (std::size_t i = 0; i < inv_t.size(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j) out[i] += inv_t[i][j] * u[j];
  return out;
}

UnimodularMap UnimodularMap::inverse() const {
  const auto inv = fanoscape::inverse(matrix_);
  IntMatrix m(dim(), std::vector<Integer>(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m[i][j] = (*inv)[i][j].get_num();
  return UnimodularMap(std::move(m));
}

UnimodularMap UnimodularMap::transposed() const { return UnimodularMap(transpose(matrix_)); }

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
  return UnimodularMap(multiply(matrix_, inner.matrix_));
}

// --- lattice point enumeration -------------------------------------------------

namespace detail {
namespace {

struct Scanner {
  const std::vector<RationalHalfspace>& hs;
  const std::vector<Integer>& lo;
  const std::vector<Integer>& hi;
  std::size_t n;
  // rest_min[j][h]: minimum of sum_{i >= j} a_i x_i over the box.
  std::vector<std::vector<Integer>> rest_min;
  std::vector<Integer> partial;
  LatticeVector point;

  Scanner(const std::vector<RationalHalfspace>& h, const std::vector<Integer>& l,
          const std::vector<Integer>& u)
      : hs(h), lo(l), hi(u), n(l.size()), point(l.size()) {
    rest_min.assign(n + 1, std::vector<Integer>(hs.size(), Integer(0)));
    for (std::size_t j = n; j-- > 0;) {
      for (std::size_t k = 0; k < hs.size(); ++k) {
        const Integer& a = hs[k].normal[j];
        rest_min[j][k] = rest_min[j + 1][k] + (a > 0 ? Integer(a * lo[j]) : Integer(a * hi[j]));
      }
    }
    partial.assign(hs.size(), Integer(0));
  }

  // Interval of the last coordinate; empty when lower > upper.
  std::pair<Integer, Integer> last_range() const {
    Integer lower = lo[n - 1];
    Integer upper = hi[n - 1];
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const Integer& a = hs[k].normal[n - 1];
      const Rational slack = hs[k].bound - partial[k];
      if (a > 0) {
        upper = std::min(upper, floor_of(slack / a));
      } else if (a < 0) {
        lower = std::max(lower, ceil_of(slack / a));
      } else if (slack < 0) {
        return {Integer(1), Integer(0)};
      }
    }
    return {lower, upper};
  }

  bool feasible(std::size_t next) const {
    for (std::size_t k = 0; k < hs.size(); ++k)
      if (partial[k] + rest_min[next][k] > hs[k].bound) return false;
    return true;
  }

  template <class Leaf>
  void scan(std::size_t j, Leaf&& leaf) {
    if (j + 1 == n) {
      leaf(last_range());
      return;
    }
    for (Integer x = lo[j]; x <= hi[j]; ++x) {
      point[j] = x;
      for (std::size_t k = 0; k < hs.size(); ++k) partial[k] += hs[k].normal[j] * x;
      if (feasible(j + 1)) scan(j + 1, leaf);
      for (std::size_t k = 0; k < hs.size(); ++k) partial[k] -= hs[k].normal[j] * x;
    }
  }
};

void check_box(const std::vector<RationalHalfspace>& hs, const std::vector<Integer>& lo,
               const std::vector<Integer>& hi) {
  if (lo.empty() || lo.size() != hi.size()) throw DimensionMismatch("invalid box");
  for (const auto& h : hs)
    if (h.normal.dim() != lo.size()) throw DimensionMismatch("halfspace dimension mismatch");
}

}  // namespace

void for_each_lattice_point(const std::vector<RationalHalfspace>& halfspaces,
                            const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                            const std::function<void(const LatticeVector&)>& visit) {
  check_box(halfspaces, lo, hi);
  Scanner s(halfspaces, lo, hi);
  s.scan(0, [&](const std::pair<Integer, Integer>& range) {
    for (Integer x = range.first; x <= range.second; ++x) {
      s.point[s.n - 1] = x;
      visit(s.point);
    }
  });
}

Integer count_lattice_points(const std::vector<RationalHalfspace>& halfspaces,
                             const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
  check_box(halfspaces, lo, hi);
  Scanner s(halfspaces, lo, hi);
  Integer total = 0;
  s.scan(0, [&](const std::pair<Integer, Integer>& range) {
    if (range.second >= range.first) total += range.second - range.first + 1;
  });
  return total;
}

}  // namespace detail

namespace {

std::vector<detail::RationalHalfspace> closed_halfspaces(const LatticePolytope& p) {
  std::vector<detail::RationalHalfspace> hs;
  for (const auto& f : p.facets()) hs.push_back({f.normal, Rational(f.offset)});
  return hs;
}

std::vector<detail::RationalHalfspace> open_halfspaces(const LatticePolytope& p) {
  std::vector<detail::RationalHalfspace> hs;
  for (const auto& f : p.facets()) hs.push_back({f.normal, Rational(f.offset - 1)});
  return hs;
}

void vertex_box(const LatticePolytope& p, std::vector<Integer>& lo, std::vector<Integer>& hi) {
  lo = p.vertices().front().coords();
  hi = lo;
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
}

std::vector<detail::RationalHalfspace> dilated_halfspaces(const RationalPolytope& q,
                                                          const Integer& k) {
  // <u, normal> >= k level  <=>  (-normal) . u <= -k level
  std::vector<detail::RationalHalfspace> hs;
  for (const auto& f : q.facets()) hs.push_back({-f.normal, Rational(-k * f.level)});
  return hs;
}

void dilated_box(const RationalPolytope& q, const Integer& k, std::vector<Integer>& lo,
                 std::vector<Integer>& hi) {
  const std::size_t n = q.dim();
  std::vector<Rational> rlo = q.vertices().front().coords();
  std::vector<Rational> rhi = rlo;
  for (const auto& v : q.vertices()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] < rlo[i]) rlo[i] = v[i];
      if (v[i] > rhi[i]) rhi[i] = v[i];
    }
  }
  lo.resize(n);
  hi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ceil_of(k * rlo[i]);
    hi[i] = floor_of(k * rhi[i]);
  }
}

}  // namespace

// --- LatticePolytope -----------------------------------------------------------

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<LatticeVector> vertices,
                                 std::vector<Halfspace> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

bool LatticePolytope::contains(const LatticeVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Halfspace& f) { return dot(f.normal, x) <= f.offset; });
}

bool LatticePolytope::contains_strictly(const LatticeVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Halfspace& f) { return dot(f.normal, x) < f.offset; });
}

std::vector<LatticeVector> LatticePolytope::facet_vertices(const Halfspace& facet) const {
  std::vector<LatticeVector> out;
  for (const auto& v : vertices_)
    if (dot(facet.normal, v) == facet.offset) out.push_back(v);
  return out;
}

LatticePolytope LatticePolytope::transformed(const UnimodularMap& u) const {
  if (u.dim() != dim_) throw DimensionMismatch("map and polytope dimensions differ");
  std::vector<LatticeVector> image;
  image.reserve(vertices_.size());
  for (const auto& v : vertices_) image.push_back(u.apply(v));
  return convex_hull(image);
}

LatticePolytope LatticePolytope::dilated(const Integer& k) const {
  if (k <= 0) throw InvalidArgument("dilation factor must be positive");
  std::vector<LatticeVector> image;
  for (const auto& v : vertices_) image.push_back(k * v);
  return convex_hull(image);
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p) {
  std::vector<Integer> lo, hi;
  vertex_box(p, lo, hi);
  std::vector<LatticeVector> out;
  detail::for_each_lattice_point(closed_halfspaces(p), lo, hi,
                                 [&](const LatticeVector& x) { out.push_back(x); });
  return out;
}

std::vector<LatticeVector> interior_lattice_points(const LatticePolytope& p) {
  std::vector<Integer> lo, hi;
  vertex_box(p, lo, hi);
  std::vector<LatticeVector> out;
  detail::for_each_lattice_point(open_halfspaces(p), lo, hi,
                                 [&](const LatticeVector& x) { out.push_back(x); });
  return out;
}

std::vector<LatticeVector> lattice_points(const RationalPolytope& q) {
  std::vector<Integer> lo, hi;
  dilated_box(q, 1, lo, hi);
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < q.dim(); ++i)
    if (lo[i] > hi[i]) return out;
  detail::for_each_lattice_point(dilated_halfspaces(q, 1), lo, hi,
                                 [&](const LatticeVector& x) { out.push_back(x); });
  return out;
}

std::size_t count_lattice_points(const RationalPolytope& q, const Integer& dilation) {
  if (dilation < 0) throw InvalidArgument("negative dilation");
  std::vector<Integer> lo, hi;
  dilated_box(q, dilation, lo, hi);
  for (std::size_t i = 0; i < q.dim(); ++i)
    if (lo[i] > hi[i]) return 0;
  const Integer c = detail::count_lattice_points(dilated_halfspaces(q, dilation), lo, hi);
  return c.get_ui();
}

// --- RationalPolytope ------------------------------------------------------------

RationalPolytope::RationalPolytope(std::size_t dim, std::vector<DualVector> vertices,
                                   std::vector<RationalFacet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

RationalPolytope RationalPolytope::from_vertices(std::span<const DualVector> vertices) {
  if (vertices.empty()) throw DegenerateHull("rational polytope without vertices");
  Integer denom = 1;
  for (const auto& v : vertices) denom = lcm(denom, v.denominator());
  std::vector<LatticeVector> scaled;
  for (const auto& v : vertices) {
    std::vector<Integer> c;
    for (const auto& q : v.coords()) c.push_back(Rational(q * denom).get_num());
    scaled.emplace_back(std::move(c));
  }
  const LatticePolytope hull = convex_hull(scaled);
  std::vector<DualVector> verts;
  for (const auto& v : hull.vertices()) {
    std::vector<Rational> c;
    for (const auto& x : v) c.emplace_back(Rational(x, denom));
    for (auto& q : c) q.canonicalize();
    verts.emplace_back(std::move(c));
  }
  std::vector<RationalFacet> facets;
  for (const auto& f : hull.facets()) {
    Rational level(-f.offset, denom);
    level.canonicalize();
    facets.push_back({-f.normal, level});
  }
  return from_descriptions(std::move(verts), std::move(facets));
}

RationalPolytope RationalPolytope::from_descriptions(std::vector<DualVector> vertices,
                                                     std::vector<RationalFacet> facets) {
  if (vertices.empty() || facets.empty()) throw DegenerateHull("empty polytope description");
  const std::size_t n = vertices.front().dim();
  for (const auto& v : vertices)
    if (v.dim() != n) throw DimensionMismatch("vertices of different dimensions");
  for (const auto& f : facets)
    if (f.normal.dim() != n) throw DimensionMismatch("facet normal dimension mismatch");

  for (const auto& f : facets) {
    std::vector<DualVector> tight;
    for (const auto& v : vertices) {
      const Rational val = dot(v, f.normal);
      if (val < f.level) throw InvalidArgument("vertex " + to_string(v) + " violates a facet");
      if (val == f.level) tight.push_back(v);
    }
    // The tight vertices must span a hyperplane.
    if (tight.size() < n) throw InvalidArgument("facet does not carry enough vertices");
    RankTracker t(n);
    const Integer d = [&] {
      Integer l = 1;
      for (const auto& v : tight) l = lcm(l, v.denominator());
      return l;
    }();
    auto scaled = [&](const DualVector& v) {
      std::vector<Integer> c;
      for (const auto& q : v.coords()) c.push_back(Rational(q * d).get_num());
      return LatticeVector(std::move(c));
    };
    const LatticeVector base = scaled(tight.front());
    for (std::size_t i = 1; i < tight.size(); ++i) t.add(scaled(tight[i]) - base);
    if (t.rank() != n - 1) throw InvalidArgument("facet vertices do not span a hyperplane");
  }
  for (const auto& v : vertices) {
    RankTracker t(n);
    for (const auto& f : facets)
      if (dot(v, f.normal) == f.level) t.add(f.normal);
    if (t.rank() != n) throw InvalidArgument("point " + to_string(v) + " is not a vertex");
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return RationalPolytope(n, std::move(vertices), std::move(facets));
}

bool RationalPolytope::contains(const DualVector& u) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const RationalFacet& f) { return dot(u, f.normal) >= f.level; });
}

bool RationalPolytope::contains(const LatticeVector& u) const { return contains(DualVector(u)); }

bool RationalPolytope::contains_origin_strictly() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [](const RationalFacet& f) { return f.level < 0; });
}

bool RationalPolytope::is_integral() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const DualVector& v) { return v.is_integral(); });
}

LatticePolytope RationalPolytope::to_lattice_polytope() const {
  std::vector<LatticeVector> pts;
  for (const auto& v : vertices_) pts.push_back(v.to_lattice());
  return convex_hull(pts);
}

// --- duality and predicates ----------------------------------------------------------

bool is_fano(const LatticePolytope& p) {
  for (const auto& f : p.facets())
    if (f.offset <= 0) return false;
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [](const LatticeVector& v) { return v.is_primitive(); });
}

namespace {

void require_origin_interior(const LatticePolytope& p) {
  for (const auto& f : p.facets())
    if (f.offset <= 0) throw OriginNotInterior("the origin is not an interior point");
}

}  // namespace

RationalPolytope dual(const LatticePolytope& p) {
  require_origin_interior(p);
  const std::size_t n = p.dim();
  std::vector<DualVector> vertices;
  for (const auto& f : p.facets()) {
    DualVector u(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = Rational(-f.normal[i], f.offset);
      u[i].canonicalize();
    }
    vertices.push_back(std::move(u));
  }
  std::vector<RationalFacet> facets;
  for (const auto& v : p.vertices()) {
    const Integer g = v.content();
    Rational level(-1, g);
    level.canonicalize();
    facets.push_back({v.primitive(), level});
  }
  return RationalPolytope::from_descriptions(std::move(vertices), std::move(facets));
}

RationalPolytope dual(const RationalPolytope& q) {
  if (!q.contains_origin_strictly()) throw OriginNotInterior("the origin is not an interior point");
  const std::size_t n = q.dim();
  std::vector<DualVector> vertices;
  for (const auto& f : q.facets()) {
    DualVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = Rational(f.normal[i]) / (-f.level);
    vertices.push_back(std::move(u));
  }
  std::vector<RationalFacet> facets;
  for (const auto& v : q.vertices()) {
    const Integer d = v.denominator();
    std::vector<Integer> w;
    for (const auto& c : v.coords()) w.push_back(Rational(c * d).get_num());
    LatticeVector lw(std::move(w));
    const Integer g = lw.content();
    Rational level(-d, g);
    level.canonicalize();
    facets.push_back({lw.primitive(), level});
  }
  return RationalPolytope::from_descriptions(std::move(vertices), std::move(facets));
}

bool is_reflexive(const LatticePolytope& p) { return dual(p).is_integral(); }

const char* to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Smooth:
      return "smooth";
    case SingularityClass::Terminal:
      return "terminal";
    case SingularityClass::Canonical:
      return "canonical";
    case SingularityClass::WorseThanCanonical:
      return "worse-than-canonical";
  }
  return "unknown";
}

SingularityClass singularity_class(const LatticePolytope& p) {
  require_origin_interior(p);
  const std::size_t n = p.dim();
  const LatticeVector origin(n);

  const auto interior = interior_lattice_points(p);
  const bool canonical = interior.size() == 1 && interior.front() == origin;
  if (!canonical) return SingularityClass::WorseThanCanonical;

  const bool terminal = lattice_points(p).size() == p.vertices().size() + 1;
  if (!terminal) return SingularityClass::Canonical;

  // Smooth: every facet is a simplex whose vertices form a lattice basis.
  for (const auto& f : p.facets()) {
    const auto verts = p.facet_vertices(f);
    if (verts.size() != n) return SingularityClass::Terminal;
    const Integer det = determinant(columns_to_matrix(verts));
    if (det != 1 && det != -1) return SingularityClass::Terminal;
  }
  return SingularityClass::Smooth;
}

// --- normal form ---------------------------------------------------------------------

// For every ordered n-tuple of linearly independent vertices, the unimodular
// map U with U * [tuple] in Hermite normal form is unique. The normal form is
// the lexicographically least sorted vertex list U * V over all such tuples.
// Equivalent polytopes have the same set of candidate images, so this is a
// complete invariant of the GL(n,Z)-orbit.
NormalFormResult linear_normal_form(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  const auto& verts = p.vertices();
  std::optional<std::vector<LatticeVector>> best;
  std::vector<UnimodularMap> maps;
  std::set<IntMatrix> seen;

  std::vector<std::size_t> chosen;
  std::vector<char> used(verts.size(), 0);

  auto consider = [&]() {
    std::vector<LatticeVector> cols;
    for (std::size_t idx : chosen) cols.push_back(verts[idx]);
    const HermiteForm hf = hermite_normal_form(columns_to_matrix(cols));
    std::vector<LatticeVector> image;
    image.reserve(verts.size());
    for (const auto& v : verts) image.push_back(apply(hf.transform, v));
    std::sort(image.begin(), image.end());
    if (!best || image < *best) {
      best = std::move(image);
      maps.clear();
      seen.clear();
    } else if (image != *best) {
      return;
    }
    if (seen.insert(hf.transform).second) maps.emplace_back(hf.transform);
  };

  // Depth-first over ordered tuples, pruning linearly dependent prefixes.
  std::function<void(const RankTracker&)> extend = [&](const RankTracker& tracker) {
    if (chosen.size() == n) {
      consider();
      return;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (used[i]) continue;
      RankTracker next = tracker;
      if (!next.add(verts[i])) continue;
      used[i] = 1;
      chosen.push_back(i);
      extend(next);
      chosen.pop_back();
      used[i] = 0;
    }
  };
  extend(RankTracker(n));
  if (!best) throw DegenerateHull("vertices do not span the lattice space");

  return {convex_hull(*best), std::move(maps)};
}

LatticePolytope normal_form(const LatticePolytope& p) {
  require_origin_interior(p);
  return linear_normal_form(p).polytope;
}

}  // namespace fanoscape
