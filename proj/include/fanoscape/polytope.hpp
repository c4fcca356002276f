#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fanoscape/arith.hpp"

namespace fanoscape {

/// Closed halfspace {x : normal . x <= offset} with a primitive integral normal.
struct Halfspace {
  LatticeVector normal;
  Integer offset;

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Linear automorphism of the lattice (determinant +-1).
class UnimodularMap {
 public:
  explicit UnimodularMap(IntMatrix matrix);
  static UnimodularMap identity(std::size_t n);

  std::size_t dim() const noexcept { return matrix_.size(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  LatticeVector apply(const LatticeVector& v) const;
  /// Image of a point in the dual space under the contragredient map (U^T)^{-1}.
  DualVector apply_dual(const DualVector& u) const;
  UnimodularMap inverse() const;
  UnimodularMap transposed() const;
  UnimodularMap compose(const UnimodularMap& inner) const;  // this o inner

  friend bool operator==(const UnimodularMap& a, const UnimodularMap& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  IntMatrix matrix_;
};

class LatticePolytope;

/// Full-dimensional lattice polytope, stored by its vertices in lexicographic
/// order together with its facet inequalities.
class LatticePolytope {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& vertices() const noexcept { return vertices_; }
  /// Facets as normal . x <= offset, sorted.
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }

  bool contains(const LatticeVector& x) const;
  bool contains_strictly(const LatticeVector& x) const;
  /// Vertices lying on the given facet.
  std::vector<LatticeVector> facet_vertices(const Halfspace& facet) const;

  LatticePolytope transformed(const UnimodularMap& u) const;
  LatticePolytope dilated(const Integer& k) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const LatticePolytope& a, const LatticePolytope& b) { return !(a == b); }
  friend bool operator<(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ < b.vertices_;
  }

  friend LatticePolytope convex_hull(std::span<const LatticeVector> points);

 private:
  LatticePolytope(std::size_t dim, std::vector<LatticeVector> vertices,
                  std::vector<Halfspace> facets);

  std::size_t dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<Halfspace> facets_;
};

/// Facet {u : <u, normal> >= level} of a rational polytope.
struct RationalFacet {
  LatticeVector normal;
  Rational level;

  friend bool operator==(const RationalFacet& a, const RationalFacet& b) {
    return a.normal == b.normal && a.level == b.level;
  }
  friend bool operator<(const RationalFacet& a, const RationalFacet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.level < b.level;
  }
};

/// Full-dimensional polytope with rational vertices, carrying both its vertex
/// and facet descriptions. Construction cross-checks the two.
class RationalPolytope {
 public:
  static RationalPolytope from_vertices(std::span<const DualVector> vertices);
  /// Trusts neither side: throws InvalidArgument if the two descriptions disagree.
  static RationalPolytope from_descriptions(std::vector<DualVector> vertices,
                                            std::vector<RationalFacet> facets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<DualVector>& vertices() const noexcept { return vertices_; }
  const std::vector<RationalFacet>& facets() const noexcept { return facets_; }

  bool contains(const DualVector& u) const;
  bool contains(const LatticeVector& u) const;
  bool contains_origin_strictly() const;
  bool is_integral() const;
  /// Only valid when is_integral().
  LatticePolytope to_lattice_polytope() const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  RationalPolytope(std::size_t dim, std::vector<DualVector> vertices,
                   std::vector<RationalFacet> facets);

  std::size_t dim_ = 0;
  std::vector<DualVector> vertices_;
  std::vector<RationalFacet> facets_;
};

enum class SingularityClass { Smooth, Terminal, Canonical, WorseThanCanonical };

const char* to_string(SingularityClass c);

/// Minimal vertex set of the points; throws DegenerateHull unless the points
/// are full-dimensional.
LatticePolytope convex_hull(std::span<const LatticeVector> points);
inline LatticePolytope convex_hull(const std::vector<LatticeVector>& points) {
  return convex_hull(std::span<const LatticeVector>(points));
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p);
std::vector<LatticeVector> interior_lattice_points(const LatticePolytope& p);
std::vector<LatticeVector> lattice_points(const RationalPolytope& q);
std::size_t count_lattice_points(const RationalPolytope& q, const Integer& dilation = 1);

bool is_fano(const LatticePolytope& p);
RationalPolytope dual(const LatticePolytope& p);
RationalPolytope dual(const RationalPolytope& q);
bool is_reflexive(const LatticePolytope& p);
SingularityClass singularity_class(const LatticePolytope& p);

/// Canonical representative of the GL(n,Z)-orbit of a Fano polytope.
LatticePolytope normal_form(const LatticePolytope& p);

/// Normal form plus every unimodular map carrying the input onto it.
struct NormalFormResult {
  LatticePolytope polytope;
  std::vector<UnimodularMap> maps;
};
/// Same construction without the origin-interior precondition (linear
/// equivalence only); used for Laurent polynomial canonical forms.
NormalFormResult linear_normal_form(const LatticePolytope& p);

/// All GL(2,Z) classes of Fano polygons with exactly `interior_points` interior
/// lattice points (the origin among them), sorted by normal form. The search
/// box is [-R, R]^2 with R = default_polygon_search_radius(interior_points)
/// unless an explicit radius is given.
std::vector<LatticePolytope> enumerate_fano_polygons(long interior_points,
                                                     std::optional<long> radius = std::nullopt);
long default_polygon_search_radius(long interior_points);

namespace detail {

/// Halfspace normal . x <= bound with a rational bound.
struct RationalHalfspace {
  LatticeVector normal;
  Rational bound;
};

/// Visits every integer point of the box [lo, hi] satisfying all halfspaces.
/// The last coordinate is solved for directly, so only the first n-1
/// coordinates of the box are scanned.
void for_each_lattice_point(const std::vector<RationalHalfspace>& halfspaces,
                            const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                            const std::function<void(const LatticeVector&)>& visit);
Integer count_lattice_points(const std::vector<RationalHalfspace>& halfspaces,
                             const std::vector<Integer>& lo, const std::vector<Integer>& hi);

}  // namespace detail

}  // namespace fanoscape
