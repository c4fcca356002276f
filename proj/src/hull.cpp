// Incremental (beneath-beyond) convex hull over exact integers.
//
// Facets are kept as oriented hyperplanes together with the set of retained
// input points lying on them. A point strictly outside some facet is added;
// the horizon ridges are found as intersections of a visible and a
// non-visible facet whose common points have affine dimension n-2. A point
// coplanar with a non-visible facet extends that facet instead of creating a
// new one, which is how non-simplicial facets arise.

#include <algorithm>
#include <set>

#include "fanoscape/errors.hpp"
#include "fanoscape/polytope.hpp"

namespace fanoscape {
namespace {

struct Facet {
  Halfspace plane;
  std::vector<std::size_t> on;  // indices into retained points, sorted
};

bool strictly_outside(const Halfspace& h, const LatticeVector& p) {
  return dot(h.normal, p) > h.offset;
}

bool on_plane(const Halfspace& h, const LatticeVector& p) { return dot(h.normal, p) == h.offset; }

// Orients the hyperplane through `pts` so that `ref / scale` lies strictly inside.
Halfspace oriented_plane(const std::vector<LatticeVector>& pts, const LatticeVector& ref,
                         const Integer& scale) {
  LatticeVector normal = hyperplane_normal(pts);
  Integer offset = dot(normal, pts.front());
  if (dot(normal, ref) > scale * offset) {
    normal = -normal;
    offset = -offset;
  }
  return {std::move(normal), std::move(offset)};
}

// Picks up to `count` affinely independent points among `idx`.
std::vector<LatticeVector> independent_subset(const std::vector<LatticeVector>& pts,
                                              const std::vector<std::size_t>& idx,
                                              std::size_t count) {
  std::vector<LatticeVector> out;
  if (idx.empty()) return out;
  const LatticeVector& base = pts[idx.front()];
  out.push_back(base);
  RankTracker t(base.dim());
  for (std::size_t k = 1; k < idx.size() && out.size() < count; ++k) {
    if (t.add(pts[idx[k]] - base)) out.push_back(pts[idx[k]]);
  }
  return out;
}

std::vector<std::size_t> common(const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Points extreme in a few fixed directions are processed first; they are
// always vertices, and seeding with them keeps the number of retained
// non-vertex points small on large inputs.
std::vector<std::size_t> extreme_first_order(const std::vector<LatticeVector>& pts) {
  const std::size_t n = pts.front().dim();
  std::vector<LatticeVector> directions;
  for (std::size_t i = 0; i < n; ++i) {
    directions.push_back(LatticeVector::unit(n, i));
    directions.push_back(-LatticeVector::unit(n, i));
  }
  LatticeVector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  directions.push_back(ones);
  directions.push_back(-ones);

  std::vector<char> picked(pts.size(), 0);
  std::vector<std::size_t> order;
  for (const auto& dir : directions) {
    std::size_t best = 0;
    Integer best_val = dot(dir, pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      Integer v = dot(dir, pts[i]);
      // pts is sorted, so ties resolve to the lexicographically largest point.
      if (v >= best_val) {
        best_val = v;
        best = i;
      }
    }
    if (!picked[best]) {
      picked[best] = 1;
      order.push_back(best);
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!picked[i]) order.push_back(i);
  return order;
}

}  // namespace

LatticePolytope convex_hull(std::span<const LatticeVector> input) {
  if (input.empty()) throw DegenerateHull("convex hull of an empty point set");
  const std::size_t n = input.front().dim();
  if (n == 0) throw DegenerateHull("zero-dimensional ambient lattice");
  for (const auto& p : input)
    if (p.dim() != n) throw DimensionMismatch("points of different dimensions");

  std::vector<LatticeVector> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (n == 1) {
    if (pts.size() < 2) throw DegenerateHull("points are not full-dimensional");
    const LatticeVector& lo = pts.front();
    const LatticeVector& hi = pts.back();
    std::vector<Halfspace> facets{{LatticeVector{-1}, -lo[0]}, {LatticeVector{1}, hi[0]}};
    std::sort(facets.begin(), facets.end());
    return LatticePolytope(1, {lo, hi}, std::move(facets));
  }

  const std::vector<std::size_t> order = extreme_first_order(pts);

  // Initial simplex.
  std::vector<std::size_t> simplex{order.front()};
  {
    RankTracker t(n);
    for (std::size_t k = 1; k < order.size() && simplex.size() < n + 1; ++k) {
      if (t.add(pts[order[k]] - pts[order.front()])) simplex.push_back(order[k]);
    }
    if (simplex.size() < n + 1) {
      for (std::size_t i = 0; i < pts.size() && simplex.size() < n + 1; ++i) {
        if (t.add(pts[i] - pts[order.front()])) simplex.push_back(i);
      }
    }
    if (simplex.size() < n + 1) throw DegenerateHull("points are not full-dimensional");
  }

  LatticeVector ref(n);
  for (std::size_t idx : simplex) ref += pts[idx];
  const Integer scale = static_cast<long>(n + 1);

  std::vector<LatticeVector> retained;
  for (std::size_t idx : simplex) retained.push_back(pts[idx]);

  std::vector<Facet> facets;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<LatticeVector> face;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != skip) face.push_back(retained[k]);
    Facet f{oriented_plane(face, ref, scale), {}};
    for (std::size_t k = 0; k <= n; ++k)
      if (k != skip) f.on.push_back(k);
    facets.push_back(std::move(f));
  }

  std::vector<char> in_simplex(pts.size(), 0);
  for (std::size_t idx : simplex) in_simplex[idx] = 1;

  for (std::size_t idx : order) {
    if (in_simplex[idx]) continue;
    const LatticeVector& p = pts[idx];

    std::vector<std::size_t> visible, hidden;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      (strictly_outside(facets[f].plane, p) ? visible : hidden).push_back(f);
    }
    if (visible.empty()) continue;

    const std::size_t new_index = retained.size();
    std::vector<Facet> created;
    std::set<Halfspace> created_planes;
    for (std::size_t vf : visible) {
      for (std::size_t hf : hidden) {
        std::vector<std::size_t> ridge = common(facets[vf].on, facets[hf].on);
        if (ridge.size() + 1 < n) continue;
        std::vector<LatticeVector> basis = independent_subset(retained, ridge, n - 1);
        if (basis.size() != n - 1) continue;
        if (on_plane(facets[hf].plane, p)) continue;
        basis.push_back(p);
        Halfspace plane = oriented_plane(basis, ref, scale);
        if (!created_planes.insert(plane).second) continue;
        created.push_back({std::move(plane), {}});
      }
    }

    retained.push_back(p);
    std::vector<Facet> next;
    next.reserve(hidden.size() + created.size());
    for (std::size_t hf : hidden) {
      Facet f = std::move(facets[hf]);
      if (on_plane(f.plane, p)) f.on.push_back(new_index);
      next.push_back(std::move(f));
    }
    for (auto& f : created) {
      for (std::size_t k = 0; k < retained.size(); ++k)
        if (on_plane(f.plane, retained[k])) f.on.push_back(k);
      next.push_back(std::move(f));
    }
    facets = std::move(next);
  }

  // A retained point is a vertex iff the normals of its facets have rank n.
  std::vector<LatticeVector> vertices;
  for (std::size_t k = 0; k < retained.size(); ++k) {
    RankTracker t(n);
    for (const auto& f : facets) {
      if (std::binary_search(f.on.begin(), f.on.end(), k)) t.add(f.plane.normal);
    }
    if (t.rank() == n) vertices.push_back(retained[k]);
  }
  std::sort(vertices.begin(), vertices.end());

  std::vector<Halfspace> planes;
  planes.reserve(facets.size());
  for (auto& f : facets) planes.push_back(std::move(f.plane));
  std::sort(planes.begin(), planes.end());
  return LatticePolytope(n, std::move(vertices), std::move(planes));
}

}  // namespace fanoscape
