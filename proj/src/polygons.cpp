// Exhaustive enumeration of Fano polygons with a prescribed number of
// interior lattice points.
//
// Vertices are chosen from the box [-R, R]^2 in counter-clockwise angular
// order around the origin. Every convex polygon with the origin in its
// interior is the union of the triangles (0, v_i, v_{i+1}), so its interior
// point count is 1 + sum of (interior points of each triangle, by Pick) +
// sum of (gcd(v_i) - 1) for the open segments (0, v_i). Every partial chain
// contributes a lower bound to the final count, which prunes the search.
// Box coordinates are tiny, so machine integers are exact here.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "fanoscape/errors.hpp"
#include "fanoscape/polytope.hpp"

namespace fanoscape {
namespace {

struct P2 {
  std::int64_t x, y;
};

std::int64_t cross(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }

std::int64_t content(const P2& a) { return std::gcd(std::llabs(a.x), std::llabs(a.y)); }

// Half-plane index then cross product: a strict total order by angle in [0, 2pi).
bool angle_less(const P2& a, const P2& b) {
  auto half = [](const P2& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  const std::int64_t c = cross(a, b);
  if (c != 0) return c > 0;
  return content(a) < content(b);
}

// Interior lattice points of the triangle (0, a, b) with cross(a, b) > 0.
std::int64_t triangle_interior(const P2& a, const P2& b) {
  const std::int64_t twice_area = cross(a, b);
  const std::int64_t boundary = content(a) + content(b) + content({b.x - a.x, b.y - a.y});
  return (twice_area - boundary + 2) / 2;
}

bool left_turn(const P2& a, const P2& b, const P2& c) {
  return cross({b.x - a.x, b.y - a.y}, {c.x - b.x, c.y - b.y}) > 0;
}

class PolygonSearch {
 public:
  PolygonSearch(long target, long radius) : extra_(target - 1) {
    for (long x = -radius; x <= radius; ++x)
      for (long y = -radius; y <= radius; ++y)
        if (x != 0 || y != 0) pts_.push_back({x, y});
    std::sort(pts_.begin(), pts_.end(), angle_less);
  }

  std::set<LatticePolytope> run() {
    for (std::size_t s = 0; s < pts_.size(); ++s) {
      const std::int64_t segment = content(pts_[s]) - 1;
      if (segment > extra_) continue;
      chain_ = {s};
      extend(segment);
    }
    return std::move(found_);
  }

 private:
  void extend(std::int64_t count) {
    const std::size_t last = chain_.back();
    for (std::size_t j = last + 1; j < pts_.size(); ++j) {
      const P2& a = pts_[last];
      const P2& b = pts_[j];
      if (cross(a, b) <= 0) continue;
      if (chain_.size() >= 2 && !left_turn(pts_[chain_[chain_.size() - 2]], a, b)) continue;
      const std::int64_t next = count + triangle_interior(a, b) + content(b) - 1;
      if (next > extra_) continue;
      chain_.push_back(j);
      try_close(next);
      extend(next);
      chain_.pop_back();
    }
  }

  void try_close(std::int64_t count) {
    if (chain_.size() < 3) return;
    const P2& first = pts_[chain_.front()];
    const P2& second = pts_[chain_[1]];
    const P2& last = pts_[chain_.back()];
    const P2& before = pts_[chain_[chain_.size() - 2]];
    if (cross(last, first) <= 0) return;
    if (!left_turn(before, last, first) || !left_turn(last, first, second)) return;
    if (count + triangle_interior(last, first) != extra_) return;

    std::vector<LatticeVector> verts;
    for (std::size_t idx : chain_) verts.push_back(LatticeVector{pts_[idx].x, pts_[idx].y});
    const LatticePolytope p = convex_hull(verts);
    if (!is_fano(p)) return;
    found_.insert(normal_form(p));
  }

  std::int64_t extra_;
  std::vector<P2> pts_;
  std::vector<std::size_t> chain_;
  std::set<LatticePolytope> found_;
};

}  // namespace

long default_polygon_search_radius(long interior_points) { return 2 * interior_points; }

std::vector<LatticePolytope> enumerate_fano_polygons(long interior_points,
                                                     std::optional<long> radius) {
  if (interior_points < 1) throw InvalidArgument("interior_points must be at least 1");
  const long r = radius.value_or(default_polygon_search_radius(interior_points));
  if (r < 1) throw InvalidArgument("search radius must be positive");
  std::set<LatticePolytope> classes = PolygonSearch(interior_points, r).run();
  return {classes.begin(), classes.end()};
}

}  // namespace fanoscape
