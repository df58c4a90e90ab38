#ifndef NR_CONVEX_POLYGON_HPP
#define NR_CONVEX_POLYGON_HPP

#include <span>
#include <vector>

#include "nr/complex_matrix.hpp"

namespace nr {

// Closed half-plane { (x,y) : nx*x + ny*y <= c }.
struct HalfPlane {
    double nx, ny, c;
};

// Convex polygon as a counterclockwise vertex list. May be empty, a single
// point, or a segment; degenerate() reports the flat cases. Strictly convex:
// construction drops duplicates and collinear interior vertices.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    // Andrew monotone chain over an arbitrary point set.
    static ConvexPolygon hull(std::span<const cx> points);

    const std::vector<cx>& vertices() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    bool degenerate() const { return v_.size() < 3; }

    /// Support value h(gamma) = max over the polygon of Re(e^{-i gamma} z).
    double support(double gamma) const;
    /// A vertex attaining the support value.
    cx support_point(double gamma) const;

    // Positive inside, negative outside; magnitude is the true Euclidean
    // distance to the boundary for exterior points.
    double signed_distance(cx p) const;
    bool contains(cx p, double tol = 0.0) const;

    // Intersection by successive half-plane clipping; empty result is valid.
    ConvexPolygon intersect(const ConvexPolygon& other) const;

    // Half-plane description of the region (degenerate polygons included).
    std::vector<HalfPlane> half_planes() const;

    // Boundary sampled to roughly `total` points (all vertices kept, edges
    // subdivided proportionally to length).
    std::vector<cx> boundary_points(int total) const;

private:
    std::vector<cx> v_;
};

// Clip a convex loop against one half-plane (Sutherland-Hodgman step).
std::vector<cx> clip_half_plane(std::span<const cx> loop, const HalfPlane& hp);

// Intersection of many half-planes in O(n log n) (deque sweep over normals
// sorted by angle). `bound` must be a radius that contains the intersection;
// it seeds the fallback clipping path for degenerate configurations.
ConvexPolygon intersect_half_planes(std::span<const HalfPlane> planes, double bound);

// Exact Hausdorff distance between two nonempty convex polygons: for convex
// sets the directed distance is attained at a vertex, so the vertex sweep is
// exact; a coarse support-function grid is folded in as a cross-check bound.
double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q);

} // namespace nr

#endif
