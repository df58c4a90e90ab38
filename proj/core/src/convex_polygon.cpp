#include "nr/convex_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nr/errors.hpp"

namespace nr {

namespace {

double cross(cx o, cx a, cx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double coord_scale(std::span<const cx> pts) {
    double s = 0.0;
    for (const cx& p : pts) s = std::max({s, std::abs(p.real()), std::abs(p.imag())});
    return s;
}

double point_segment_distance(cx p, cx a, cx b) {
    const cx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

} // namespace

ConvexPolygon ConvexPolygon::hull(std::span<const cx> points) {
    ConvexPolygon out;
    if (points.empty()) return out;

    std::vector<cx> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](cx a, cx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });

    const double scale = coord_scale(pts);
    const double dedup_tol = 1e-12 * std::max(1.0, scale);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [dedup_tol](cx a, cx b) { return std::abs(a - b) <= dedup_tol; }),
              pts.end());

    if (pts.size() == 1) {
        out.v_ = pts;
        return out;
    }

    // cross products scale like length^2
    const double turn_tol = 1e-12 * std::max(1.0, scale * scale);

    std::vector<cx> h(2 * pts.size());
    std::size_t k = 0;
    for (const cx& p : pts) { // lower hull
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= turn_tol) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) { // upper hull
        const cx p = pts[i];
        while (k >= lower && cross(h[k - 2], h[k - 1], p) <= turn_tol) --k;
        h[k++] = p;
    }
    h.resize(k - 1); // last point repeats the first

    // collinear input collapses to its two extremes
    if (h.size() == 2 && std::abs(h[0] - h[1]) <= dedup_tol) h.resize(1);
    out.v_ = std::move(h);
    return out;
}

double ConvexPolygon::support(double gamma) const {
    if (empty()) throw input_error("support of empty polygon");
    const cx dir(std::cos(gamma), std::sin(gamma));
    double best = -std::numeric_limits<double>::infinity();
    for (const cx& v : v_) best = std::max(best, v.real() * dir.real() + v.imag() * dir.imag());
    return best;
}

cx ConvexPolygon::support_point(double gamma) const {
    if (empty()) throw input_error("support of empty polygon");
    const cx dir(std::cos(gamma), std::sin(gamma));
    double best = -std::numeric_limits<double>::infinity();
    cx arg = v_.front();
    for (const cx& v : v_) {
        const double d = v.real() * dir.real() + v.imag() * dir.imag();
        if (d > best) {
            best = d;
            arg = v;
        }
    }
    return arg;
}

double ConvexPolygon::signed_distance(cx p) const {
    if (empty()) throw input_error("signed_distance of empty polygon");
    if (v_.size() == 1) return -std::abs(p - v_[0]);
    if (v_.size() == 2) return -point_segment_distance(p, v_[0], v_[1]);

    const std::size_t n = v_.size();
    double min_line = std::numeric_limits<double>::infinity();
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
        const cx a = v_[i], b = v_[(i + 1) % n];
        const cx e = b - a;
        const double len = std::abs(e);
        if (len == 0.0) continue;
        // inward distance to the edge line (positive on the interior side)
        const double d = cross(a, b, p) / len;
        if (d < 0.0) inside = false;
        min_line = std::min(min_line, d);
    }
    if (inside) return min_line;

    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        dist = std::min(dist, point_segment_distance(p, v_[i], v_[(i + 1) % n]));
    return -dist;
}

bool ConvexPolygon::contains(cx p, double tol) const {
    return signed_distance(p) >= -tol;
}

std::vector<HalfPlane> ConvexPolygon::half_planes() const {
    std::vector<HalfPlane> hps;
    if (empty()) return hps;
    if (v_.size() == 1) {
        const cx p = v_[0];
        hps.push_back({1.0, 0.0, p.real()});
        hps.push_back({-1.0, 0.0, -p.real()});
        hps.push_back({0.0, 1.0, p.imag()});
        hps.push_back({0.0, -1.0, -p.imag()});
        return hps;
    }
    if (v_.size() == 2) {
        const cx a = v_[0], b = v_[1];
        cx e = b - a;
        e /= std::abs(e);
        const cx nrm(-e.imag(), e.real());
        // the carrier line, both sides
        hps.push_back({nrm.real(), nrm.imag(), nrm.real() * a.real() + nrm.imag() * a.imag()});
        hps.push_back({-nrm.real(), -nrm.imag(), -(nrm.real() * a.real() + nrm.imag() * a.imag())});
        // the end caps
        hps.push_back({e.real(), e.imag(), e.real() * b.real() + e.imag() * b.imag()});
        hps.push_back({-e.real(), -e.imag(), -(e.real() * a.real() + e.imag() * a.imag())});
        return hps;
    }
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cx a = v_[i], b = v_[(i + 1) % n];
        const cx e = b - a;
        // interior is left of a->b: outward normal (e.imag, -e.real)
        hps.push_back({e.imag(), -e.real(), e.imag() * a.real() - e.real() * a.imag()});
    }
    return hps;
}

std::vector<cx> clip_half_plane(std::span<const cx> loop, const HalfPlane& hp) {
    std::vector<cx> out;
    if (loop.empty()) return out;

    const double scale = coord_scale(loop);
    const double eps = 1e-11 * std::max(1.0, scale);
    auto value = [&hp](cx p) { return hp.nx * p.real() + hp.ny * p.imag() - hp.c; };

    if (loop.size() == 1) {
        if (value(loop[0]) <= eps) out.push_back(loop[0]);
        return out;
    }

    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cx a = loop[i], b = loop[(i + 1) % n];
        const double da = value(a), db = value(b);
        if (da <= eps) out.push_back(a);
        if ((da > eps && db < -eps) || (da < -eps && db > eps)) {
            const double t = da / (da - db);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

ConvexPolygon ConvexPolygon::intersect(const ConvexPolygon& other) const {
    if (empty() || other.empty()) return ConvexPolygon();
    std::vector<cx> loop = v_;
    for (const HalfPlane& hp : other.half_planes()) {
        loop = clip_half_plane(loop, hp);
        if (loop.empty()) return ConvexPolygon();
    }
    return hull(loop);
}

std::vector<cx> ConvexPolygon::boundary_points(int total) const {
    if (empty()) throw input_error("boundary of empty polygon");
    std::vector<cx> pts = v_;
    if (v_.size() < 2 || total <= static_cast<int>(v_.size())) return pts;

    const std::size_t n = v_.size();
    const std::size_t nedges = (n == 2) ? 1 : n;
    double perimeter = 0.0;
    for (std::size_t i = 0; i < nedges; ++i) perimeter += std::abs(v_[(i + 1) % n] - v_[i]);
    if (perimeter == 0.0) return pts;

    const int extra = total - static_cast<int>(n);
    for (std::size_t i = 0; i < nedges; ++i) {
        const cx a = v_[i], b = v_[(i + 1) % n];
        const int k = static_cast<int>(std::floor(extra * std::abs(b - a) / perimeter));
        for (int j = 1; j <= k; ++j)
            pts.push_back(a + (static_cast<double>(j) / (k + 1)) * (b - a));
    }
    return pts;
}

namespace {

cx line_intersection(const HalfPlane& a, const HalfPlane& b) {
    const double det = a.nx * b.ny - a.ny * b.nx;
    return {(a.c * b.ny - b.c * a.ny) / det, (a.nx * b.c - b.nx * a.c) / det};
}

bool violates(cx p, const HalfPlane& h) {
    const double eps = 1e-12 * (1.0 + std::abs(h.c) + std::abs(p));
    return h.nx * p.real() + h.ny * p.imag() > h.c + eps;
}

} // namespace

ConvexPolygon intersect_half_planes(std::span<const HalfPlane> planes, double bound) {
    std::vector<HalfPlane> hp;
    hp.reserve(planes.size());
    for (const HalfPlane& h : planes) {
        const double len = std::hypot(h.nx, h.ny);
        if (len == 0.0) continue;
        hp.push_back({h.nx / len, h.ny / len, h.c / len});
    }
    std::sort(hp.begin(), hp.end(), [](const HalfPlane& a, const HalfPlane& b) {
        return std::atan2(a.ny, a.nx) < std::atan2(b.ny, b.nx);
    });
    // collapse (near-)parallel normals, keeping the tighter constraint
    std::vector<HalfPlane> uniq;
    for (const HalfPlane& h : hp) {
        if (!uniq.empty()) {
            const HalfPlane& last = uniq.back();
            const double cross_n = last.nx * h.ny - last.ny * h.nx;
            const double dot_n = last.nx * h.nx + last.ny * h.ny;
            if (std::abs(cross_n) < 1e-12 && dot_n > 0.0) {
                if (h.c < last.c) uniq.back() = h;
                continue;
            }
        }
        uniq.push_back(h);
    }

    std::vector<HalfPlane> dq(uniq.size() + 1);
    std::size_t lo = 0, hi = 0; // [lo, hi) live window
    for (const HalfPlane& h : uniq) {
        while (hi - lo >= 2 && violates(line_intersection(dq[hi - 2], dq[hi - 1]), h)) --hi;
        while (hi - lo >= 2 && violates(line_intersection(dq[lo], dq[lo + 1]), h)) ++lo;
        dq[hi++] = h;
    }
    while (hi - lo >= 3 && violates(line_intersection(dq[hi - 2], dq[hi - 1]), dq[lo])) --hi;
    while (hi - lo >= 3 && violates(line_intersection(dq[lo], dq[lo + 1]), dq[hi - 1])) ++lo;

    if (hi - lo < 3) {
        // degenerate or near-degenerate region: clip a bounding box instead
        std::vector<cx> loop{cx(-bound, -bound), cx(bound, -bound), cx(bound, bound),
                             cx(-bound, bound)};
        for (const HalfPlane& h : uniq) {
            loop = clip_half_plane(loop, h);
            if (loop.empty()) break;
        }
        return ConvexPolygon::hull(loop);
    }

    std::vector<cx> verts;
    verts.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
        const HalfPlane& a = dq[i];
        const HalfPlane& b = dq[(i + 1 - lo) % (hi - lo) + lo];
        verts.push_back(line_intersection(a, b));
    }
    return ConvexPolygon::hull(verts);
}

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.empty() || q.empty()) throw input_error("Hausdorff distance of empty polygon");

    double d = 0.0;
    for (const cx& v : p.vertices()) d = std::max(d, std::max(0.0, -q.signed_distance(v)));
    for (const cx& v : q.vertices()) d = std::max(d, std::max(0.0, -p.signed_distance(v)));

    // support-difference lower bound on a fixed grid (equality in the limit)
    const int grid = 256;
    for (int k = 0; k < grid; ++k) {
        const double gamma = 2.0 * std::numbers::pi * k / grid;
        d = std::max(d, std::abs(p.support(gamma) - q.support(gamma)));
    }
    return d;
}

} // namespace nr
