#ifndef NR_NUMERICAL_RANGE_HPP
#define NR_NUMERICAL_RANGE_HPP

#include <vector>

#include "nr/complex_matrix.hpp"
#include "nr/convex_polygon.hpp"
#include "nr/polynomial.hpp"

namespace nr {

// One support-line sample of W(A): the line
//   x cos(gamma) + y sin(gamma) = h
// touches the numerical range at boundary_point = <Av, v> for a top
// eigenvector v of Re(e^{-i gamma} A).
struct SupportSample {
    double gamma;
    double h;
    cx boundary_point;
};

// Ellipse given by its foci and minor axis length. minor_axis == 0 is the
// segment [focus1, focus2] (a point when the foci agree); equal foci with a
// positive minor axis is a circle.
struct Ellipse {
    cx focus1;
    cx focus2;
    double minor_axis = 0.0;

    cx center() const { return 0.5 * (focus1 + focus2); }
    double semi_minor() const { return 0.5 * minor_axis; }
    double semi_major() const;
    double support(double gamma) const;
    cx support_point(double gamma) const;
    // Inscribed polygon with vertices at the support points of `count`
    // equally spaced outer normal directions.
    ConvexPolygon boundary_polygon(int count) const;
};

// Two-sided polygonal approximation of W(A): `inner` is the hull of sampled
// boundary points (inscribed), `outer` the intersection of the sampled
// support half-planes (circumscribed), so inner <= W(A) <= outer.
struct NumericalRangeApprox {
    ConvexPolygon inner;
    ConvexPolygon outer;
    std::vector<SupportSample> samples;
};

/// Support value of W(A) in direction gamma: the top eigenvalue of
/// Re(e^{-i gamma} A), together with a unit eigenvector attaining it. Ties
/// take the first eigenvector in the solver's ascending order.
std::pair<double, std::vector<cx>> support_value(const CMatrix& a, double gamma);

/// The touching point <Av, v> of the gamma support line.
cx boundary_point(const CMatrix& a, double gamma);

/// Samples gamma_k = 2 pi k / nsamples, k = 0..nsamples-1 (nsamples >= 3).
NumericalRangeApprox numerical_range(const CMatrix& a, int nsamples);

// Extreme eigenvalues of Re(A) and Im(A): every point of W(A) lies in the
// axis-parallel rectangle [re_min, re_max] x [im_min, im_max].
struct BoundingRectangle {
    double re_min, re_max, im_min, im_max;
};
BoundingRectangle bounding_rectangle(const CMatrix& a);

/// Exact numerical range of a 2x2 matrix: the elliptical disk with foci at
/// the eigenvalues a, b and minor axis sqrt(tr(A^*A) - |a|^2 - |b|^2).
Ellipse elliptical_range(const CMatrix& a);

/// max |z| over W(A), approached from below as the gamma grid refines. The
/// scalar matrix alpha*I returns |alpha| exactly.
double numerical_radius(const CMatrix& a, int nsamples);

/// ||p(A)|| divided by the max of |p| over the sampled outer boundary of
/// W(A) (an overestimate of max |p| on W(A), so the ratio is conservative).
double crouzeix_ratio(const Polynomial& p, const CMatrix& a, int nsamples);

} // namespace nr

#endif
