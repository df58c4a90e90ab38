#ifndef NR_BIDISK_HPP
#define NR_BIDISK_HPP

#include <array>
#include <optional>
#include <vector>

#include "nr/blaschke.hpp"
#include "nr/complex_matrix.hpp"
#include "nr/convex_polygon.hpp"

namespace nr {

/// Reflection of a bivariate coefficient grid at degree (m, n):
///   ptilde(z) = z1^m z2^n conj(p(1/conj(z1), 1/conj(z2))),
/// i.e. ptilde[i][j] = conj(p[m-i][n-j]). An involution.
std::vector<cx> reflect_poly(const std::vector<cx>& grid, int m, int n);

// Rational inner function Theta = ptilde / p on the bidisk, stored as the
// (m+1) x (n+1) coefficient grid of the denominator p (row index = z1 power).
// p must be nonvanishing on D^2 and on both half-open faces D x T and T x D;
// the constructor checks |p| > 1e-10 on a fixed pseudo-random sample of 10^3
// points there. Common factors of p and ptilde are the caller's concern.
class RationalInnerFunction {
public:
    RationalInnerFunction(std::vector<cx> p_grid, int m, int n);

    int deg1() const { return m_; }
    int deg2() const { return n_; }
    const std::vector<cx>& p_grid() const { return p_; }
    const std::vector<cx>& ptilde_grid() const { return ptilde_; }

    cx p_at(cx z1, cx z2) const;
    cx ptilde_at(cx z1, cx z2) const;
    cx theta(cx z1, cx z2) const;

    // Coefficients in z1 of the slice polynomials at fixed z2 = tau.
    std::vector<cx> p_slice(cx tau) const;
    std::vector<cx> ptilde_slice(cx tau) const;

    // Product of inner functions: grids multiply, degrees add.
    RationalInnerFunction operator*(const RationalInnerFunction& rhs) const;

private:
    std::vector<cx> p_, ptilde_;
    int m_, n_;
};

// Theta with denominator p = a - z1 + c z2, degree (1,1).
RationalInnerFunction linear_rif(double a, double c);

// Degree (2,2) product with denominator p = (2 - z1 - z2)(3 - 2 z1 - z2);
// the Toeplitz symbol of its compressed shift is available in closed form
// below.
RationalInnerFunction product_rif_22();

/// True iff z1 -> p(z1, tau) has a root within tol of the unit circle, i.e.
/// tau lies in (a tol-neighborhood of) the exceptional set where the slice
/// fails to be a Blaschke product.
bool exceptional_check(const RationalInnerFunction& theta, cx tau, double tol = 1e-6);

// Slice of Theta at z2 = tau on the circle: a degree-m Blaschke product off
// the exceptional set.
struct SliceResult {
    cx tau;
    bool excluded = false;
    std::optional<BlaschkeProduct> blaschke;
};

/// Computes the slice theta_tau(z) = Theta(z, tau) as a Blaschke product:
/// zeros are the roots of z1 -> ptilde(z1, tau), the unimodular constant is
/// fitted at a base point and verified at 20 sample points (1e-8).
SliceResult slice_blaschke(const RationalInnerFunction& theta, cx tau);

// Hull over the tau grid of the numerical ranges of the slice compressions,
// with a count of slices skipped near the exceptional set.
struct BidiskRange {
    ConvexPolygon hull;
    int used = 0;
    int excluded = 0;
};

/// Numerical range of the doubly compressed shift of Theta via slices: the
/// convex hull of W(S_{theta_tau}) over tau_count circle points (each inner
/// polygon sampled at gamma_count angles).
BidiskRange bidisk_numrange(const RationalInnerFunction& theta, int tau_count, int gamma_count);

/// The 2x2 Toeplitz symbol M(tau) of the compressed shift for the degree
/// (2,2) product above, entries rational in conj(tau) and continuous on the
/// closed disk:
///   [ 1/(2-conj(tau))                                   0              ]
///   [ -sqrt(6)(1-conj(tau))^2/((2-conj(tau))(3-conj(tau)))  2/(3-conj(tau)) ]
CMatrix mtheta_symbol_22(cx tau);

/// Same numerical range via the symbol: hull over the tau grid of the exact
/// elliptical ranges W(M(tau)), each sampled at boundary_count points.
ConvexPolygon bidisk_numrange_via_mtheta(int tau_count, int boundary_count);

/// Parametric boundary of the slice-hull numerical range for Theta equal to
/// the square of the degree (1,1) function with p = a - z1 + c z2, valid for
/// a, c > 0 with p(1,-1) = 0 (a = 1 + c):
///   x(t) = (a + c cos t)/(a+c) + (ac(1-cos t)/(a+c)^2) cos(t - asin(a sin(t)/(a+c)))
///   y(t) = (c sin t)/(a+c)     + (ac(1-cos t)/(a+c)^2) sin(t - asin(a sin(t)/(a+c)))
std::array<double, 2> boundary_curve(double a, double c, double t);

} // namespace nr

#endif
