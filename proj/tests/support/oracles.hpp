#ifndef NR_TESTS_ORACLES_HPP
#define NR_TESTS_ORACLES_HPP

#include <span>
#include <vector>

#include "nr/complex_matrix.hpp"
#include "nr/convex_polygon.hpp"
#include "nr/polynomial.hpp"

// Independent reference computations for the test suites. Everything here is
// brute force on purpose; none of it shares a code path with the library
// implementation it checks.
namespace nr::testing {

// Characteristic polynomial det(zI - A) by the Faddeev-LeVerrier trace
// recursion (monic, ascending coefficients).
Polynomial char_poly(const CMatrix& a);

// Eigenvalues of a general matrix: roots of char_poly.
std::vector<cx> eigenvalues_oracle(const CMatrix& a);

// Extreme points by the O(n^3) directed-edge scan: a pair (i, j) is a hull
// edge iff every other point lies on its left.
std::vector<cx> brute_extreme_points(std::span<const cx> pts);

// max over `count` pseudo-random unit vectors of Re(e^{-i gamma} <Ax, x>),
// a one-sided lower bound for the support value.
double rayleigh_support_oracle(const CMatrix& a, double gamma, int count,
                               std::uint64_t seed);

// Support value via shifted power iteration on Re(e^{-i gamma} A) from a
// random start: an eigensolver-free route to the same quantity.
double support_power_oracle(const CMatrix& a, double gamma, int iters, std::uint64_t seed);

// max over `count` pseudo-random unit vectors of |<Ax, x>|, a one-sided
// lower bound for the numerical radius.
double rayleigh_radius_oracle(const CMatrix& a, int count, std::uint64_t seed);

// max over `count` pseudo-random unit vectors of ||Ax||, a one-sided lower
// bound for the operator norm.
double operator_norm_oracle(const CMatrix& a, int count, std::uint64_t seed);

// Hausdorff distance between dense boundary samplings of two polygons.
double sampled_hausdorff_oracle(const ConvexPolygon& p, const ConvexPolygon& q,
                                int samples_per_polygon);

// Support value from a dense boundary sampling.
double sampled_support_oracle(const ConvexPolygon& p, double gamma, int samples);

} // namespace nr::testing

#endif
