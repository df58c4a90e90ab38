#ifndef NR_BLASCHKE_HPP
#define NR_BLASCHKE_HPP

#include <span>
#include <vector>

#include "nr/complex_matrix.hpp"
#include "nr/convex_polygon.hpp"

namespace nr {

// Finite Blaschke product B(z) = c * prod (z - a_j)/(1 - conj(a_j) z) with
// zeros a_j in the open disk (repeats allowed) and |c| = 1.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(std::vector<cx> zeros, cx unimodular_constant = cx(1.0));

    const std::vector<cx>& zeros() const { return zeros_; }
    cx constant() const { return constant_; }
    int degree() const { return static_cast<int>(zeros_.size()); }

private:
    std::vector<cx> zeros_;
    cx constant_;
};

/// B(z) for |z| <= 1 + 1e-9. Unimodular on the unit circle.
cx blaschke_eval(const BlaschkeProduct& b, cx z);

/// Matrix of the shift compressed by B in the Takenaka-Malmquist basis:
/// upper triangular with diagonal a_j and
///   A_ij = (prod_{k=i+1}^{j-1} -conj(a_k)) sqrt(1-|a_i|^2) sqrt(1-|a_j|^2)
/// above it (1-based indices, empty product = 1).
CMatrix sb_matrix(std::span<const cx> zeros);

// One-parameter unitary border of sb_matrix: top-left n x n block is S_B and
// the added row/column make the matrix unitary for each |lambda| = 1.
struct UnitaryDilation {
    std::vector<cx> zeros;
    cx lambda;
    CMatrix matrix; // (n+1) x (n+1)
};
UnitaryDilation unitary_dilation(std::span<const cx> zeros, cx lambda);

/// The n+1 eigenvalues of the lambda-dilation: the solutions of
/// z B(z) = lambda, all unimodular and pairwise distinct. Each root is
/// validated by |mu B(mu) - lambda| < 1e-9 and projected onto the circle
/// (radial error beyond 1e-9 raises).
std::vector<cx> dilation_eigenvalues(std::span<const cx> zeros, cx lambda);

/// W(U_lambda): the (n+1)-gon inscribed in the unit circle whose vertices
/// are the dilation eigenvalues. Circumscribes the boundary of W(S_B).
ConvexPolygon poncelet_polygon(std::span<const cx> zeros, cx lambda);

/// Intersection of W(U_lambda) over lambda_k = e^{2 pi i k/lambda_count};
/// decreases to W(S_B) as the grid refines.
ConvexPolygon numrange_via_dilations(std::span<const cx> zeros, int lambda_count);

} // namespace nr

#endif
