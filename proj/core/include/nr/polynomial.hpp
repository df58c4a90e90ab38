#ifndef NR_POLYNOMIAL_HPP
#define NR_POLYNOMIAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "nr/complex_matrix.hpp"

namespace nr {

// Polynomial with complex coefficients, ascending degree order. Trailing
// zero coefficients are trimmed; the zero polynomial is the single
// coefficient {0}.
class Polynomial {
public:
    Polynomial() : c_{cx(0.0)} {}
    explicit Polynomial(std::vector<cx> ascending_coeffs);

    static Polynomial from_roots(std::span<const cx> roots, cx leading = cx(1.0));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<cx>& coeffs() const { return c_; }
    cx coeff(int k) const;
    double coeff_scale() const;   // max |c_k|
    bool is_zero() const;

    cx eval(cx z) const;
    std::pair<cx, cx> eval_with_derivative(cx z) const;
    Polynomial derivative() const;

    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial scaled(cx s) const;

private:
    std::vector<cx> c_;
};

/// All roots of p, with multiplicity (result size == degree). Aberth-Ehrlich
/// simultaneous iteration started on a circle at the Cauchy root bound;
/// clusters closer than 1e-7 are merged to their centroid and reported as a
/// multiple root. Degree 0 input or non-convergence raises.
std::vector<cx> poly_roots(const Polynomial& p);

// Horner evaluation of p at a square matrix argument.
CMatrix mat_poly_eval(const Polynomial& p, const CMatrix& a);

} // namespace nr

#endif
