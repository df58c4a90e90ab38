#ifndef NR_HERMITIAN_EIGEN_HPP
#define NR_HERMITIAN_EIGEN_HPP

#include <vector>

#include "nr/complex_matrix.hpp"

namespace nr {

// Full spectrum of a Hermitian matrix: values ascending, vectors(:,k) is the
// unit eigenvector for values[k], columns orthonormal.
struct HermitianEigen {
    std::vector<double> values;
    CMatrix vectors;

    std::vector<cx> vector(int k) const;
};

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. Input must satisfy ||H - H^*|| <= 1e-12 ||H|| (Frobenius);
/// anything further from Hermitian is rejected.
HermitianEigen hermitian_eigs(const CMatrix& h);

// Largest singular value, sqrt(max eig of A^* A).
double operator_norm(const CMatrix& a);

} // namespace nr

#endif
