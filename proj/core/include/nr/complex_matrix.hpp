#ifndef NR_COMPLEX_MATRIX_HPP
#define NR_COMPLEX_MATRIX_HPP

#include <complex>
#include <span>
#include <vector>

namespace nr {

using cx = std::complex<double>;

// Dense square complex matrix, row-major storage.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n);                       // zero matrix
    CMatrix(int n, std::vector<cx> entries);       // row-major, size n*n

    static CMatrix identity(int n);
    static CMatrix diagonal(std::span<const cx> d);

    int dim() const { return n_; }

    cx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    CMatrix adjoint() const;
    cx trace() const;
    double frobenius_norm() const;

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(cx s);

    friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
    friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
    friend CMatrix operator*(CMatrix lhs, cx s) { return lhs *= s; }
    friend CMatrix operator*(cx s, CMatrix rhs) { return rhs *= s; }
    friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

    std::span<const cx> entries() const { return a_; }

private:
    int n_ = 0;
    std::vector<cx> a_;
};

// Hermitian and skew parts: A = re_part(A) + i*im_part(A), both Hermitian.
CMatrix re_part(const CMatrix& a);
CMatrix im_part(const CMatrix& a);

// Matrix-vector product.
std::vector<cx> mat_vec(const CMatrix& a, std::span<const cx> x);

// Quadratic form <Ax, x> = x^H A x.
cx rayleigh(const CMatrix& a, std::span<const cx> x);

} // namespace nr

#endif
