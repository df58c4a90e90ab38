#include "nr/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "nr/errors.hpp"

namespace nr {

namespace {

void require_finite(const std::vector<cx>& a) {
    for (const cx& v : a) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw input_error("matrix entry is not finite");
    }
}

} // namespace

CMatrix::CMatrix(int n) : n_(n) {
    if (n < 0) throw input_error("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(n) * n, cx(0.0));
}

CMatrix::CMatrix(int n, std::vector<cx> entries) : n_(n), a_(std::move(entries)) {
    if (n < 0) throw input_error("negative matrix dimension");
    if (a_.size() != static_cast<std::size_t>(n) * n)
        throw input_error("entry count does not match square dimension");
    require_finite(a_);
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const cx> d) {
    CMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

cx CMatrix::trace() const {
    cx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    if (n_ != rhs.n_) throw input_error("dimension mismatch in matrix sum");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    if (n_ != rhs.n_) throw input_error("dimension mismatch in matrix difference");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(cx s) {
    for (cx& v : a_) v *= s;
    return *this;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
    if (lhs.n_ != rhs.n_) throw input_error("dimension mismatch in matrix product");
    const int n = lhs.n_;
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cx aik = lhs(i, k);
            if (aik == cx(0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * rhs(k, j);
        }
    }
    return out;
}

CMatrix re_part(const CMatrix& a) {
    CMatrix h = a;
    const CMatrix adj = a.adjoint();
    h += adj;
    h *= cx(0.5);
    return h;
}

CMatrix im_part(const CMatrix& a) {
    CMatrix h = a;
    const CMatrix adj = a.adjoint();
    h -= adj;
    h *= cx(0.0, -0.5);
    return h;
}

std::vector<cx> mat_vec(const CMatrix& a, std::span<const cx> x) {
    const int n = a.dim();
    if (static_cast<int>(x.size()) != n) throw input_error("vector length mismatch");
    std::vector<cx> y(static_cast<std::size_t>(n), cx(0.0));
    for (int i = 0; i < n; ++i) {
        cx s = 0.0;
        for (int j = 0; j < n; ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

cx rayleigh(const CMatrix& a, std::span<const cx> x) {
    const std::vector<cx> ax = mat_vec(a, x);
    cx s = 0.0;
    for (std::size_t k = 0; k < ax.size(); ++k) s += std::conj(x[k]) * ax[k];
    return s;
}

} // namespace nr
