#include "nr/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nr/errors.hpp"

namespace nr {

std::vector<cx> HermitianEigen::vector(int k) const {
    const int n = vectors.dim();
    std::vector<cx> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = vectors(i, k);
    return v;
}

namespace {

double off_diagonal_norm(const CMatrix& m) {
    const int n = m.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating m(p,q). The rotation
//   J(p,p)=c, J(p,q)=s e^{i phi}, J(q,p)=-s e^{-i phi}, J(q,q)=c
// with e^{i phi} = m(p,q)/|m(p,q)| is unitary; m <- J^* m J, v <- v J.
void rotate(CMatrix& m, CMatrix& v, int p, int q) {
    const cx mpq = m(p, q);
    const double r = std::abs(mpq);
    if (r == 0.0) return;

    const cx phase = mpq / r;
    const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cx sp = s * phase;        // J(p,q)
    const cx spc = std::conj(sp);   // conj for the inverse side

    const int n = m.dim();

    // columns p, q of m (right multiply by J)
    for (int i = 0; i < n; ++i) {
        const cx mip = m(i, p), miq = m(i, q);
        m(i, p) = c * mip - spc * miq;
        m(i, q) = sp * mip + c * miq;
    }
    // rows p, q of m (left multiply by J^*)
    for (int j = 0; j < n; ++j) {
        const cx mpj = m(p, j), mqj = m(q, j);
        m(p, j) = c * mpj - sp * mqj;
        m(q, j) = spc * mpj + c * mqj;
    }
    // restore exact Hermitian structure on the touched entries
    m(p, q) = 0.0;
    m(q, p) = 0.0;
    m(p, p) = cx(m(p, p).real(), 0.0);
    m(q, q) = cx(m(q, q).real(), 0.0);

    for (int i = 0; i < n; ++i) {
        const cx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - spc * viq;
        v(i, q) = sp * vip + c * viq;
    }
}

} // namespace

HermitianEigen hermitian_eigs(const CMatrix& h) {
    const int n = h.dim();
    if (n == 0) throw input_error("empty matrix");

    const double scale = h.frobenius_norm();
    const double herm_defect = (h - h.adjoint()).frobenius_norm();
    if (herm_defect > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: ||H - H*|| = " << herm_defect
            << " exceeds 1e-12 * ||H|| = " << 1e-12 * scale;
        throw input_error(msg.str());
    }

    // Work on the symmetrized copy so the defect below tolerance cannot bias
    // the rotations.
    CMatrix m = re_part(h);
    CMatrix v = CMatrix::identity(n);

    const double stop = 1e-14 * scale;
    const int max_sweeps = 60;
    bool converged = (off_diagonal_norm(m) <= stop);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(m, v, p, q);
        converged = (off_diagonal_norm(m) <= stop);
    }
    if (!converged)
        throw numerical_error("Jacobi eigensolver did not converge within 60 sweeps");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&m](int a, int b) { return m(a, a).real() < m(b, b).real(); });

    HermitianEigen out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = CMatrix(n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        out.values[static_cast<std::size_t>(k)] = m(src, src).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
    }
    return out;
}

double operator_norm(const CMatrix& a) {
    if (a.dim() == 0) throw input_error("empty matrix");
    const CMatrix gram = a.adjoint() * a;
    const HermitianEigen eig = hermitian_eigs(gram);
    return std::sqrt(std::max(0.0, eig.values.back()));
}

} // namespace nr
