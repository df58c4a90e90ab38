#include "nr/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nr/errors.hpp"
#include "nr/parallel.hpp"
#include "nr/polynomial.hpp"

namespace nr {

namespace {

void validate_zeros(std::span<const cx> zeros) {
    for (const cx& a : zeros) {
        if (!(std::abs(a) < 1.0 - 1e-12)) {
            std::ostringstream msg;
            msg << "Blaschke zero " << a.real() << (a.imag() < 0 ? "-" : "+")
                << std::abs(a.imag()) << "i is not inside the open unit disk";
            throw input_error(msg.str());
        }
    }
}

void validate_unimodular(cx lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
        throw input_error("parameter must be unimodular");
}

} // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cx> zeros, cx unimodular_constant)
    : zeros_(std::move(zeros)), constant_(unimodular_constant) {
    validate_zeros(zeros_);
    validate_unimodular(constant_);
}

cx blaschke_eval(const BlaschkeProduct& b, cx z) {
    if (std::abs(z) > 1.0 + 1e-9)
        throw input_error("blaschke_eval: point outside the closed unit disk");
    cx out = b.constant();
    for (const cx& a : b.zeros()) {
        const cx den = cx(1.0) - std::conj(a) * z;
        if (std::abs(den) < 1e-13)
            throw numerical_error("blaschke_eval: evaluation at a pole");
        out *= (z - a) / den;
    }
    return out;
}

CMatrix sb_matrix(std::span<const cx> zeros) {
    validate_zeros(zeros);
    const int n = static_cast<int>(zeros.size());
    if (n < 1) throw input_error("sb_matrix requires at least one zero");

    std::vector<double> defect(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        defect[static_cast<std::size_t>(j)] = std::sqrt(1.0 - std::norm(zeros[static_cast<std::size_t>(j)]));

    CMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = zeros[static_cast<std::size_t>(i)];
        cx prod = 1.0; // prod_{k=i+1}^{j-1} (-conj(a_k))
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = prod * defect[static_cast<std::size_t>(i)] * defect[static_cast<std::size_t>(j)];
            prod *= -std::conj(zeros[static_cast<std::size_t>(j)]);
        }
    }
    return a;
}

UnitaryDilation unitary_dilation(std::span<const cx> zeros, cx lambda) {
    validate_unimodular(lambda);
    const CMatrix a = sb_matrix(zeros);
    const int n = a.dim();

    CMatrix u(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u(i, j) = a(i, j);

    // bottom row: lambda (prod_{k=1}^{j-1} -conj(a_k)) sqrt(1-|a_j|^2)
    cx prod = 1.0;
    for (int j = 0; j < n; ++j) {
        u(n, j) = lambda * prod * std::sqrt(1.0 - std::norm(zeros[static_cast<std::size_t>(j)]));
        prod *= -std::conj(zeros[static_cast<std::size_t>(j)]);
    }
    // corner: lambda prod_{k=1}^{n} -conj(a_k)
    u(n, n) = lambda * prod;

    // last column: (prod_{k=i+1}^{n} -conj(a_k)) sqrt(1-|a_i|^2)
    prod = 1.0;
    for (int i = n - 1; i >= 0; --i) {
        u(i, n) = prod * std::sqrt(1.0 - std::norm(zeros[static_cast<std::size_t>(i)]));
        prod *= -std::conj(zeros[static_cast<std::size_t>(i)]);
    }

    const CMatrix gram = u.adjoint() * u;
    const double defect = (gram - CMatrix::identity(n + 1)).frobenius_norm();
    if (defect > 1e-10)
        throw numerical_error("unitary_dilation: computed matrix is not unitary");

    return {std::vector<cx>(zeros.begin(), zeros.end()), lambda, std::move(u)};
}

std::vector<cx> dilation_eigenvalues(std::span<const cx> zeros, cx lambda) {
    validate_zeros(zeros);
    validate_unimodular(lambda);

    // z prod(z - a_k) - lambda prod(1 - conj(a_k) z)
    Polynomial numer = Polynomial::from_roots(zeros);
    numer = numer * Polynomial({cx(0.0), cx(1.0)});
    Polynomial denom({cx(1.0)});
    for (const cx& a : zeros) denom = denom * Polynomial({cx(1.0), -std::conj(a)});
    const Polynomial q = numer - denom.scaled(lambda);

    std::vector<cx> roots = poly_roots(q);
    const BlaschkeProduct b{std::vector<cx>(zeros.begin(), zeros.end())};
    for (cx& r : roots) {
        const double off_circle = std::abs(std::abs(r) - 1.0);
        if (off_circle > 1e-9) {
            std::ostringstream msg;
            msg << "dilation eigenvalue off the unit circle by " << off_circle;
            throw numerical_error(msg.str());
        }
        r /= std::abs(r);
        const double residual = std::abs(r * blaschke_eval(b, r) - lambda);
        if (residual > 1e-9) {
            std::ostringstream msg;
            msg << "dilation eigenvalue residual " << residual << " exceeds 1e-9";
            throw numerical_error(msg.str());
        }
    }

    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw numerical_error("dilation eigenvalues are not distinct");

    std::sort(roots.begin(), roots.end(),
              [](cx a, cx b) { return std::arg(a) < std::arg(b); });
    return roots;
}

ConvexPolygon poncelet_polygon(std::span<const cx> zeros, cx lambda) {
    return ConvexPolygon::hull(dilation_eigenvalues(zeros, lambda));
}

ConvexPolygon numrange_via_dilations(std::span<const cx> zeros, int lambda_count) {
    if (lambda_count < 3) throw input_error("numrange_via_dilations requires lambda_count >= 3");

    std::vector<ConvexPolygon> gons(static_cast<std::size_t>(lambda_count));
    parallel_for(lambda_count, [&](int k) {
        const double ang = 2.0 * std::numbers::pi * k / lambda_count;
        gons[static_cast<std::size_t>(k)] = poncelet_polygon(zeros, std::polar(1.0, ang));
    });

    ConvexPolygon acc = gons.front();
    for (std::size_t k = 1; k < gons.size(); ++k) {
        acc = acc.intersect(gons[k]);
        if (acc.empty())
            throw numerical_error("numrange_via_dilations: intersection collapsed to the empty set");
    }
    return acc;
}

} // namespace nr
