#include "nr/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nr/errors.hpp"
#include "nr/hermitian_eigen.hpp"
#include "nr/parallel.hpp"

namespace nr {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Hermitian part of e^{-i gamma} A.
CMatrix rotated_real_part(const CMatrix& a, double gamma) {
    const cx w = std::polar(1.0, -gamma);
    CMatrix m = a;
    m *= w;
    return re_part(m);
}

} // namespace

double Ellipse::semi_major() const {
    const double b = semi_minor();
    const double c = 0.5 * std::abs(focus2 - focus1);
    return std::sqrt(b * b + c * c);
}

double Ellipse::support(double gamma) const {
    const double a = semi_major();
    const double b = semi_minor();
    const cx f = focus2 - focus1;
    const double phi = (std::abs(f) == 0.0) ? 0.0 : std::arg(f);
    const double psi = gamma - phi;
    const cx ctr = center();
    return ctr.real() * std::cos(gamma) + ctr.imag() * std::sin(gamma) +
           std::sqrt(std::max(0.0, a * a * std::cos(psi) * std::cos(psi) +
                                       b * b * std::sin(psi) * std::sin(psi)));
}

cx Ellipse::support_point(double gamma) const {
    const double a = semi_major();
    const double b = semi_minor();
    const cx f = focus2 - focus1;
    const double phi = (std::abs(f) == 0.0) ? 0.0 : std::arg(f);
    const double psi = gamma - phi;
    const double den =
        std::sqrt(std::max(0.0, a * a * std::cos(psi) * std::cos(psi) +
                                    b * b * std::sin(psi) * std::sin(psi)));
    if (den == 0.0) return center();
    // axis-aligned support point, rotated back
    const cx local(a * a * std::cos(psi) / den, b * b * std::sin(psi) / den);
    return center() + std::polar(1.0, phi) * local;
}

ConvexPolygon Ellipse::boundary_polygon(int count) const {
    std::vector<cx> pts;
    pts.reserve(static_cast<std::size_t>(std::max(count, 1)));
    for (int k = 0; k < count; ++k) pts.push_back(support_point(two_pi * k / count));
    return ConvexPolygon::hull(pts);
}

std::pair<double, std::vector<cx>> support_value(const CMatrix& a, double gamma) {
    const HermitianEigen eig = hermitian_eigs(rotated_real_part(a, gamma));
    const int n = a.dim();
    const double top = eig.values.back();
    // deterministic tie handling: lowest index attaining the top value
    int idx = n - 1;
    for (int k = 0; k < n; ++k) {
        if (eig.values[static_cast<std::size_t>(k)] == top) {
            idx = k;
            break;
        }
    }
    return {top, eig.vector(idx)};
}

cx boundary_point(const CMatrix& a, double gamma) {
    return rayleigh(a, support_value(a, gamma).second);
}

NumericalRangeApprox numerical_range(const CMatrix& a, int nsamples) {
    if (nsamples < 3) throw input_error("numerical_range requires nsamples >= 3");
    if (a.dim() == 0) throw input_error("empty matrix");

    NumericalRangeApprox out;
    out.samples.resize(static_cast<std::size_t>(nsamples));
    parallel_for(nsamples, [&](int k) {
        const double gamma = two_pi * k / nsamples;
        const auto [h, v] = support_value(a, gamma);
        out.samples[static_cast<std::size_t>(k)] = {gamma, h, rayleigh(a, v)};
    });

    std::vector<cx> pts;
    pts.reserve(out.samples.size());
    for (const SupportSample& s : out.samples) pts.push_back(s.boundary_point);
    out.inner = ConvexPolygon::hull(pts);

    // any three of the sampled directions already bound the intersection
    // within a few matrix norms
    const double bound = 5.0 * (a.frobenius_norm() + 1.0);
    std::vector<HalfPlane> planes;
    planes.reserve(out.samples.size());
    for (const SupportSample& s : out.samples)
        planes.push_back({std::cos(s.gamma), std::sin(s.gamma), s.h});
    out.outer = intersect_half_planes(planes, bound);
    return out;
}

BoundingRectangle bounding_rectangle(const CMatrix& a) {
    const HermitianEigen re = hermitian_eigs(re_part(a));
    const HermitianEigen im = hermitian_eigs(im_part(a));
    return {re.values.front(), re.values.back(), im.values.front(), im.values.back()};
}

Ellipse elliptical_range(const CMatrix& a) {
    if (a.dim() != 2) throw input_error("elliptical_range requires a 2x2 matrix");
    const cx tr = a(0, 0) + a(1, 1);
    const cx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const cx disc = std::sqrt(tr * tr - 4.0 * det);
    const cx e1 = 0.5 * (tr + disc);
    const cx e2 = 0.5 * (tr - disc);
    const double tr_gram = (a.adjoint() * a).trace().real();
    const double minor2 = tr_gram - std::norm(e1) - std::norm(e2);
    return {e1, e2, std::sqrt(std::max(0.0, minor2))};
}

double numerical_radius(const CMatrix& a, int nsamples) {
    if (nsamples < 3) throw input_error("numerical_radius requires nsamples >= 3");
    const int n = a.dim();
    if (n == 0) throw input_error("empty matrix");

    // scalar matrix: W(alpha I) = {alpha}
    const cx alpha = a(0, 0);
    bool scalar = true;
    for (int i = 0; i < n && scalar; ++i)
        for (int j = 0; j < n && scalar; ++j)
            if (std::abs(a(i, j) - (i == j ? alpha : cx(0.0))) >
                1e-14 * (1.0 + std::abs(alpha)))
                scalar = false;
    if (scalar) return std::abs(alpha);

    std::vector<double> h(static_cast<std::size_t>(nsamples));
    parallel_for(nsamples, [&](int k) {
        h[static_cast<std::size_t>(k)] =
            hermitian_eigs(rotated_real_part(a, two_pi * k / nsamples)).values.back();
    });
    return *std::max_element(h.begin(), h.end());
}

double crouzeix_ratio(const Polynomial& p, const CMatrix& a, int nsamples) {
    const NumericalRangeApprox range = numerical_range(a, nsamples);
    double max_abs = 0.0;
    for (const cx& z : range.outer.boundary_points(nsamples))
        max_abs = std::max(max_abs, std::abs(p.eval(z)));
    if (max_abs == 0.0)
        throw numerical_error("crouzeix_ratio: p vanishes on the sampled boundary of W(A)");
    return operator_norm(mat_poly_eval(p, a)) / max_abs;
}

} // namespace nr
