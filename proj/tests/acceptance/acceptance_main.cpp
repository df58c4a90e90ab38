// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nr/bidisk.hpp"
#include "nr/blaschke.hpp"
#include "nr/envelope.hpp"
#include "nr/hermitian_eigen.hpp"
#include "nr/numerical_range.hpp"
#include "nr/polynomial.hpp"
#include "oracles.hpp"
#include "test_rng.hpp"

using namespace nr;
using namespace nr::testing;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

CMatrix jordan_block(int n) {
    CMatrix j(n);
    for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
    return j;
}

double polygon_max_abs(const ConvexPolygon& poly) {
    double r = 0.0;
    for (const cx& v : poly.vertices()) r = std::max(r, std::abs(v));
    return r;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

// 1. numerical radius of the n x n Jordan block is cos(pi/(n+1)), n = 2..10,
//    within 1e-9, in under a second.
Outcome criterion_jordan_radius() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
        const double w = numerical_radius(jordan_block(n), 720);
        worst = std::max(worst, std::abs(w - std::cos(std::numbers::pi / (n + 1))));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = worst < 1e-9 && seconds < 1.0;
    return {pass, fmt("max |w - cos(pi/(n+1))| = %.3g, %.2f s", worst, seconds)};
}

// 2. Kippenhahn inner polygon vs the exact 2x2 ellipse, 100 seeded matrices,
//    2000 samples, Hausdorff < 1e-5.
Outcome criterion_ert_vs_kippenhahn() {
    TestRng rng(0xE27);
    double worst = 0.0;
    for (int round = 0; round < 100; ++round) {
        const CMatrix a = rng.matrix(2);
        const NumericalRangeApprox range = numerical_range(a, 2000);
        const Ellipse e = elliptical_range(a);
        worst = std::max(worst, hausdorff_distance(range.inner, e.boundary_polygon(2000)));
    }
    return {worst < 1e-5, fmt("max Hausdorff = %.3g over 100 matrices", worst)};
}

// 3. Gau-Wu reconstruction: intersection of 720 dilation ranges vs the direct
//    range, 20 seeded zero sets, Hausdorff < 5e-3 and exact containment.
Outcome criterion_gau_wu() {
    const auto start = std::chrono::steady_clock::now();
    TestRng rng(0x6A0);
    double worst_h = 0.0;
    double worst_gap = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 20; ++round) {
        const int n = 2 + round % 3; // degrees 2..4
        std::vector<cx> zeros;
        for (int k = 0; k < n; ++k) zeros.push_back(rng.in_disk(0.8));

        const ConvexPolygon inter = numrange_via_dilations(zeros, 720);
        const ConvexPolygon inner = numerical_range(sb_matrix(zeros), 720).inner;
        worst_h = std::max(worst_h, hausdorff_distance(inter, inner));
        for (int g = 0; g < 720; ++g) {
            const double gamma = two_pi * g / 720;
            worst_gap = std::min(worst_gap, inter.support(gamma) - inner.support(gamma));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = worst_h < 5e-3 && worst_gap >= -1e-8 && seconds < 30.0;
    return {pass, fmt("max Hausdorff = %.3g, min support gap = %.3g, %.2f s", worst_h,
                      worst_gap, seconds)};
}

// 4. Poncelet property for B(z) = z^3 over a 36-point lambda grid: unimodular
//    triangle vertices, circumscribing the disk of radius 1/2, tangent to it.
Outcome criterion_poncelet() {
    const std::vector<cx> zeros{cx(0.0), cx(0.0)};
    double worst_modulus = 0.0;
    double worst_contain = std::numeric_limits<double>::infinity();
    double worst_touch = 0.0;
    for (int k = 0; k < 36; ++k) {
        const ConvexPolygon tri = poncelet_polygon(zeros, std::polar(1.0, two_pi * k / 36));
        if (tri.size() != 3) return {false, "triangle vertex count is not 3"};
        for (const cx& v : tri.vertices())
            worst_modulus = std::max(worst_modulus, std::abs(std::abs(v) - 1.0));
        for (int g = 0; g < 720; ++g) {
            const double gamma = two_pi * g / 720;
            worst_contain = std::min(worst_contain, tri.support(gamma) - 0.5);
        }
        // tangency: the apothem (exact boundary distance from the center)
        // meets the disk radius
        worst_touch = std::max(worst_touch, tri.signed_distance(cx(0.0)) - 0.5);
    }
    const bool pass = worst_modulus < 1e-10 && worst_contain >= -1e-8 && worst_touch < 1e-3;
    return {pass, fmt("max ||v|-1| = %.3g, min gap = %.3g, max tangency gap = %.3g",
                      worst_modulus, worst_contain, worst_touch)};
}

// 5. dilation spectra: unitarity, eigenvalue residuals, distinctness over 100
//    seeded (zeros, lambda) pairs.
Outcome criterion_dilation_spectra() {
    TestRng rng(0xD11A);
    double worst_unitary = 0.0, worst_residual = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + round % 5;
        std::vector<cx> zeros;
        for (int k = 0; k < n; ++k) zeros.push_back(rng.in_disk(0.8));
        const cx lambda = rng.on_circle();

        const UnitaryDilation dil = unitary_dilation(zeros, lambda);
        worst_unitary = std::max(
            worst_unitary,
            operator_norm(dil.matrix.adjoint() * dil.matrix - CMatrix::identity(n + 1)));

        const BlaschkeProduct b{std::vector<cx>(zeros)};
        const std::vector<cx> mu = dilation_eigenvalues(zeros, lambda);
        if (static_cast<int>(mu.size()) != n + 1) return {false, "wrong eigenvalue count"};
        for (std::size_t i = 0; i < mu.size(); ++i) {
            worst_residual = std::max(worst_residual,
                                      std::abs(mu[i] * blaschke_eval(b, mu[i]) - lambda));
            for (std::size_t j = i + 1; j < mu.size(); ++j)
                min_gap = std::min(min_gap, std::abs(mu[i] - mu[j]));
        }
    }
    const bool pass = worst_unitary < 1e-10 && worst_residual < 1e-9 && min_gap > 1e-9;
    return {pass, fmt("max ||U*U-I|| = %.3g, max residual = %.3g, min eigen gap = %.3g",
                      worst_unitary, worst_residual, min_gap)};
}

// 6. envelope identities: closed form on the ellipse to 1e-12; numeric
//    discriminant envelope matches the closed form pointwise to 1e-8.
Outcome criterion_envelope() {
    double worst_identity = 0.0, worst_match = 0.0;
    for (double m : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        for (int k = 0; k <= 1000; ++k)
            for (const EnvelopePoint& e : ert_envelope(m, k / 1000.0))
                worst_identity = std::max(worst_identity, verify_on_ellipse(e.x, e.y, m));

        const CurveFamily fam = circle_family(m);
        for (int k = 0; k <= 200; ++k) {
            const double t = k / 200.0;
            const auto closed = ert_envelope(m, t);
            if (closed.size() < 2) continue; // outside the valid branch range
            if (std::abs(closed[0].y) < 1e-3) continue; // merging branches
            const std::vector<double> grid{t};
            const auto numeric = discriminant_envelope(fam, grid);
            int matched = 0;
            for (const EnvelopePoint& c : closed) {
                double best = std::numeric_limits<double>::infinity();
                for (const EnvelopePoint& e : numeric)
                    best = std::min(best, std::hypot(c.x - e.x, c.y - e.y));
                if (!std::isfinite(best)) continue;
                worst_match = std::max(worst_match, best);
                if (best < 1e-8) ++matched;
            }
            if (matched != 2) return {false, fmt("branches not recovered at t = %.3f", t)};
        }
    }
    const bool pass = worst_identity < 1e-12 && worst_match < 1e-8;
    return {pass, fmt("max ellipse residual = %.3g, max closed-form mismatch = %.3g",
                      worst_identity, worst_match)};
}

// 7. bidisk cross-validation: slice hull vs symbol hull for the degree (2,2)
//    product, slice hull vs parametric boundary and radius for the squared
//    degree (1,1) function.
Outcome criterion_bidisk() {
    const auto start = std::chrono::steady_clock::now();

    const BidiskRange product = bidisk_numrange(product_rif_22(), 720, 720);
    const ConvexPolygon symbol = bidisk_numrange_via_mtheta(720, 720);
    const double h_product = hausdorff_distance(product.hull, symbol);

    const RationalInnerFunction t1 = linear_rif(2.0, 1.0);
    const BidiskRange squared = bidisk_numrange(t1 * t1, 720, 720);
    std::vector<cx> curve;
    for (int k = 0; k < 720; ++k) {
        const auto [x, y] = boundary_curve(2.0, 1.0, two_pi * k / 720);
        curve.emplace_back(x, y);
    }
    const double h_curve = hausdorff_distance(squared.hull, ConvexPolygon::hull(curve));
    const double radius = polygon_max_abs(squared.hull);

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = h_product < 1e-2 && h_curve < 1e-2 && radius >= 0.999 && seconds < 60.0;
    return {pass, fmt("Hausdorff(product) = %.3g, Hausdorff(curve) = %.3g, radius = %.6f",
                      h_product, h_curve, radius) +
                      fmt(", %.2f s", seconds)};
}

// 8. Crouzeix ratios: exactly 2 for (z, J_2); 200 seeded random cases below
//    1 + sqrt(2).
Outcome criterion_crouzeix() {
    const Polynomial identity{{cx(0.0), cx(1.0)}};
    const double jordan_ratio = crouzeix_ratio(identity, jordan_block(2), 200000);
    const double jordan_err = std::abs(jordan_ratio - 2.0);

    TestRng rng(0xC402);
    const double bound = 1.0 + std::sqrt(2.0) + 1e-9;
    double worst_ratio = 0.0;
    for (int round = 0; round < 200; ++round) {
        const int n = rng.uniform_int(2, 6);
        const CMatrix a = rng.matrix(n);
        const int deg = rng.uniform_int(1, 8);
        std::vector<cx> coeffs;
        for (int k = 0; k <= deg; ++k) coeffs.push_back(rng.box());
        worst_ratio = std::max(worst_ratio, crouzeix_ratio(Polynomial{std::move(coeffs)}, a, 720));
    }
    const bool pass = jordan_err < 1e-9 && worst_ratio <= bound;
    return {pass, fmt("|ratio(z, J_2) - 2| = %.3g, max random ratio = %.6f", jordan_err,
                      worst_ratio)};
}

// 9. invariance suite over 50 seeded matrices up to 8x8: unitary conjugation,
//    affine covariance, spectral containment, normal hulls, convexity.
Outcome criterion_invariance() {
    TestRng rng(0x10A);
    double worst_unitary = 0.0, worst_affine = 0.0, worst_normal = 0.0;
    double worst_containment = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + round % 7;
        const CMatrix a = rng.matrix(n);
        const NumericalRangeApprox range = numerical_range(a, 720);

        // convexity of the inner polygon
        const auto& verts = range.inner.vertices();
        const std::size_t nv = verts.size();
        if (nv >= 3) {
            for (std::size_t i = 0; i < nv; ++i) {
                const cx o = verts[i], p = verts[(i + 1) % nv], q = verts[(i + 2) % nv];
                const double crossv = (p.real() - o.real()) * (q.imag() - o.imag()) -
                                      (p.imag() - o.imag()) * (q.real() - o.real());
                if (crossv < 0.0) return {false, "inner polygon is not convex"};
            }
        }

        // unitary conjugation leaves the range fixed
        const CMatrix u = rng.unitary(n);
        const CMatrix conj = u.adjoint() * a * u;
        worst_unitary = std::max(
            worst_unitary,
            hausdorff_distance(range.inner, numerical_range(conj, 720).inner));

        // affine covariance of the support function
        const cx alpha = std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, two_pi));
        const cx beta = rng.box();
        CMatrix affine = a;
        affine *= alpha;
        for (int i = 0; i < n; ++i) affine(i, i) += beta;
        for (int g = 0; g < 720; ++g) {
            const double gamma = two_pi * g / 720;
            const double lhs = support_value(affine, gamma).first;
            const double rhs = std::abs(alpha) * support_value(a, gamma - std::arg(alpha)).first +
                               (std::polar(1.0, -gamma) * beta).real();
            worst_affine = std::max(worst_affine, std::abs(lhs - rhs));
        }

        // every eigenvalue lies in the outer polygon
        for (const cx& lambda : eigenvalues_oracle(a))
            worst_containment =
                std::min(worst_containment, range.outer.signed_distance(lambda));

        // normal matrices give the eigenvalue hull; shallow hull vertices have
        // normal cones narrower than the uniform grid, so aim one sample into
        // each vertex cone (bisector of the adjacent edge normals)
        std::vector<cx> d;
        for (int k = 0; k < n; ++k) d.push_back(rng.box());
        const CMatrix normal = u.adjoint() * CMatrix::diagonal(d) * u;
        const NumericalRangeApprox sweep = numerical_range(normal, 720);
        std::vector<cx> pts;
        for (const SupportSample& s : sweep.samples) pts.push_back(s.boundary_point);
        const ConvexPolygon eig_hull = ConvexPolygon::hull(d);
        const auto& hv = eig_hull.vertices();
        const std::size_t nhv = hv.size();
        if (nhv >= 3) {
            for (std::size_t i = 0; i < nhv; ++i) {
                const cx prev = hv[(i + nhv - 1) % nhv], cur = hv[i], next = hv[(i + 1) % nhv];
                const cx n1 = (cur - prev) * cx(0.0, -1.0); // outward edge normals
                const cx n2 = (next - cur) * cx(0.0, -1.0);
                const cx bisector = n1 / std::abs(n1) + n2 / std::abs(n2);
                if (std::abs(bisector) == 0.0) continue;
                pts.push_back(boundary_point(normal, std::arg(bisector)));
            }
        }
        worst_normal =
            std::max(worst_normal, hausdorff_distance(ConvexPolygon::hull(pts), eig_hull));
    }
    const bool pass = worst_unitary < 1e-6 && worst_affine < 1e-9 &&
                      worst_containment >= -1e-8 && worst_normal < 1e-6;
    return {pass, fmt("unitary = %.3g, affine = %.3g, containment = %.3g", worst_unitary,
                      worst_affine, worst_containment) +
                      fmt(", normal hull = %.3g", worst_normal)};
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const std::vector<Entry> criteria{
        {"Jordan block radii", criterion_jordan_radius},
        {"elliptical range vs Kippenhahn", criterion_ert_vs_kippenhahn},
        {"Gau-Wu reconstruction", criterion_gau_wu},
        {"Poncelet property", criterion_poncelet},
        {"dilation spectra", criterion_dilation_spectra},
        {"envelope identities", criterion_envelope},
        {"bidisk cross-validation", criterion_bidisk},
        {"Crouzeix ratios", criterion_crouzeix},
        {"invariance suite", criterion_invariance},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome outcome{false, "exception"};
        try {
            outcome = criteria[k].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("[%zu/%zu] %s %s: %s\n", k + 1, criteria.size(),
                    outcome.pass ? "PASS" : "FAIL", criteria[k].name, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
