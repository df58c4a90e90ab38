#include "nr/bidisk.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "nr/errors.hpp"
#include "nr/numerical_range.hpp"
#include "nr/parallel.hpp"
#include "nr/polynomial.hpp"

namespace nr {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// splitmix64; fixed-seed sampling keeps construction checks deterministic
struct Sampler {
    std::uint64_t state;
    explicit Sampler(std::uint64_t seed) : state(seed) {}
    double next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    cx in_disk() {
        const double r = std::sqrt(next());
        const double a = two_pi * next();
        return std::polar(r, a);
    }
    cx on_circle() { return std::polar(1.0, two_pi * next()); }
};

} // namespace

std::vector<cx> reflect_poly(const std::vector<cx>& grid, int m, int n) {
    if (m < 0 || n < 0 ||
        grid.size() != static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1))
        throw input_error("coefficient grid does not match the declared degree");
    std::vector<cx> out(grid.size());
    const int cols = n + 1;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            out[static_cast<std::size_t>(i * cols + j)] =
                std::conj(grid[static_cast<std::size_t>((m - i) * cols + (n - j))]);
    return out;
}

RationalInnerFunction::RationalInnerFunction(std::vector<cx> p_grid, int m, int n)
    : p_(std::move(p_grid)), m_(m), n_(n) {
    ptilde_ = reflect_poly(p_, m_, n_);

    // sample D^2, D x T, T x D for zeros of p
    Sampler rng(0x5eed5eed5eed5eedull);
    for (int k = 0; k < 1000; ++k) {
        cx z1, z2;
        switch (k % 3) {
            case 0: z1 = rng.in_disk(); z2 = rng.in_disk(); break;
            case 1: z1 = rng.in_disk(); z2 = rng.on_circle(); break;
            default: z1 = rng.on_circle(); z2 = rng.in_disk(); break;
        }
        if (std::abs(p_at(z1, z2)) <= 1e-10)
            throw input_error("denominator polynomial vanishes inside the bidisk sample set");
    }
}

cx RationalInnerFunction::p_at(cx z1, cx z2) const {
    // Horner in z1, inner Horner in z2
    const int cols = n_ + 1;
    cx acc = 0.0;
    for (int i = m_; i >= 0; --i) {
        cx row = 0.0;
        for (int j = n_; j >= 0; --j) row = row * z2 + p_[static_cast<std::size_t>(i * cols + j)];
        acc = acc * z1 + row;
    }
    return acc;
}

cx RationalInnerFunction::ptilde_at(cx z1, cx z2) const {
    const int cols = n_ + 1;
    cx acc = 0.0;
    for (int i = m_; i >= 0; --i) {
        cx row = 0.0;
        for (int j = n_; j >= 0; --j)
            row = row * z2 + ptilde_[static_cast<std::size_t>(i * cols + j)];
        acc = acc * z1 + row;
    }
    return acc;
}

cx RationalInnerFunction::theta(cx z1, cx z2) const {
    const cx den = p_at(z1, z2);
    if (std::abs(den) < 1e-14) throw numerical_error("Theta evaluated at a zero of p");
    return ptilde_at(z1, z2) / den;
}

std::vector<cx> RationalInnerFunction::p_slice(cx tau) const {
    const int cols = n_ + 1;
    std::vector<cx> c(static_cast<std::size_t>(m_ + 1), cx(0.0));
    for (int i = 0; i <= m_; ++i) {
        cx row = 0.0;
        for (int j = n_; j >= 0; --j) row = row * tau + p_[static_cast<std::size_t>(i * cols + j)];
        c[static_cast<std::size_t>(i)] = row;
    }
    return c;
}

std::vector<cx> RationalInnerFunction::ptilde_slice(cx tau) const {
    const int cols = n_ + 1;
    std::vector<cx> c(static_cast<std::size_t>(m_ + 1), cx(0.0));
    for (int i = 0; i <= m_; ++i) {
        cx row = 0.0;
        for (int j = n_; j >= 0; --j)
            row = row * tau + ptilde_[static_cast<std::size_t>(i * cols + j)];
        c[static_cast<std::size_t>(i)] = row;
    }
    return c;
}

RationalInnerFunction RationalInnerFunction::operator*(const RationalInnerFunction& rhs) const {
    const int m = m_ + rhs.m_;
    const int n = n_ + rhs.n_;
    std::vector<cx> grid(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1),
                         cx(0.0));
    const int cols = n + 1;
    for (int i1 = 0; i1 <= m_; ++i1)
        for (int j1 = 0; j1 <= n_; ++j1) {
            const cx v = p_[static_cast<std::size_t>(i1 * (n_ + 1) + j1)];
            if (v == cx(0.0)) continue;
            for (int i2 = 0; i2 <= rhs.m_; ++i2)
                for (int j2 = 0; j2 <= rhs.n_; ++j2)
                    grid[static_cast<std::size_t>((i1 + i2) * cols + (j1 + j2))] +=
                        v * rhs.p_[static_cast<std::size_t>(i2 * (rhs.n_ + 1) + j2)];
        }
    return RationalInnerFunction(std::move(grid), m, n);
}

RationalInnerFunction linear_rif(double a, double c) {
    if (!(a > 0.0) || !(c > 0.0)) throw input_error("linear_rif requires a, c > 0");
    // p = a - z1 + c z2 on a (1,1) grid
    std::vector<cx> grid{cx(a), cx(c), cx(-1.0), cx(0.0)};
    return RationalInnerFunction(std::move(grid), 1, 1);
}

RationalInnerFunction product_rif_22() {
    std::vector<cx> f1{cx(2.0), cx(-1.0), cx(-1.0), cx(0.0)}; // 2 - z2 - z1
    std::vector<cx> f2{cx(3.0), cx(-1.0), cx(-2.0), cx(0.0)}; // 3 - z2 - 2 z1
    RationalInnerFunction a(std::move(f1), 1, 1);
    RationalInnerFunction b(std::move(f2), 1, 1);
    return a * b;
}

bool exceptional_check(const RationalInnerFunction& theta, cx tau, double tol) {
    if (std::abs(std::abs(tau) - 1.0) > 1e-9)
        throw input_error("exceptional_check requires |tau| = 1");
    const Polynomial slice{theta.p_slice(tau)};
    if (slice.degree() < 1) return false; // constant slice has no roots
    for (const cx& r : poly_roots(slice))
        if (std::abs(std::abs(r) - 1.0) < tol) return true;
    return false;
}

SliceResult slice_blaschke(const RationalInnerFunction& theta, cx tau) {
    if (std::abs(std::abs(tau) - 1.0) > 1e-9)
        throw input_error("slice_blaschke requires |tau| = 1");
    tau /= std::abs(tau);

    SliceResult out;
    out.tau = tau;
    if (exceptional_check(theta, tau)) {
        out.excluded = true;
        return out;
    }

    const Polynomial num{theta.ptilde_slice(tau)};
    if (num.degree() != theta.deg1())
        throw numerical_error("slice numerator degree dropped below deg1");

    std::vector<cx> zeros = poly_roots(num);
    for (const cx& z : zeros) {
        if (std::abs(z) > 1.0 - 1e-9) {
            std::ostringstream msg;
            msg << "slice zero of modulus " << std::abs(z)
                << " is not inside the open disk; Theta is not inner";
            throw numerical_error(msg.str());
        }
    }

    // fit the unimodular constant at a base point clear of the zeros
    const BlaschkeProduct plain{std::vector<cx>(zeros)};
    static const cx candidates[] = {cx(0.0), cx(0.37), cx(-0.41, 0.23), cx(0.0, 0.52),
                                    cx(-0.3, -0.27)};
    cx constant(1.0);
    bool fitted = false;
    for (const cx& z0 : candidates) {
        const cx base = blaschke_eval(plain, z0);
        if (std::abs(base) < 1e-3) continue;
        const cx ratio = theta.theta(z0, tau) / base;
        if (std::abs(std::abs(ratio) - 1.0) > 1e-6)
            throw numerical_error("slice constant is not unimodular; Theta is not inner");
        constant = ratio / std::abs(ratio);
        fitted = true;
        break;
    }
    if (!fitted) throw numerical_error("slice constant fit failed: no usable base point");

    BlaschkeProduct b{std::move(zeros), constant};
    Sampler rng(0xb1d15cull);
    for (int k = 0; k < 20; ++k) {
        const cx z = rng.in_disk();
        if (std::abs(blaschke_eval(b, z) - theta.theta(z, tau)) > 1e-8)
            throw numerical_error("slice Blaschke product does not match Theta(., tau)");
    }
    out.blaschke = std::move(b);
    return out;
}

BidiskRange bidisk_numrange(const RationalInnerFunction& theta, int tau_count, int gamma_count) {
    if (tau_count < 8) throw input_error("bidisk_numrange requires tau_count >= 8");
    if (gamma_count < 3) throw input_error("bidisk_numrange requires gamma_count >= 3");

    std::vector<std::vector<cx>> per_tau(static_cast<std::size_t>(tau_count));
    std::vector<char> skipped(static_cast<std::size_t>(tau_count), 0);
    parallel_for(tau_count, [&](int k) {
        const cx tau = std::polar(1.0, two_pi * k / tau_count);
        const SliceResult slice = slice_blaschke(theta, tau);
        if (slice.excluded) {
            skipped[static_cast<std::size_t>(k)] = 1;
            return;
        }
        const CMatrix sb = sb_matrix(slice.blaschke->zeros());
        const NumericalRangeApprox range = numerical_range(sb, gamma_count);
        per_tau[static_cast<std::size_t>(k)] = range.inner.vertices();
    });

    BidiskRange out;
    std::vector<cx> pts;
    for (int k = 0; k < tau_count; ++k) {
        if (skipped[static_cast<std::size_t>(k)]) {
            ++out.excluded;
            continue;
        }
        ++out.used;
        const auto& v = per_tau[static_cast<std::size_t>(k)];
        pts.insert(pts.end(), v.begin(), v.end());
    }
    if (out.used == 0)
        throw numerical_error("bidisk_numrange: every slice fell in the exceptional set");
    out.hull = ConvexPolygon::hull(pts);
    return out;
}

CMatrix mtheta_symbol_22(cx tau) {
    if (std::abs(tau) > 1.0 + 1e-12)
        throw input_error("mtheta_symbol_22 requires |tau| <= 1");
    const cx tc = std::conj(tau);
    const cx one(1.0);
    CMatrix m(2);
    m(0, 0) = one / (2.0 - tc);
    m(0, 1) = 0.0;
    m(1, 0) = -std::sqrt(6.0) * (one - tc) * (one - tc) / ((2.0 - tc) * (3.0 - tc));
    m(1, 1) = 2.0 / (3.0 - tc);
    return m;
}

ConvexPolygon bidisk_numrange_via_mtheta(int tau_count, int boundary_count) {
    if (tau_count < 8) throw input_error("bidisk_numrange_via_mtheta requires tau_count >= 8");
    if (boundary_count < 3)
        throw input_error("bidisk_numrange_via_mtheta requires boundary_count >= 3");

    std::vector<std::vector<cx>> per_tau(static_cast<std::size_t>(tau_count));
    parallel_for(tau_count, [&](int k) {
        const cx tau = std::polar(1.0, two_pi * k / tau_count);
        const Ellipse disk = elliptical_range(mtheta_symbol_22(tau));
        per_tau[static_cast<std::size_t>(k)] = disk.boundary_polygon(boundary_count).vertices();
    });

    std::vector<cx> pts;
    for (const auto& v : per_tau) pts.insert(pts.end(), v.begin(), v.end());
    return ConvexPolygon::hull(pts);
}

std::array<double, 2> boundary_curve(double a, double c, double t) {
    if (!(a > 0.0) || !(c > 0.0)) throw input_error("boundary_curve requires a, c > 0");
    if (std::abs(a - 1.0 - c) > 1e-12)
        throw input_error("boundary_curve requires p(1,-1) = 0, i.e. a = 1 + c");

    const double s = a + c;
    // |a sin(t)/(a+c)| <= a/(a+c) < 1; the clamp only absorbs rounding
    const double asin_arg = std::clamp(a * std::sin(t) / s, -1.0, 1.0);
    const double shifted = t - std::asin(asin_arg);
    const double bump = a * c * (1.0 - std::cos(t)) / (s * s);
    return {(a + c * std::cos(t)) / s + bump * std::cos(shifted),
            c * std::sin(t) / s + bump * std::sin(shifted)};
}

} // namespace nr
