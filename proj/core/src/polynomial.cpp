#include "nr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nr/errors.hpp"

namespace nr {

Polynomial::Polynomial(std::vector<cx> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    if (c_.empty()) c_.push_back(cx(0.0));
    for (const cx& v : c_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw input_error("polynomial coefficient is not finite");
    }
    while (c_.size() > 1 && c_.back() == cx(0.0)) c_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const cx> roots, cx leading) {
    std::vector<cx> c{leading};
    for (const cx& r : roots) {
        c.push_back(cx(0.0));
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

cx Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return cx(0.0);
    return c_[static_cast<std::size_t>(k)];
}

double Polynomial::coeff_scale() const {
    double s = 0.0;
    for (const cx& v : c_) s = std::max(s, std::abs(v));
    return s;
}

bool Polynomial::is_zero() const { return c_.size() == 1 && c_[0] == cx(0.0); }

cx Polynomial::eval(cx z) const {
    cx acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * z + c_[k];
    return acc;
}

std::pair<cx, cx> Polynomial::eval_with_derivative(cx z) const {
    cx p = c_.back();
    cx dp = 0.0;
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c_[k];
    }
    return {p, dp};
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial();
    std::vector<cx> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<cx> out(c_.size() + rhs.c_.size() - 1, cx(0.0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<cx> out(std::max(c_.size(), rhs.c_.size()), cx(0.0));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(static_cast<int>(k)) + rhs.coeff(static_cast<int>(k));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<cx> out(std::max(c_.size(), rhs.c_.size()), cx(0.0));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(static_cast<int>(k)) - rhs.coeff(static_cast<int>(k));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(cx s) const {
    std::vector<cx> out = c_;
    for (cx& v : out) v *= s;
    return Polynomial(std::move(out));
}

namespace {

// Greedy transitive clustering into (centroid, multiplicity) groups. Two
// approximants belong together when they sit within the fixed merge
// tolerance or when their a-posteriori inclusion disks (radius n|p|/|p'|,
// which covers the attainable accuracy near a multiple root) overlap.
std::vector<std::pair<cx, int>> merge_clusters(const std::vector<cx>& roots,
                                               const std::vector<double>& radius, double tol) {
    const std::size_t n = roots.size();
    auto linked = [&](std::size_t i, std::size_t j) {
        const double d = std::abs(roots[i] - roots[j]);
        return d < tol || d < 3.0 * (radius[i] + radius[j]);
    };
    std::vector<int> cluster(n, -1);
    int nclusters = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cluster[i] >= 0) continue;
        cluster[i] = nclusters;
        // grow transitively
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (cluster[j] >= 0) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (cluster[k] == nclusters && linked(j, k)) {
                        cluster[j] = nclusters;
                        grew = true;
                        break;
                    }
                }
            }
        }
        ++nclusters;
    }
    std::vector<std::pair<cx, int>> out;
    out.reserve(static_cast<std::size_t>(nclusters));
    for (int c = 0; c < nclusters; ++c) {
        cx centroid = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (cluster[i] == c) {
                centroid += roots[i];
                ++count;
            }
        }
        out.emplace_back(centroid / static_cast<double>(count), count);
    }
    return out;
}

// A multiplicity-mu cluster centroid is only O(eps^{1/mu}) accurate; the same
// point is a simple root of the (mu-1)-th derivative, where Newton restores
// full precision.
cx refine_multiple_root(const Polynomial& q, cx z, int multiplicity) {
    Polynomial d = q;
    for (int k = 1; k < multiplicity; ++k) d = d.derivative();
    const cx start = z;
    for (int it = 0; it < 30; ++it) {
        auto [pv, dpv] = d.eval_with_derivative(z);
        if (dpv == cx(0.0)) break;
        const cx step = pv / dpv;
        z -= step;
        if (std::abs(step) <= 4e-16 * (1.0 + std::abs(z))) break;
    }
    // reject a refinement that wandered out of the cluster
    return (std::abs(z - start) < 1e-6 * (1.0 + std::abs(start))) ? z : start;
}

} // namespace

std::vector<cx> poly_roots(const Polynomial& p) {
    if (p.degree() < 1) throw input_error("poly_roots requires degree >= 1");

    // Strip exact roots at the origin first.
    std::vector<cx> c = p.coeffs();
    std::vector<cx> roots;
    while (c.size() > 1 && c.front() == cx(0.0)) {
        roots.push_back(cx(0.0));
        c.erase(c.begin());
    }
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;

    // Monic normalization.
    const cx lead = c.back();
    for (cx& v : c) v /= lead;
    const Polynomial q{std::vector<cx>(c)};

    // Cauchy bound: every root lies within 1 + max |c_k| of the origin.
    double bound = 0.0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)]));
    const double radius = 1.0 + bound;

    std::vector<cx> z(static_cast<std::size_t>(n));
    const double twist = 0.43; // fixed angular offset; avoids symmetry traps
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / n + twist;
        z[static_cast<std::size_t>(k)] = radius * cx(std::cos(ang), std::sin(ang));
    }

    // Running Horner bound on the evaluation error; once |p(z)| falls below
    // it the root cannot be refined further (happens well before the step
    // tolerance for multiple roots, whose basins are O(eps^{1/multiplicity})).
    constexpr double eps = 2.220446049250313e-16;
    auto noise_floor = [&c, n](double az) {
        double s = std::abs(c[static_cast<std::size_t>(n)]);
        for (int k = n; k-- > 0;) s = s * az + std::abs(c[static_cast<std::size_t>(k)]);
        return 8.0 * (2.0 * n + 2.0) * eps * s;
    };

    const int max_iter = 200;
    const double tol = 1e-13;
    std::vector<bool> frozen(static_cast<std::size_t>(n), false);
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            if (frozen[static_cast<std::size_t>(k)]) continue;
            const cx zk = z[static_cast<std::size_t>(k)];
            auto [pv, dpv] = q.eval_with_derivative(zk);
            if (std::abs(pv) <= noise_floor(std::abs(zk))) {
                frozen[static_cast<std::size_t>(k)] = true;
                continue;
            }
            if (dpv == cx(0.0)) {
                // stationary point; nudge off it
                z[static_cast<std::size_t>(k)] += cx(1e-8, 1e-8) * (1.0 + std::abs(zk));
                max_step = 1.0;
                continue;
            }
            const cx newton = pv / dpv;
            cx sum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                const cx d = zk - z[static_cast<std::size_t>(j)];
                if (d == cx(0.0)) continue;
                sum += 1.0 / d;
            }
            const cx denom = cx(1.0) - newton * sum;
            const cx step = (denom == cx(0.0)) ? newton : newton / denom;
            z[static_cast<std::size_t>(k)] = zk - step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zk)));
        }
        converged = (max_step <= tol);
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "Aberth iteration did not converge after " << max_iter << " steps; residuals:";
        for (int k = 0; k < n; ++k)
            msg << ' ' << std::abs(q.eval(z[static_cast<std::size_t>(k)]));
        throw numerical_error(msg.str());
    }

    std::vector<double> incl(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        auto [pv, dpv] = q.eval_with_derivative(z[static_cast<std::size_t>(k)]);
        incl[static_cast<std::size_t>(k)] =
            (dpv == cx(0.0)) ? 1e-7 : std::min(1e-3, n * std::abs(pv) / std::abs(dpv));
    }
    for (auto& [centroid, multiplicity] : merge_clusters(z, incl, 1e-7)) {
        const cx r = (multiplicity > 1) ? refine_multiple_root(q, centroid, multiplicity)
                                        : centroid;
        for (int k = 0; k < multiplicity; ++k) roots.push_back(r);
    }
    return roots;
}

CMatrix mat_poly_eval(const Polynomial& p, const CMatrix& a) {
    const int n = a.dim();
    const auto& c = p.coeffs();
    CMatrix acc(n);
    for (int i = 0; i < n; ++i) acc(i, i) = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        acc = acc * a;
        for (int i = 0; i < n; ++i) acc(i, i) += c[k];
    }
    return acc;
}

} // namespace nr
