#include "nr/envelope.hpp"

#include <cmath>
#include <numbers>

#include "nr/errors.hpp"
#include "nr/parallel.hpp"

namespace nr {

double family_F(double m, double x, double y, double t) {
    const double dx = x - (1.0 - t * t);
    return dx * dx + y * y - m * m * t * t * (1.0 - t * t);
}

double family_Ft(double m, double x, double y, double t) {
    (void)y;
    const double dx = x - (1.0 - t * t);
    return 4.0 * t * dx - 2.0 * m * m * t * (1.0 - 2.0 * t * t);
}

CurveFamily circle_family(double m) {
    if (!(m > 0.0)) throw input_error("circle family requires m > 0");
    CurveFamily fam;
    fam.f = [m](double x, double y, double t) { return family_F(m, x, y, t); };
    fam.ft = [m](double x, double y, double t) { return family_Ft(m, x, y, t); };
    fam.seeds = [m](double t, int count) {
        const double cx0 = 1.0 - t * t;
        const double r = m * t * std::sqrt(std::max(0.0, 1.0 - t * t));
        std::vector<std::array<double, 2>> pts;
        pts.reserve(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) {
            const double a = 2.0 * std::numbers::pi * k / count;
            pts.push_back({cx0 + r * std::cos(a), r * std::sin(a)});
        }
        return pts;
    };
    return fam;
}

std::vector<EnvelopePoint> ert_envelope(double m, double t) {
    std::vector<EnvelopePoint> pts;
    const double x = (1.0 - t * t) + 0.5 * m * m * (1.0 - 2.0 * t * t);
    const double one_minus = 1.0 - 2.0 * t * t;
    const double radicand =
        m * m * (t * t - t * t * t * t) - 0.25 * m * m * m * m * one_minus * one_minus;
    if (radicand < 0.0) return pts;
    const double y = std::sqrt(radicand);
    pts.push_back({t, x, y, false});
    if (y > 0.0) pts.push_back({t, x, -y, false});
    return pts;
}

double verify_on_ellipse(double x, double y, double m) {
    if (!(m > 0.0)) throw input_error("verify_on_ellipse requires m > 0");
    const double dx = x - 0.5;
    return std::abs(dx * dx / (1.0 + m * m) + y * y / (m * m) - 0.25);
}

namespace {

struct Solve {
    bool ok = false;
    double x = 0.0, y = 0.0;
};

// Damped Gauss-Newton on r(x,y) = (F, F_t) with a finite-difference
// Jacobian. Handles the degenerate family F_t == 0 (rank-1 Jacobian), where
// plain Newton would divide by a vanishing determinant.
Solve solve_from_seed(const CurveFamily& fam, double t, double x, double y) {
    const double res_tol = 1e-10;
    const int max_iter = 60;
    for (int it = 0; it < max_iter; ++it) {
        const double f = fam.f(x, y, t);
        const double g = fam.ft(x, y, t);
        if (std::abs(f) < res_tol && std::abs(g) < res_tol) return {true, x, y};

        const double h = 1e-7 * (1.0 + std::abs(x) + std::abs(y));
        const double fx = (fam.f(x + h, y, t) - fam.f(x - h, y, t)) / (2.0 * h);
        const double fy = (fam.f(x, y + h, t) - fam.f(x, y - h, t)) / (2.0 * h);
        const double gx = (fam.ft(x + h, y, t) - fam.ft(x - h, y, t)) / (2.0 * h);
        const double gy = (fam.ft(x, y + h, t) - fam.ft(x, y - h, t)) / (2.0 * h);

        // normal equations (J^T J + mu I) step = -J^T r
        const double a11 = fx * fx + gx * gx;
        const double a12 = fx * fy + gx * gy;
        const double a22 = fy * fy + gy * gy;
        const double mu = 1e-12 * (a11 + a22) + 1e-300;
        const double b1 = -(fx * f + gx * g);
        const double b2 = -(fy * f + gy * g);
        const double det = (a11 + mu) * (a22 + mu) - a12 * a12;
        if (det == 0.0 || !std::isfinite(det)) return {};
        const double sx = ((a22 + mu) * b1 - a12 * b2) / det;
        const double sy = ((a11 + mu) * b2 - a12 * b1) / det;
        if (!std::isfinite(sx) || !std::isfinite(sy)) return {};
        x += sx;
        y += sy;
        if (std::abs(sx) + std::abs(sy) > 1e6) return {}; // diverged
    }
    const double f = fam.f(x, y, t);
    const double g = fam.ft(x, y, t);
    if (std::abs(f) < res_tol && std::abs(g) < res_tol) return {true, x, y};
    return {};
}

} // namespace

std::vector<EnvelopePoint> discriminant_envelope(const CurveFamily& family,
                                                 std::span<const double> t_grid,
                                                 int seeds_per_t) {
    if (t_grid.empty()) throw input_error("discriminant_envelope requires a nonempty t grid");
    if (seeds_per_t < 1) throw input_error("discriminant_envelope requires seeds_per_t >= 1");

    std::vector<std::vector<EnvelopePoint>> per_t(t_grid.size());
    parallel_for(static_cast<int>(t_grid.size()), [&](int idx) {
        const double t = t_grid[static_cast<std::size_t>(idx)];
        const auto seeds = family.seeds(t, seeds_per_t);

        // a member curve collapsed to a point marks its solution isolated
        bool collapsed = !seeds.empty();
        for (const auto& s : seeds) {
            if (std::hypot(s[0] - seeds[0][0], s[1] - seeds[0][1]) > 1e-12) {
                collapsed = false;
                break;
            }
        }

        std::vector<EnvelopePoint>& found = per_t[static_cast<std::size_t>(idx)];
        for (const auto& s : seeds) {
            const Solve sol = solve_from_seed(family, t, s[0], s[1]);
            if (!sol.ok) continue;
            bool duplicate = false;
            for (const EnvelopePoint& e : found) {
                if (std::hypot(e.x - sol.x, e.y - sol.y) < 1e-8) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) found.push_back({t, sol.x, sol.y, collapsed});
        }
    });

    std::vector<EnvelopePoint> out;
    for (const auto& group : per_t) out.insert(out.end(), group.begin(), group.end());
    return out;
}

} // namespace nr
