#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nr/blaschke.hpp"
#include "nr/envelope.hpp"
#include "nr/errors.hpp"
#include "nr/numerical_range.hpp"
#include "test_rng.hpp"

using namespace nr;
using namespace nr::testing;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_SUITE("envelope") {

TEST_CASE("family values at the degenerate circles") {
    CHECK(family_F(1.0, 1.0, 0.0, 0.0) == 0.0); // radius-0 circle at (1,0)
    CHECK(family_F(1.0, 0.0, 0.0, 1.0) == 0.0); // radius-0 circle at (0,0)
}

TEST_CASE("t-derivative matches central differences") {
    TestRng rng(51);
    for (int round = 0; round < 200; ++round) {
        const double m = rng.uniform(0.1, 3.0);
        const double x = rng.uniform(-1.0, 2.0);
        const double y = rng.uniform(-2.0, 2.0);
        const double t = rng.uniform(0.05, 0.95);
        const double h = 1e-5;
        const double fd = (family_F(m, x, y, t + h) - family_F(m, x, y, t - h)) / (2.0 * h);
        CHECK(std::abs(family_Ft(m, x, y, t) - fd) < 1e-6);
    }
}

TEST_CASE("closed-form envelope points") {
    SUBCASE("symmetric parameter kills the (1-2t^2) terms") {
        for (double m : {0.3, 1.0, 2.5}) {
            const auto pts = ert_envelope(m, 1.0 / std::sqrt(2.0));
            REQUIRE(pts.size() == 2);
            CHECK(std::abs(pts[0].x - 0.5) < 1e-12);
            CHECK(std::abs(std::abs(pts[0].y) - m / 2.0) < 1e-12);
            CHECK(std::abs(pts[0].y + pts[1].y) < 1e-15); // the +- pair
        }
    }
    SUBCASE("negative radicand yields no points") {
        CHECK(ert_envelope(1.0, 0.0).empty());
        CHECK(ert_envelope(0.5, 0.01).empty());
    }
    SUBCASE("points satisfy the ellipse identity") {
        for (const EnvelopePoint& e : ert_envelope(0.8, 0.6))
            CHECK(verify_on_ellipse(e.x, e.y, 0.8) < 1e-12);
    }
    SUBCASE("points satisfy the discriminant system") {
        for (double m : {0.4, 1.3}) {
            for (double t : {0.45, 0.6, 0.8}) {
                for (const EnvelopePoint& e : ert_envelope(m, t)) {
                    CHECK(std::abs(family_F(m, e.x, e.y, e.t)) < 1e-10);
                    CHECK(std::abs(family_Ft(m, e.x, e.y, e.t)) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("ellipse identity residuals") {
    CHECK(verify_on_ellipse(0.5, 0.35 / 2.0 * 2.0, 0.35) > 0.0); // sanity: off-curve point
    for (double m : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        CHECK(verify_on_ellipse(0.5, m / 2.0, m) < 1e-15);
        CHECK(verify_on_ellipse(0.5 * (1.0 + std::sqrt(1.0 + m * m)), 0.0, m) < 1e-15);
        double worst = 0.0;
        for (int k = 0; k <= 1000; ++k)
            for (const EnvelopePoint& e : ert_envelope(m, k / 1000.0))
                worst = std::max(worst, verify_on_ellipse(e.x, e.y, m));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("numeric envelope matches the closed form for the circle family") {
    const CurveFamily fam = circle_family(1.0);
    std::vector<double> grid;
    for (int k = 1; k < 100; ++k) grid.push_back(k / 100.0);
    const auto env = discriminant_envelope(fam, grid);
    CHECK(env.size() > 100); // two signed branches over the valid range

    for (const EnvelopePoint& e : env) {
        CHECK(std::abs(family_F(1.0, e.x, e.y, e.t)) < 1e-10);
        CHECK(std::abs(family_Ft(1.0, e.x, e.y, e.t)) < 1e-10);
        if (e.isolated) continue;
        double best = 1e9;
        for (const EnvelopePoint& c : ert_envelope(1.0, e.t))
            best = std::min(best, std::hypot(c.x - e.x, c.y - e.y));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("the isolated point (1,0) appears at t = 0") {
    const CurveFamily fam = circle_family(0.7);
    const std::vector<double> grid{0.0};
    const auto env = discriminant_envelope(fam, grid);
    REQUIRE(env.size() == 1);
    CHECK(env[0].isolated);
    CHECK(std::abs(env[0].x - 1.0) < 1e-12);
    CHECK(std::abs(env[0].y) < 1e-12);
}

TEST_CASE("support-line family of the Jordan block envelopes the half-radius circle") {
    CMatrix j(2);
    j(0, 1) = 1.0;
    // lines x cos g + y sin g = 1/2; h is constant so F_t is analytic
    CurveFamily lines;
    lines.f = [](double x, double y, double g) {
        return x * std::cos(g) + y * std::sin(g) - 0.5;
    };
    lines.ft = [](double x, double y, double g) { return -x * std::sin(g) + y * std::cos(g); };
    lines.seeds = [&j](double g, int count) {
        const auto [h, v] = support_value(j, g);
        std::vector<std::array<double, 2>> pts;
        for (int k = 0; k < count; ++k) {
            const double s = -1.0 + 2.0 * k / std::max(1, count - 1);
            pts.push_back({h * std::cos(g) - s * std::sin(g), h * std::sin(g) + s * std::cos(g)});
        }
        return pts;
    };

    std::vector<double> grid;
    for (int k = 0; k < 64; ++k) grid.push_back(two_pi * k / 64);
    const auto env = discriminant_envelope(lines, grid);
    CHECK(!env.empty());
    for (const EnvelopePoint& e : env)
        CHECK(std::abs(std::hypot(e.x, e.y) - 0.5) < 1e-6);
}

TEST_CASE("t-independent family accepts every curve point") {
    CurveFamily constant;
    constant.f = [](double x, double y, double) { return x * x + y * y - 1.0; };
    constant.ft = [](double, double, double) { return 0.0; };
    constant.seeds = [](double, int count) {
        std::vector<std::array<double, 2>> pts;
        for (int k = 0; k < count; ++k) {
            const double a = two_pi * k / count;
            // seed slightly off the circle so the solve has work to do
            pts.push_back({1.05 * std::cos(a), 1.05 * std::sin(a)});
        }
        return pts;
    };
    const std::vector<double> grid{0.0, 0.5};
    const auto env = discriminant_envelope(constant, grid);
    CHECK(env.size() >= 8);
    for (const EnvelopePoint& e : env) CHECK(std::abs(std::hypot(e.x, e.y) - 1.0) < 1e-10);
}

TEST_CASE("hull of the circle family matches the filled ellipse") {
    const double m = 1.3;
    std::vector<cx> samples;
    for (int it = 0; it <= 400; ++it) {
        const double t = static_cast<double>(it) / 400.0;
        const double c = 1.0 - t * t;
        const double r = m * t * std::sqrt(std::max(0.0, 1.0 - t * t));
        for (int k = 0; k < 128; ++k)
            samples.push_back(cx(c, 0.0) + std::polar(r, two_pi * k / 128));
    }
    // the boundary of the union is the ellipse with foci 0 and 1, minor axis m
    const Ellipse e{cx(0.0), cx(1.0), m};
    CHECK(hausdorff_distance(ConvexPolygon::hull(samples), e.boundary_polygon(2000)) < 1e-3);
}

TEST_CASE("support-line envelope reproduces a smooth 3x3 numerical range") {
    TestRng rng(52);
    const CMatrix a = rng.matrix(3);
    const NumericalRangeApprox range = numerical_range(a, 720);

    CurveFamily lines;
    lines.f = [&a](double x, double y, double g) {
        return x * std::cos(g) + y * std::sin(g) - support_value(a, g).first;
    };
    lines.ft = [&a](double x, double y, double g) {
        const double dh = 1e-6;
        const double hprime =
            (support_value(a, g + dh).first - support_value(a, g - dh).first) / (2.0 * dh);
        return -x * std::sin(g) + y * std::cos(g) - hprime;
    };
    lines.seeds = [&a](double g, int count) {
        const auto [h, v] = support_value(a, g);
        const cx touch = rayleigh(a, v);
        std::vector<std::array<double, 2>> pts;
        for (int k = 0; k < count; ++k) {
            const double s = -0.5 + 1.0 * k / std::max(1, count - 1);
            pts.push_back({touch.real() - s * std::sin(g), touch.imag() + s * std::cos(g)});
        }
        return pts;
    };

    // same angle grid as the support sampling, so the envelope solutions land
    // on the same boundary points the Kippenhahn construction touches
    std::vector<double> grid;
    for (int k = 0; k < 720; ++k) grid.push_back(two_pi * k / 720);
    const auto env = discriminant_envelope(lines, grid, 4);
    CHECK(env.size() >= 600);
    std::vector<cx> pts;
    for (const EnvelopePoint& e : env) pts.push_back(cx(e.x, e.y));
    CHECK(hausdorff_distance(ConvexPolygon::hull(pts), range.inner) < 1e-4);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(circle_family(0.0), input_error);
    CHECK_THROWS_AS(circle_family(-1.0), input_error);
    CHECK_THROWS_AS(verify_on_ellipse(0.0, 0.0, 0.0), input_error);
    const CurveFamily fam = circle_family(1.0);
    CHECK_THROWS_AS(discriminant_envelope(fam, std::vector<double>{}), input_error);
    CHECK_THROWS_AS(discriminant_envelope(fam, std::vector<double>{0.5}, 0), input_error);
}

} // TEST_SUITE
