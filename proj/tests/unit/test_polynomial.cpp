#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nr/errors.hpp"
#include "nr/polynomial.hpp"
#include "test_rng.hpp"

using namespace nr;
using namespace nr::testing;

namespace {

// greedy nearest matching of two root multisets
void check_roots_match(std::vector<cx> got, const std::vector<cx>& expected, double tol) {
    REQUIRE(got.size() == expected.size());
    for (const cx& e : expected) {
        auto it = std::min_element(got.begin(), got.end(), [&e](cx a, cx b) {
            return std::abs(a - e) < std::abs(b - e);
        });
        REQUIRE(it != got.end());
        CHECK(std::abs(*it - e) < tol);
        got.erase(it);
    }
}

} // namespace

TEST_SUITE("polynomial") {

TEST_CASE("quadratic and quartic roots of unity") {
    check_roots_match(poly_roots(Polynomial{{cx(-1.0), cx(0.0), cx(1.0)}}),
                      {cx(1.0), cx(-1.0)}, 1e-12);
    check_roots_match(poly_roots(Polynomial{{cx(-1.0), cx(0.0), cx(0.0), cx(0.0), cx(1.0)}}),
                      {cx(1.0), cx(0.0, 1.0), cx(-1.0), cx(0.0, -1.0)}, 1e-12);
}

TEST_CASE("double root expanded and recovered") {
    const std::vector<cx> exact{cx(0.3), cx(0.3), cx(0.0, -0.5)};
    const Polynomial p = Polynomial::from_roots(exact);
    const std::vector<cx> got = poly_roots(p);
    check_roots_match(got, exact, 1e-6);
    // the merged pair comes back as one repeated value
    int repeated = 0;
    for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = i + 1; j < got.size(); ++j)
            if (got[i] == got[j]) ++repeated;
    CHECK(repeated == 1);
}

TEST_CASE("roots at the origin keep their multiplicity") {
    // z^3 + z^2 = z^2 (z + 1)
    const std::vector<cx> got = poly_roots(Polynomial{{cx(0.0), cx(0.0), cx(1.0), cx(1.0)}});
    check_roots_match(got, {cx(0.0), cx(0.0), cx(-1.0)}, 1e-12);
}

TEST_CASE("residuals stay below 1e-8 of the coefficient scale") {
    TestRng rng(404);
    for (int deg = 1; deg <= 12; ++deg) {
        CAPTURE(deg);
        std::vector<cx> coeffs;
        for (int k = 0; k <= deg; ++k) coeffs.push_back(rng.box());
        const Polynomial p{std::move(coeffs)};
        const std::vector<cx> roots = poly_roots(p);
        CHECK(static_cast<int>(roots.size()) == p.degree());
        for (const cx& r : roots) CHECK(std::abs(p.eval(r)) <= 1e-8 * p.coeff_scale());
    }
}

TEST_CASE("degree 0 is rejected") {
    CHECK_THROWS_AS(poly_roots(Polynomial{{cx(5.0)}}), input_error);
    CHECK_THROWS_AS(poly_roots(Polynomial{}), input_error);
}

TEST_CASE("arithmetic and evaluation") {
    const Polynomial p{{cx(1.0), cx(2.0), cx(3.0)}}; // 1 + 2z + 3z^2
    CHECK(p.eval(cx(2.0)) == cx(17.0));
    const Polynomial d = p.derivative(); // 2 + 6z
    CHECK(d.eval(cx(1.0)) == cx(8.0));
    auto [v, dv] = p.eval_with_derivative(cx(0.0, 1.0));
    CHECK(std::abs(v - p.eval(cx(0.0, 1.0))) < 1e-15);
    CHECK(std::abs(dv - d.eval(cx(0.0, 1.0))) < 1e-15);

    const Polynomial q{{cx(-1.0), cx(1.0)}}; // z - 1
    CHECK((p * q).degree() == 3);
    CHECK(std::abs((p * q).eval(cx(0.5)) - p.eval(cx(0.5)) * q.eval(cx(0.5))) < 1e-15);
    CHECK((p + q).coeff(0) == cx(0.0));
    CHECK((p - q).coeff(1) == cx(1.0));
    // trailing zeros trim away
    CHECK(Polynomial{{cx(1.0), cx(1.0), cx(0.0)}}.degree() == 1);
}

TEST_CASE("matrix polynomial evaluation") {
    TestRng rng(505);
    const CMatrix a = rng.matrix(4);

    SUBCASE("identity polynomial returns the matrix") {
        const CMatrix out = mat_poly_eval(Polynomial{{cx(0.0), cx(1.0)}}, a);
        CHECK((out - a).frobenius_norm() == 0.0);
    }
    SUBCASE("Jordan block is nilpotent") {
        CMatrix j(2);
        j(0, 1) = 1.0;
        const CMatrix out = mat_poly_eval(Polynomial{{cx(0.0), cx(0.0), cx(1.0)}}, j);
        CHECK(out.frobenius_norm() == 0.0);
    }
    SUBCASE("Horner agrees with the explicit power sum") {
        std::vector<cx> coeffs;
        for (int k = 0; k <= 6; ++k) coeffs.push_back(rng.box());
        const Polynomial p{coeffs};

        CMatrix powers = CMatrix::identity(4);
        CMatrix expected(4);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            expected += coeffs[k] * powers;
            powers = powers * a;
        }
        const CMatrix got = mat_poly_eval(p, a);
        CHECK((got - expected).frobenius_norm() < 1e-10);
    }
}

} // TEST_SUITE
