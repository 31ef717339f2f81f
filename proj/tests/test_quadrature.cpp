#include <cmath>

#include "doctest.h"
#include "heinz/errors.hpp"
#include "heinz/quadrature.hpp"

using heinz::EvalResult;
using heinz::QuadratureFailure;
using heinz::quad::integrate;

TEST_CASE("Gauss-Kronrod panel is exact on low-degree polynomials") {
    EvalResult e = integrate([](double x) { return std::pow(x, 13); }, 0.0, 1.0, 1e-3);
    CHECK(e.terms_used == 15); // single panel: |K15-G7| = 0 for degree <= 13
    CHECK(e.value == doctest::Approx(1.0 / 14.0).epsilon(1e-14));

    EvalResult f = integrate([](double x) { return std::pow(x, 22); }, 0.0, 1.0, 1e-12);
    CHECK(f.value == doctest::Approx(1.0 / 23.0).epsilon(1e-13));
}

TEST_CASE("smooth references") {
    EvalResult s = integrate([](double x) { return std::sin(x); }, 0.0,
                             3.14159265358979323846, 1e-12);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::fabs(s.value - 2.0) <= s.error_bound + 1e-13);

    EvalResult c = integrate([](double x) { return std::cos(10.0 * x); }, 0.0,
                             6.28318530717958648, 1e-11);
    CHECK(std::fabs(c.value) <= 1e-10);

    EvalResult g = integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0, 1e-12);
    CHECK(g.value == doctest::Approx(1.77245385090551603).epsilon(1e-12)); // sqrt(pi)
}

TEST_CASE("orientation and degenerate interval") {
    EvalResult fwd = integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    EvalResult rev = integrate([](double x) { return x * x; }, 1.0, 0.0, 1e-12);
    CHECK(fwd.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(rev.value == -fwd.value);
    EvalResult z = integrate([](double x) { return x; }, 0.5, 0.5, 1e-12);
    CHECK(z.value == 0.0);
}

TEST_CASE("breaks make piecewise data exact") {
    auto step = [](double x) { return x < 0.37 ? 1.0 : 3.0; };
    EvalResult e = integrate(step, 0.0, 1.0, 1e-12, {0.37});
    CHECK(e.value == doctest::Approx(0.37 + 3.0 * 0.63).epsilon(1e-14));
}

TEST_CASE("integrable singularity: certified with a break, fails when pushed") {
    auto f = [](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.3)); };
    EvalResult loose = integrate(f, 0.0, 1.0, 5e-4, {0.3});
    CHECK(loose.value == doctest::Approx(2.768765168078483323).epsilon(1e-3));
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 1e-12, {0.3}), QuadratureFailure);
}

TEST_CASE("non-finite integrand values are rejected") {
    auto f = [](double x) { return 1.0 / (x - 0.5); }; // pole on the first midpoint
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 1e-10), QuadratureFailure);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("sign-changing integrand against its antiderivative") {
    auto f = [](double s) {
        const double q = 1.0 + s * s;
        return s * (6.0 * std::pow(q, -2.5) - 2.0 * std::pow(q, -1.5));
    };
    auto F = [](double s) {
        const double q = 1.0 + s * s;
        return -2.0 * std::pow(q, -1.5) + 2.0 * std::pow(q, -0.5);
    };
    EvalResult e = integrate(f, 0.0, 2.0, 1e-12);
    CHECK(e.value == doctest::Approx(F(2.0) - F(0.0)).epsilon(1e-12));
}
