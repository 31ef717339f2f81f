#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "heinz/ballharmonic.hpp"
#include "heinz/errors.hpp"
#include "heinz/extremal.hpp"
#include "heinz/profile.hpp"
#include "heinz/rng.hpp"

using namespace heinz;

namespace {

AxisymProfile constant_one(int n) {
    return AxisymProfile{n, [](double) { return 1.0; }, {}};
}

AxisymProfile coordinate(int n) {
    return AxisymProfile{n, [](double t) { return t; }, {}};
}

} // namespace

TEST_CASE("poisson kernel basics") {
    BallPoint origin = BallPoint::axis(3, 0.0);
    std::vector<double> p(3);
    for (std::uint64_t i = 0; i < 32; ++i) {
        rng::sphere_point(5150, i, 3, p.data());
        CHECK(ball::poisson_kernel(origin, p) ==
              doctest::Approx(1.0).epsilon(1e-13)); // ||zeta||^2 is 1 up to rounding
        BallPoint x = BallPoint::axis(3, 0.6);
        CHECK(ball::poisson_kernel(x, p) > 0.0);
    }
    // off-unit zeta is normalized internally
    BallPoint x = BallPoint::axis(3, 0.4);
    std::vector<double> z{0.0, 0.0, 1.0};
    std::vector<double> z2{0.0, 0.0, 1.0 + 1e-6};
    CHECK(ball::poisson_kernel(x, z) == doctest::Approx(ball::poisson_kernel(x, z2)));

    CHECK_THROWS_AS(ball::poisson_kernel(BallPoint::axis(3, 1.0), z), PointOnBoundary);
    CHECK_THROWS_AS(ball::poisson_kernel(x, std::vector<double>{0.0, 0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ball::poisson_kernel(x, std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("axisym extension reproduces harmonic polynomials") {
    for (int n : {2, 3, 5, 8}) {
        for (double r : {0.0, 0.3, 0.7, 0.95}) {
            EvalResult one = ball::axisym_extension(constant_one(n), r, 1e-12);
            CHECK(one.value == doctest::Approx(1.0).epsilon(1e-11));

            // x_n is harmonic, so its extension along the axis is r itself
            EvalResult lin = ball::axisym_extension(coordinate(n), r, 1e-12);
            CHECK(lin.value == doctest::Approx(r).epsilon(1e-11).scale(1.0));

            EvalResult dlin = ball::axisym_radial_derivative(coordinate(n), r, 1e-12);
            CHECK(dlin.value == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("axisym extension of the sign profile matches the closed profile") {
    EvalResult a = ball::axisym_extension(verify::sign_profile(2), 0.5, 1e-11);
    EvalResult ua = u_profile(2, 0.5, 1e-12);
    CHECK(std::fabs(a.value - ua.value) <= a.error_bound + ua.error_bound + 1e-10);
    CHECK(a.value == doctest::Approx(0.5903344706017331).epsilon(1e-10));

    EvalResult b = ball::axisym_extension(verify::sign_profile(5), 0.7, 1e-11);
    CHECK(b.value == doctest::Approx(0.9001913833555908).epsilon(1e-10));

    EvalResult da = ball::axisym_radial_derivative(verify::sign_profile(2), 0.9, 1e-11);
    CHECK(da.value == doctest::Approx(0.7034472622846203).epsilon(1e-9));
}

TEST_CASE("axisym guards") {
    CHECK_THROWS_AS(ball::axisym_extension(constant_one(3), 1.0, 1e-10), PointOnBoundary);
    CHECK_THROWS_AS(ball::axisym_extension(constant_one(3), -0.1, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(ball::axisym_extension(constant_one(1), 0.5, 1e-10),
                    std::invalid_argument);
    AxisymProfile empty{3, nullptr, {}};
    CHECK_THROWS_AS(ball::axisym_extension(empty, 0.5, 1e-10), std::invalid_argument);
}

TEST_CASE("monte carlo extension of a constant map") {
    BoundaryMap cmap{3, [](const std::vector<double>&) {
                         return std::vector<double>{0.1, -0.3, 0.2};
                     }};
    BallPoint x = BallPoint::axis(3, 0.5);
    auto est = ball::mc_extension(cmap, x, 20000, 2024);
    const double want[3] = {0.1, -0.3, 0.2};
    for (int j = 0; j < 3; ++j) {
        CHECK(std::fabs(est[j].value - want[j]) <= est[j].error_bound);
        CHECK(est[j].error_bound < 0.05);
        CHECK(est[j].terms_used == 20000);
    }
}

TEST_CASE("monte carlo agrees with the axisym quadrature for f_m") {
    BallPoint x = BallPoint::axis(3, 0.5);
    auto est = ball::mc_extension(verify::f_m(3, 3), x, 60000, 99);
    EvalResult axis = ball::axisym_extension(verify::h_m_profile(3, 3), 0.5, 1e-11);
    CHECK(std::fabs(est[2].value - axis.value) <=
          est[2].error_bound + axis.error_bound);
    // first components average to zero by symmetry
    CHECK(std::fabs(est[0].value) <= est[0].error_bound);
    CHECK(std::fabs(est[1].value) <= est[1].error_bound);
}

TEST_CASE("parallel kernel against the straight-loop reference") {
    BoundaryMap map = verify::f_m(4, 3);
    BallPoint x{{0.2, -0.1, 0.4}};
    auto par = ball::mc_extension(map, x, 24576, 31337);
    auto ser = ball::mc_extension_serial(map, x, 24576, 31337);
    REQUIRE(par.size() == ser.size());
    for (std::size_t j = 0; j < par.size(); ++j) {
        CHECK(std::fabs(par[j].value - ser[j].value) <=
              1e-13 * (1.0 + std::fabs(ser[j].value)));
    }
}

TEST_CASE("monte carlo is bit-identical across worker counts") {
    BoundaryMap map = verify::f_m(5, 4);
    BallPoint x{{0.1, 0.2, -0.3, 0.5}};

    setenv("HEINZ_THREADS", "1", 1);
    auto one = ball::mc_extension(map, x, 30000, 4242);
    setenv("HEINZ_THREADS", "7", 1);
    auto many = ball::mc_extension(map, x, 30000, 4242);
    unsetenv("HEINZ_THREADS");

    REQUIRE(one.size() == many.size());
    for (std::size_t j = 0; j < one.size(); ++j) {
        CHECK(one[j].value == many[j].value);
        CHECK(one[j].error_bound == many[j].error_bound);
    }
}

TEST_CASE("monte carlo guards") {
    BoundaryMap map = verify::sign_map(3);
    CHECK_THROWS_AS(ball::mc_extension(map, BallPoint::axis(3, 0.96), 5000, 1),
                    TooCloseToBoundary);
    CHECK_THROWS_AS(ball::mc_extension(map, BallPoint::axis(3, 0.5), 999, 1),
                    InsufficientSamples);
    CHECK_THROWS_AS(ball::mc_extension(map, BallPoint::axis(4, 0.5), 5000, 1),
                    std::invalid_argument);
    BoundaryMap bad{3, nullptr};
    CHECK_THROWS_AS(ball::mc_extension(bad, BallPoint::axis(3, 0.5), 5000, 1),
                    std::invalid_argument);
}
