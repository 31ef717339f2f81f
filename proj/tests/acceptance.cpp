// Acceptance harness: one pass/fail line per criterion, exit 1 on any failure.
// Tolerances are pinned here, not read from configuration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "heinz/ballharmonic.hpp"
#include "heinz/profile.hpp"
#include "heinz/report.hpp"
#include "heinz/rng.hpp"
#include "heinz/specfun.hpp"
#include "heinz/verify.hpp"

using namespace heinz;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kSeed = 12345;

std::uint64_t sub_seed(int kind, int n, int j) {
    return rng::derive(kSeed, (static_cast<std::uint64_t>(kind) << 32) |
                                  (static_cast<std::uint64_t>(n) << 16) |
                                  static_cast<std::uint64_t>(j));
}

// 1. Constants table against the closed forms of the low-dimensional cases.
bool criterion1() {
    const double want[3] = {2.0 / kPi, std::sqrt(2.0) - 1.0, (4.0 - kPi) / kPi};
    for (int n = 2; n <= 4; ++n) {
        const EvalResult c = heinz_constant(n, 1e-13);
        if (std::fabs(c.value - want[n - 2]) > 1e-12) return false;
    }
    return true;
}

// 2. u_profile / v_profile against the closed-form oracle.
bool criterion2() {
    std::vector<double> rs{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    for (int n = 2; n <= 4; ++n) {
        for (double r : rs) {
            const double uo = closed_form_oracle(n, Which::U, r);
            const double vo = closed_form_oracle(n, Which::V, r);
            if (std::fabs(u_profile(n, r, 1e-12).value - uo) > 1e-10) return false;
            if (std::fabs(v_profile(n, r, 1e-12).value - vo) > 1e-10) return false;
        }
    }
    return true;
}

// 3. Quadrature route against the series route for the extremal profile.
bool criterion3() {
    for (int n = 2; n <= 8; ++n) {
        for (int i = 1; i <= 9; ++i) {
            const double r = i * 0.1;
            const EvalResult q = ball::axisym_extension(verify::sign_profile(n), r, 1e-9);
            const EvalResult u = u_profile(n, r, 1e-12);
            if (std::fabs(q.value - u.value) > 1e-8) return false;
        }
    }
    return true;
}

// 4. Hypergeometric identity suite.
bool criterion4() {
    report::Report rep;
    for (int n = 2; n <= 10; ++n) {
        for (double r : {0.1, 0.5, 0.9}) {
            rep.points.push_back(specfun::check_transform_3f2_to_4f3(n, r, 1e-12));
            rep.points.push_back(specfun::check_kummer_quadratic(n, r, 1e-12));
        }
        rep.append(check_coefficient_split(n, 50));
    }
    return rep.pass() && rep.min_margin() >= -1e-10;
}

// 5. V non-increasing with V >= C_n on a 101-point grid.
bool criterion5() {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i * 0.01);
    for (int n = 2; n <= 12; ++n) {
        if (!check_monotone_v(n, grid, 1e-10).pass()) return false;
    }
    return true;
}

// 6. Generalized Schwarz inequality on seeded random odd maps; the sign map
//    saturates equality.
bool criterion6() {
    const double radii[4] = {0.2, 0.5, 0.8, 0.95};
    const long samples = 200000;
    for (int n = 2; n <= 4; ++n) {
        for (int j = 0; j < 20; ++j) {
            const BoundaryMap map = verify::random_odd_map(n, sub_seed(1, n, j));
            const auto dir = verify::random_unit_vector(n, sub_seed(2, n, j));
            std::vector<BallPoint> grid;
            for (double r : radii) {
                BallPoint x;
                x.coords.resize(n);
                for (int k = 0; k < n; ++k) x.coords[k] = r * dir[k];
                grid.push_back(x);
            }
            if (!verify::verify_generalized_schwarz(map, grid, samples,
                                                    sub_seed(3, n, j))
                     .pass()) {
                return false;
            }
        }
        std::vector<BallPoint> axis;
        for (double r : radii) axis.push_back(BallPoint::axis(n, r));
        const report::Report rep = verify::verify_generalized_schwarz(
            verify::sign_map(n), axis, samples, sub_seed(4, n, 0));
        if (!rep.pass()) return false;
        for (const auto& p : rep.points) {
            if (std::fabs(p.margin) > 2.0 * p.budget) return false;
        }
    }
    return true;
}

// 7. Ratio bound for the same family (odd maps fix the origin exactly).
bool criterion7() {
    const std::vector<double> rs{0.2, 0.5, 0.8};
    const long samples = 200000;
    for (int n = 2; n <= 4; ++n) {
        for (int j = 0; j < 20; ++j) {
            const BoundaryMap map = verify::random_odd_map(n, sub_seed(1, n, j));
            const auto dir = verify::random_unit_vector(n, sub_seed(2, n, j));
            if (!verify::verify_ratio_bound(map, rs, dir, samples, sub_seed(3, n, j))
                     .pass()) {
                return false;
            }
        }
        std::vector<double> en(n, 0.0);
        en[n - 1] = 1.0;
        if (!verify::verify_ratio_bound(verify::sign_map(n), rs, en, samples,
                                        sub_seed(4, n, 0))
                 .pass()) {
            return false;
        }
    }
    return true;
}

// 8. Sharpness sweep: quotient >= C_n - 1e-6, non-increasing beyond m = 10,
//    limit-profile extrapolations within 1e-3 of C_n.
bool criterion8() {
    bool ok = true;
    for (int n : {2, 3}) {
        const verify::SharpnessTable t =
            verify::sharpness_sweep(n, {2, 5, 20, 100}, {0.9, 0.99, 0.999}, 1e-8);
        std::fputs(verify::sharpness_table_text(t).c_str(), stdout);
        ok = ok && t.rep.pass();
        ok = ok && std::fabs(t.deriv_near_one - t.c_n) <= 1e-3;
        ok = ok && std::fabs(t.quotient_extrapolated - t.c_n) <= 1e-3;
        ok = ok && std::fabs(t.deriv_extrapolated - t.c_n) <= 1e-3;
    }
    return ok;
}

// 9. Byte-identical JSON across repeated runs and worker counts.
bool criterion9() {
    const auto dir = verify::random_unit_vector(3, sub_seed(2, 3, 0));
    auto run = [&]() {
        const report::Report rep = verify::verify_ratio_bound(
            verify::random_odd_map(3, sub_seed(1, 3, 0)), {0.2, 0.5, 0.8}, dir,
            20000, sub_seed(3, 3, 0));
        return report::to_json(rep);
    };
    setenv("HEINZ_THREADS", "1", 1);
    const std::string a = run();
    const std::string b = run();
    setenv("HEINZ_THREADS", "4", 1);
    const std::string c = run();
    unsetenv("HEINZ_THREADS");
    return a == b && a == c;
}

} // namespace

int main() {
    const std::vector<std::function<bool()>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9};
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i]();
        } catch (const std::exception& e) {
            std::fprintf(stdout, "criterion %zu threw: %s\n", i + 1, e.what());
        }
        const std::chrono::duration<double> dt =
            std::chrono::steady_clock::now() - start;
        std::fprintf(stdout, "criterion %zu: %s (%.2f s)\n", i + 1,
                     ok ? "PASS" : "FAIL", dt.count());
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    std::fprintf(stdout, "acceptance: %zu/%zu criteria passed\n",
                 criteria.size() - static_cast<size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
