#include "heinz/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heinz/errors.hpp"
#include "heinz/quadrature.hpp"
#include "heinz/specfun.hpp"

namespace heinz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kUlp = 0x1.0p-52;
constexpr double kTolFloor = 1e-13;

void check_n(int n) {
    if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
}

void check_r01(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("r must lie in [0,1]");
}

// relative slack of exp(lgamma...) prefactors (glibc lgamma ~1e-15 rel,
// amplified by the magnitude of the log terms)
double gamma_slack(double log_sum_abs) {
    return 1e-14 * (2.0 + log_sum_abs);
}

// Peak log-amplitude of the alternating 4F3 terms at -r^2; the terms grow
// like k^(n/2-2) r^(2k) before decaying, which costs that many digits.
double series_peak_log(int n, double r) {
    if (n <= 4 || r <= 0.0) return 0.0;
    const double s = 0.5 * n - 2.0;
    const double kstar = s / (2.0 * std::log(1.0 / r));
    if (kstar <= 1.0) return 0.0;
    return s * (std::log(kstar) - 1.0);
}

// L * r * 4F3[{n/2,(n-1)/2,1/2,1+n/4}; {n/4,3/2,(1+n)/2}; -r^2]
EvalResult u_4f3(int n, double r, double tol) {
    const double nn = n;
    const double lead = ProfileCoefficients{n}.leading();
    EvalResult f = specfun::pfq({{nn / 2.0, (nn - 1.0) / 2.0, 0.5, 1.0 + nn / 4.0},
                                 {nn / 4.0, 1.5, (1.0 + nn) / 2.0},
                                 -r * r},
                                std::max(kTolFloor, tol / (2.0 * lead * r)));
    const double value = lead * r * f.value;
    return {value, lead * r * f.error_bound + std::fabs(value) * 8.0 * kUlp,
            f.terms_used};
}

} // namespace

double ProfileCoefficients::leading() const {
    return 2.0 *
           std::exp(std::lgamma(1.0 + n / 2.0) - std::lgamma((1.0 + n) / 2.0)) /
           std::sqrt(kPi);
}

double ProfileCoefficients::c(long k) const {
    if (k < 1) throw std::invalid_argument("ProfileCoefficients::c: k >= 1");
    const double kk = static_cast<double>(k);
    const double mag =
        2.0 * (4.0 * kk + n) *
        std::exp(std::lgamma(kk + n / 2.0) - std::lgamma(1.0 + kk) -
                 std::lgamma((n - 1.0) / 2.0)) /
        ((1.0 + 2.0 * kk) * (-1.0 + 2.0 * kk + n) * std::sqrt(kPi));
    return (k % 2 != 0) ? -mag : mag;
}

double MonotoneCoefficients::a(long m) const {
    const double mm = static_cast<double>(m);
    return (1.0 + mm) *
           std::exp(std::lgamma(0.5 + mm) + std::lgamma((3.0 + n) / 2.0) -
                    std::lgamma(1.5 + mm + n / 2.0)) /
           std::sqrt(kPi);
}

double MonotoneCoefficients::ratio(long m) const {
    const double mm = static_cast<double>(m);
    return (1.0 + mm) * (3.0 + 2.0 * mm + n) / ((2.0 + mm) * (1.0 + 2.0 * mm));
}

EvalResult u_series(int n, double r, double tol) {
    check_n(n);
    check_r01(r);
    tol = std::max(tol, kTolFloor);
    if (r == 0.0) return {0.0, 0.0, 1};

    const ProfileCoefficients pc{n};
    const double r2 = r * r;
    double sum = pc.leading() * r;
    double sum_abs = sum;
    double power = r;
    double prev = std::fabs(sum);
    int drops = 0;
    for (long k = 1; k < specfun::kMaxTerms; ++k) {
        power *= r2;
        const double term = pc.c(k) * power;
        const double at = std::fabs(term);
        drops = (at < prev) ? drops + 1 : 0;
        if (drops >= 3 && at <= tol) {
            return {sum, at + sum_abs * kUlp, k}; // Leibniz: tail <= first omitted
        }
        sum += term;
        sum_abs += at;
        prev = at;
    }
    throw NonConvergent("u_series: no certified tail within budget at r = " +
                        std::to_string(r));
}

EvalResult u_profile(int n, double r, double tol) {
    check_n(n);
    check_r01(r);
    tol = std::max(tol, kTolFloor);
    if (r == 0.0) return {0.0, 0.0, 1};

    const double r_cap = 0.999;
    const double rs = std::min(r, r_cap);
    EvalResult head{0.0, 0.0, 0};
    double r0 = 0.0;
    if (series_peak_log(n, rs) <= std::log(tol / (8.0 * kUlp))) {
        EvalResult s = u_4f3(n, rs, tol / 2.0);
        if (s.error_bound <= tol) {
            head = s;
            r0 = rs;
        }
    }
    if (r0 == r) return head;

    // tail by integrating the closed-form derivative; covers r = 1 exactly
    // and the large-n regime where the alternating series loses precision
    auto vfun = [n](double t) { return v_profile(n, t, kTolFloor).value; };
    EvalResult tail = quad::integrate(vfun, r0, r, tol / 2.0);
    // the quadrature bound covers only the computed integrand; V itself
    // carries a bound, largest at r0 since V is decreasing
    const double ve = std::max(v_profile(n, r0, kTolFloor).error_bound,
                               v_profile(n, r, kTolFloor).error_bound);
    return {head.value + tail.value,
            head.error_bound + tail.error_bound + 2.0 * (r - r0) * ve,
            head.terms_used + tail.terms_used};
}

EvalResult v_profile(int n, double r, double tol) {
    check_n(n);
    check_r01(r);
    tol = std::max(tol, kTolFloor);

    const ProfileCoefficients pc{n};
    if (r == 0.0) {
        const double lead = pc.leading();
        return {lead, std::fabs(lead) * gamma_slack(4.0 + n / 8.0), 1};
    }
    const double nn = n;
    const double lg1 = std::lgamma(1.0 + nn / 2.0);
    const double lg2 = std::lgamma((3.0 + nn) / 2.0);
    const double pref = std::exp(lg1 - lg2) / std::sqrt(kPi);
    const double pw = std::pow(1.0 + r * r, -nn / 2.0);

    if (n == 2) { // the 2F1 coefficient (n-2) vanishes
        const double value = pref * pw * 3.0;
        return {value, std::fabs(value) * gamma_slack(std::fabs(lg1) + std::fabs(lg2)), 1};
    }
    const double coeff = (nn - 2.0) * r * r;
    EvalResult f = specfun::gauss2f1_neg(
        0.5, 1.0, (3.0 + nn) / 2.0, -r * r,
        std::max(kTolFloor, tol / (4.0 * std::max(1.0, pref * pw * coeff))));
    const double value = pref * pw * (1.0 + nn - coeff * f.value);
    const double slack =
        gamma_slack(std::fabs(lg1) + std::fabs(lg2) + std::fabs(std::log(pw)));
    return {value, pref * pw * coeff * f.error_bound + std::fabs(value) * slack,
            f.terms_used};
}

EvalResult heinz_constant(int n, double tol) {
    check_n(n);
    tol = std::max(tol, kTolFloor);
    const double nn = n;
    const double lg_fact = std::lgamma(nn + 1.0);
    const double lg_half = std::lgamma((1.0 + nn) / 2.0);
    const double lg_three = std::lgamma((3.0 + nn) / 2.0);
    const double log_two = 1.5 * nn * std::log(2.0);
    const double pref = std::exp(lg_fact - log_two - lg_half - lg_three);

    if (n == 2) {
        const double value = pref * 3.0;
        return {value, std::fabs(value) * gamma_slack(lg_fact + log_two + lg_half + lg_three), 1};
    }
    EvalResult f = specfun::gauss2f1_neg(
        0.5, 1.0, (3.0 + nn) / 2.0, -1.0,
        std::max(kTolFloor, tol / (4.0 * std::max(1.0, pref * (nn - 2.0)))));
    const double value = pref * (1.0 + nn - (nn - 2.0) * f.value);
    const double slack =
        gamma_slack(std::fabs(lg_fact) + log_two + std::fabs(lg_half) + std::fabs(lg_three));
    return {value, pref * (nn - 2.0) * f.error_bound + std::fabs(value) * slack,
            f.terms_used};
}

double closed_form_oracle(int n, Which which, double r) {
    if (n < 2 || n > 4) {
        throw UnsupportedDimension("closed_form_oracle: n must be 2, 3 or 4");
    }
    check_r01(r);
    const bool small = r < 1e-4; // three-term Taylor beats the 0/0 forms here
    switch (n) {
        case 2:
            return which == Which::U ? 4.0 * std::atan(r) / kPi
                                     : 4.0 / (kPi * (1.0 + r * r));
        case 3: {
            if (small) {
                const double r2 = r * r;
                return which == Which::U
                           ? r * (1.5 + r2 * (-0.875 + 0.6875 * r2))
                           : 1.5 + r2 * (-2.625 + 3.4375 * r2);
            }
            const double s = std::sqrt(1.0 + r * r);
            return which == Which::U
                       ? (-1.0 + r * r + s) / (r * s)
                       : (1.0 - s - r * r * (-3.0 + s)) / (r * r * s * s * s);
        }
        default: {
            if (small) {
                const double r2 = r * r;
                return which == Which::U
                           ? r * (16.0 / 3.0 + r2 * (-64.0 / 15.0 + (144.0 / 35.0) * r2)) / kPi
                           : (16.0 / 3.0 + r2 * (-64.0 / 5.0 + (144.0 / 7.0) * r2)) / kPi;
            }
            const double r2 = r * r;
            const double q = 1.0 + r2;
            return which == Which::U
                       ? (2.0 * r * (r2 - 1.0) + 2.0 * q * q * std::atan(r)) /
                             (kPi * r2 * q)
                       : 4.0 * (r + 3.0 * r * r2 - q * q * std::atan(r)) /
                             (kPi * r * r2 * q * q);
        }
    }
}

report::Report check_monotone_v(int n, const std::vector<double>& grid, double tol) {
    check_n(n);
    tol = std::max(tol, kTolFloor);
    for (size_t i = 0; i < grid.size(); ++i) {
        check_r01(grid[i]);
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw std::invalid_argument("check_monotone_v: grid must be increasing");
        }
    }
    report::Report rep;
    EvalResult c = heinz_constant(n, tol);
    std::vector<EvalResult> v(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) v[i] = v_profile(n, grid[i], tol);

    for (size_t i = 0; i < grid.size(); ++i) {
        rep.points.push_back(report::make_record(
            grid[i], c.value, v[i].value, 2.0 * tol + v[i].error_bound + c.error_bound));
    }
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        rep.points.push_back(report::make_record(
            grid[i + 1], v[i + 1].value, v[i].value,
            2.0 * tol + v[i].error_bound + v[i + 1].error_bound));
    }
    return rep;
}

report::Report check_coefficient_split(int n, long k_max) {
    check_n(n);
    if (k_max < 1) throw std::invalid_argument("check_coefficient_split: k_max >= 1");
    report::Report rep;
    const double nn = n;
    const double lg_nm1 = std::lgamma((nn - 1.0) / 2.0);
    const double lg_np1 = std::lgamma((1.0 + nn) / 2.0);
    const double lg_half_n = std::lgamma(1.0 + nn / 2.0);
    const double lg_n = std::lgamma(nn);
    for (long k = 1; k <= k_max; ++k) {
        const double kk = static_cast<double>(k);
        const double sign = (k % 2 != 0) ? -1.0 : 1.0;
        const double lg_k_half = std::lgamma(kk + nn / 2.0);
        const double lhs = sign * 2.0 * (4.0 * kk + nn) *
                           std::exp(lg_k_half - std::lgamma(1.0 + kk) - lg_nm1) /
                           ((-1.0 + 2.0 * kk + nn) * std::sqrt(kPi));
        const double t1 = sign *
                          std::exp(nn * std::log(2.0) + lg_half_n + lg_k_half -
                                   std::lgamma(1.0 + kk) - lg_n) /
                          kPi;
        const double t2 = sign * 2.0 * (nn - 2.0) *
                          std::exp(lg_k_half - std::lgamma(kk) - lg_np1) /
                          ((-1.0 + 2.0 * kk + nn) * std::sqrt(kPi));
        const double rhs = t1 + t2;
        const double rel = std::fabs(lhs - rhs) /
                           std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
        rep.points.push_back(report::make_record(static_cast<double>(k), rel, 0.0, 1e-12));
    }
    return rep;
}

report::Report check_positivity_2f1(int n, const std::vector<double>& y_grid) {
    check_n(n);
    report::Report rep;
    const MonotoneCoefficients mc{n};
    for (long m = 0; m <= 100; ++m) {
        const double formula = mc.ratio(m);
        const double direct = mc.a(m) / mc.a(m + 1);
        rep.points.push_back(
            report::make_record(static_cast<double>(m), 1.0, formula, 0.0));
        rep.points.push_back(report::make_record(
            static_cast<double>(m), std::fabs(direct - formula) / formula, 0.0, 1e-12));
    }
    for (double y : y_grid) {
        if (!(y >= 0.0 && y <= 1.0)) {
            throw std::invalid_argument("check_positivity_2f1: y in [0,1]");
        }
        EvalResult f = (y == 0.0)
                           ? EvalResult{1.0, 0.0, 1}
                           : specfun::gauss2f1_neg(0.5, 2.0, (3.0 + n) / 2.0, -y, 1e-12);
        rep.points.push_back(report::make_record(y, f.error_bound, f.value, 0.0));
    }
    return rep;
}

} // namespace heinz
