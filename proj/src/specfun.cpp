#include "heinz/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "heinz/errors.hpp"

namespace heinz::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kUlp = 0x1.0p-52;

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && std::fabs(v - std::round(v)) < 1e-9;
}

void validate(const HypergeomSpec& spec) {
    for (double b : spec.lower) {
        if (is_nonpositive_integer(b)) {
            throw InvalidLowerParameter("lower parameter " + std::to_string(b) +
                                        " is zero or a negative integer");
        }
    }
    if (spec.upper.size() == spec.lower.size() + 1 &&
        std::fabs(spec.arg) > 1.0 + 1e-15) {
        bool terminates = false;
        for (double a : spec.upper) terminates |= is_nonpositive_integer(a);
        if (!terminates) {
            throw std::invalid_argument("pFq with p = q+1 needs |arg| <= 1");
        }
    }
}

} // namespace

double pochhammer(double y, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer: k < 0");
    if (k == 0) return 1.0;
    if (k <= 64) {
        double p = 1.0;
        for (long i = 0; i < k; ++i) p *= y + static_cast<double>(i);
        return p;
    }
    if (y > 0.0) {
        return std::exp(std::lgamma(y + static_cast<double>(k)) - std::lgamma(y));
    }
    double log_abs = 0.0;
    long negatives = 0;
    for (long i = 0; i < k; ++i) {
        double f = y + static_cast<double>(i);
        if (f == 0.0) return 0.0;
        if (f < 0.0) ++negatives;
        log_abs += std::log(std::fabs(f));
    }
    double v = std::exp(log_abs);
    return (negatives % 2 != 0) ? -v : v;
}

EvalResult pfq(const HypergeomSpec& spec, double tol) {
    validate(spec);
    if (!(tol > 0.0)) throw std::invalid_argument("pfq: tol must be positive");
    tol = std::max(tol, kTolFloor);

    const double x = spec.arg;
    if (x == 0.0) return {1.0, 0.0, 1};

    double sum = 1.0;
    double sum_abs = 1.0;
    double term = 1.0;
    double prev_ratio = std::numeric_limits<double>::infinity();
    int down_run = 0; // consecutive non-increases of the term ratio
    int up_run = 0;   // consecutive increases (ratio climbing toward x)
    int abs_drops = 0; // consecutive |term| decreases (alternating rule)

    for (long k = 0; k < kMaxTerms; ++k) {
        double num = 1.0;
        bool params_pos = true;
        for (double a : spec.upper) {
            double f = a + static_cast<double>(k);
            params_pos &= f > 0.0;
            num *= f;
        }
        double den = static_cast<double>(k) + 1.0;
        for (double b : spec.lower) {
            double f = b + static_cast<double>(k);
            params_pos &= f > 0.0;
            den *= f;
        }
        const double ratio = x * num / den;
        const double next = term * ratio;

        if (next == 0.0) {
            // terminating series (or underflow past any representable tail)
            return {sum, sum_abs * kUlp, k + 1};
        }

        if (x > 0.0 && params_pos && ratio > 0.0 && ratio < 1.0) {
            if (ratio <= prev_ratio) {
                ++down_run;
                up_run = 0;
            } else {
                ++up_run;
                down_run = 0;
            }
            // Once the ratio drifts monotonically it is trapped: decreasing
            // ratios are bounded by the current one, increasing ones by the
            // limit x, so q majorizes every later ratio either way.
            const double q = std::max(ratio, x);
            if (q < 1.0 && (down_run >= 3 || up_run >= 3)) {
                const double tail = std::fabs(next) / (1.0 - q);
                if (tail <= tol) return {sum, tail + sum_abs * kUlp, k + 1};
            }
        } else if (x < 0.0 && params_pos) {
            // signs alternate once all shifted parameters are positive
            abs_drops = (std::fabs(next) < std::fabs(term)) ? abs_drops + 1 : 0;
            if (abs_drops >= 3 && std::fabs(next) <= tol) {
                return {sum, std::fabs(next) + sum_abs * kUlp, k + 1};
            }
        }

        prev_ratio = ratio;
        term = next;
        sum += term;
        sum_abs += std::fabs(term);
    }
    throw NonConvergent("pFq: no certified tail within " + std::to_string(kMaxTerms) +
                        " terms (arg " + std::to_string(x) + ")");
}

EvalResult gauss2f1_neg(double a, double b, double c, double x, double tol) {
    if (!(c > 0.0)) throw InvalidLowerParameter("gauss2f1_neg: c must be positive");
    if (x < -1.0 - 1e-15 || x > 1e-15) {
        throw std::invalid_argument("gauss2f1_neg: x must lie in [-1, 0]");
    }
    x = std::min(0.0, std::max(-1.0, x));

    if (x > -0.5) {
        return pfq({{a, b}, {c}, x}, tol);
    }
    // Pfaff: 2F1(a,b;c;x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1))
    const double pref = std::pow(1.0 - x, -a);
    const double y = x / (x - 1.0); // in (1/3, 1/2]
    EvalResult inner = pfq({{a, c - b}, {c}, y}, tol / (2.0 * std::max(pref, 1.0)));
    double value = pref * inner.value;
    double eb = pref * inner.error_bound + std::fabs(value) * 4.0 * kUlp;
    return {value, eb, inner.terms_used};
}

report::PointRecord check_transform_3f2_to_4f3(int n, double r, double tol) {
    if (n < 2) throw std::invalid_argument("check_transform_3f2_to_4f3: n >= 2");
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("check_transform_3f2_to_4f3: r in (0,1)");
    }
    const double nn = n;
    const double r2 = r * r;
    const double q = 1.0 + r2;
    const double parg = 4.0 * r2 / (q * q);

    EvalResult g = pfq({{1.0, (2.0 + nn) / 4.0, (4.0 + nn) / 4.0},
                        {1.5, (1.0 + nn) / 2.0},
                        parg},
                       tol);
    EvalResult f = pfq({{nn / 2.0, (nn - 1.0) / 2.0, 0.5, 1.0 + nn / 4.0},
                        {nn / 4.0, 1.5, (1.0 + nn) / 2.0},
                        -r2},
                       tol);
    const double scale = std::pow(q, 1.0 + nn / 2.0);
    const double lhs = g.value * (1.0 - r2);
    const double rhs = scale * f.value;
    const double budget = tol + (1.0 - r2) * g.error_bound + scale * f.error_bound +
                          (std::fabs(lhs) + std::fabs(rhs)) * 4.0 * kUlp;
    return report::make_record(r, std::fabs(lhs - rhs), 0.0, budget);
}

report::PointRecord check_kummer_quadratic(int n, double r, double tol) {
    if (n < 2) throw std::invalid_argument("check_kummer_quadratic: n >= 2");
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("check_kummer_quadratic: r in (0,1)");
    }
    const double nn = n;
    const double r2 = r * r;
    const double pref =
        std::exp(std::lgamma(1.0 + nn / 2.0) - std::lgamma((3.0 + nn) / 2.0)) /
        std::sqrt(kPi);
    const double pw = std::pow(1.0 + r2, -nn / 2.0);

    EvalResult fa = pfq({{(1.0 + nn) / 2.0, (2.0 + nn) / 2.0}, {(3.0 + nn) / 2.0}, -r2},
                        tol);
    const double a = pref * (pw * (1.0 + nn) - (nn - 2.0) * r2 * fa.value);

    EvalResult fb = gauss2f1_neg(0.5, 1.0, (3.0 + nn) / 2.0, -r2, tol);
    const double b = pref * pw * (1.0 + nn - (nn - 2.0) * r2 * fb.value);

    const double budget = tol +
                          pref * (nn - 2.0) * r2 * (fa.error_bound + pw * fb.error_bound) +
                          (std::fabs(a) + std::fabs(b)) * 8.0 * kUlp;
    return report::make_record(r, std::fabs(a - b), 0.0, budget);
}

} // namespace heinz::specfun
