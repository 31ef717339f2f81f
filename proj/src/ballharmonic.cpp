#include "heinz/ballharmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heinz/errors.hpp"
#include "heinz/quadrature.hpp"
#include "heinz/rng.hpp"
#include "heinz/threading.hpp"

namespace heinz::ball {

namespace {

constexpr double kPi = 3.14159265358979323846;

double cn_weight(int n) {
    return std::exp(std::lgamma(n / 2.0) - std::lgamma((n - 1) / 2.0)) / std::sqrt(kPi);
}

void check_profile(const AxisymProfile& p, double r) {
    if (p.n < 2) throw std::invalid_argument("axisym profile: n >= 2");
    if (!p.h) throw std::invalid_argument("axisym profile: empty h");
    if (r < 0.0) throw std::invalid_argument("axisym: r >= 0");
    if (r >= 1.0) throw PointOnBoundary("axisym: r must be < 1");
}

// Panel seeds: profile kinks, the equator, and a geometric ladder into the
// kernel peak at theta = 0 once r -> 1.
std::vector<double> theta_breaks(const AxisymProfile& p, double r) {
    std::vector<double> br{kPi / 2.0};
    for (double t : p.corners) {
        if (t >= -1.0 && t <= 1.0) br.push_back(std::acos(t));
    }
    if (r > 0.9) {
        for (double s = 1.0 - r; s < kPi / 4.0; s *= 4.0) br.push_back(s);
    }
    return br;
}

} // namespace

double poisson_kernel(const BallPoint& x, std::vector<double> zeta) {
    const int n = x.dim();
    if (n < 2) throw std::invalid_argument("poisson_kernel: n >= 2");
    if (static_cast<int>(zeta.size()) != n) {
        throw std::invalid_argument("poisson_kernel: dimension mismatch");
    }
    const double r = x.norm();
    if (r >= 1.0) throw PointOnBoundary("poisson_kernel: ||x|| >= 1");

    double nz2 = 0.0;
    for (double c : zeta) nz2 += c * c;
    const double nz = std::sqrt(nz2);
    if (nz == 0.0) throw std::invalid_argument("poisson_kernel: zeta = 0");
    if (std::fabs(nz - 1.0) > 1e-12) {
        for (double& c : zeta) c /= nz;
    }
    double d2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double d = x.coords[j] - zeta[j];
        d2 += d * d;
    }
    return (1.0 - r * r) / std::pow(d2, 0.5 * n);
}

EvalResult axisym_extension(const AxisymProfile& profile, double r, double tol) {
    check_profile(profile, r);
    tol = std::max(tol, 1e-13);
    const int n = profile.n;
    const double cn = cn_weight(n);
    const double omr = 1.0 - r;
    const double num = omr * (1.0 + r); // 1 - r^2 without cancellation
    auto f = [&](double th) {
        const double ct = std::cos(th);
        const double s2 = std::sin(0.5 * th);
        // 1 + r^2 - 2r cos(th) in a form that keeps full relative
        // precision as r -> 1 (the naive sum cancels to noise there)
        const double kern = omr * omr + 4.0 * r * s2 * s2;
        return num * std::pow(std::sin(th), n - 2) * profile.h(ct) /
               std::pow(kern, 0.5 * n);
    };
    EvalResult q = quad::integrate(f, 0.0, kPi, tol / cn, theta_breaks(profile, r));
    return {cn * q.value, cn * q.error_bound, q.terms_used};
}

EvalResult axisym_radial_derivative(const AxisymProfile& profile, double r, double tol) {
    check_profile(profile, r);
    tol = std::max(tol, 1e-13);
    const int n = profile.n;
    const double cn = cn_weight(n);
    const double omr = 1.0 - r;
    const double num = omr * (1.0 + r);
    auto f = [&](double th) {
        const double ct = std::cos(th);
        const double s2 = std::sin(0.5 * th);
        const double kern = omr * omr + 4.0 * r * s2 * s2;
        const double rmc = 2.0 * s2 * s2 - omr; // r - cos(th), stable near 0
        const double dd = -2.0 * r * kern - n * num * rmc;
        return std::pow(std::sin(th), n - 2) * profile.h(ct) * dd /
               std::pow(kern, 0.5 * n + 1.0);
    };
    EvalResult q = quad::integrate(f, 0.0, kPi, tol / cn, theta_breaks(profile, r));
    return {cn * q.value, cn * q.error_bound, q.terms_used};
}

namespace {

constexpr long kChunk = 4096;

void check_mc_args(const BoundaryMap& map, const BallPoint& x, long samples) {
    if (map.n < 2 || !map.f) throw std::invalid_argument("mc_extension: bad map");
    if (x.dim() != map.n) throw std::invalid_argument("mc_extension: dimension mismatch");
    if (x.norm() > 0.95 + 1e-12) {
        throw TooCloseToBoundary("mc_extension: ||x|| > 0.95 variance guard");
    }
    if (samples < 1000) throw InsufficientSamples("mc_extension: samples >= 1000");
}

std::vector<EvalResult> finalize(const std::vector<double>& sum,
                                 const std::vector<double>& sumsq, int n, long m) {
    std::vector<EvalResult> out(n);
    for (int j = 0; j < n; ++j) {
        const double mean = sum[j] / static_cast<double>(m);
        double var = sumsq[j] / static_cast<double>(m) - mean * mean;
        var = std::max(0.0, var) * static_cast<double>(m) / static_cast<double>(m - 1);
        out[j] = {mean, 3.0 * std::sqrt(var / static_cast<double>(m)), m};
    }
    return out;
}

} // namespace

std::vector<EvalResult> mc_extension(const BoundaryMap& map, const BallPoint& x,
                                     long samples, std::uint64_t seed) {
    check_mc_args(map, x, samples);
    const int n = map.n;
    const double r = x.norm();
    const double num = 1.0 - r * r;
    const long nchunks = (samples + kChunk - 1) / kChunk;

    std::vector<double> csum(static_cast<size_t>(nchunks) * n);
    std::vector<double> csumsq(static_cast<size_t>(nchunks) * n);

    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
#endif
    for (long c = 0; c < nchunks; ++c) {
        std::vector<double> zeta(n);
        std::vector<double> s(n, 0.0), q(n, 0.0);
        const long lo = c * kChunk;
        const long hi = std::min(samples, lo + kChunk);
        for (long i = lo; i < hi; ++i) {
            rng::sphere_point(seed, static_cast<std::uint64_t>(i), n, zeta.data());
            double d2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double d = x.coords[j] - zeta[j];
                d2 += d * d;
            }
            const double p = num / std::pow(d2, 0.5 * n);
            const std::vector<double> fv = map.f(zeta);
            for (int j = 0; j < n; ++j) {
                const double y = p * fv[j];
                s[j] += y;
                q[j] += y * y;
            }
        }
        for (int j = 0; j < n; ++j) {
            csum[static_cast<size_t>(c) * n + j] = s[j];
            csumsq[static_cast<size_t>(c) * n + j] = q[j];
        }
    }
    (void)workers;

    // combine partial sums in chunk order: identical for any worker count
    std::vector<double> sum(n, 0.0), sumsq(n, 0.0);
    for (long c = 0; c < nchunks; ++c) {
        for (int j = 0; j < n; ++j) {
            sum[j] += csum[static_cast<size_t>(c) * n + j];
            sumsq[j] += csumsq[static_cast<size_t>(c) * n + j];
        }
    }
    return finalize(sum, sumsq, n, samples);
}

std::vector<EvalResult> mc_extension_serial(const BoundaryMap& map, const BallPoint& x,
                                            long samples, std::uint64_t seed) {
    check_mc_args(map, x, samples);
    const int n = map.n;
    const double r = x.norm();
    const double num = 1.0 - r * r;

    std::vector<double> zeta(n), sum(n, 0.0), sumsq(n, 0.0);
    for (long i = 0; i < samples; ++i) {
        rng::sphere_point(seed, static_cast<std::uint64_t>(i), n, zeta.data());
        double d2 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double d = x.coords[j] - zeta[j];
            d2 += d * d;
        }
        const double p = num / std::pow(d2, 0.5 * n);
        const std::vector<double> fv = map.f(zeta);
        for (int j = 0; j < n; ++j) {
            const double y = p * fv[j];
            sum[j] += y;
            sumsq[j] += y * y;
        }
    }
    return finalize(sum, sumsq, n, samples);
}

} // namespace heinz::ball
