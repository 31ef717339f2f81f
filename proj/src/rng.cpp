#include "heinz/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace heinz::rng {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
} // namespace

long draws_per_point(int n) {
    return 2L * ((n + 1) / 2);
}

void gaussian_pair(double u1, double u2, double& g0, double& g1) {
    if (u1 == 0.0) u1 = 0x1.0p-53; // log(0) guard, probability 2^-53
    const double rad = std::sqrt(-2.0 * std::log(u1));
    g0 = rad * std::cos(kTwoPi * u2);
    g1 = rad * std::sin(kTwoPi * u2);
}

void sphere_point(std::uint64_t seed, std::uint64_t index, int n, double* out) {
    if (n < 2) throw std::invalid_argument("sphere_point: n >= 2");
    const long budget = draws_per_point(n);
    const std::uint64_t base = index * static_cast<std::uint64_t>(budget);

    double norm2 = 0.0;
    for (int j = 0; j < n; j += 2) {
        const double u1 = uniform01(bits_at(seed, base + j));
        const double u2 = uniform01(bits_at(seed, base + j + 1));
        double g0, g1;
        gaussian_pair(u1, u2, g0, g1);
        out[j] = g0;
        if (j + 1 < n) out[j + 1] = g1;
    }
    for (int j = 0; j < n; ++j) norm2 += out[j] * out[j];
    if (norm2 == 0.0) { // unreachable in practice
        out[0] = 1.0;
        for (int j = 1; j < n; ++j) out[j] = 0.0;
        return;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int j = 0; j < n; ++j) out[j] *= inv;
}

} // namespace heinz::rng
