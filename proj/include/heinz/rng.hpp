#pragma once

#include <cstdint>

namespace heinz::rng {

// SplitMix64 in random-access form: draw k of stream `seed` is
// mix(seed + (k+1)*GAMMA). Documented in the README; reports are
// reproducible across implementations from this scheme alone.
inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t bits_at(std::uint64_t seed, std::uint64_t k) {
    return mix(seed + (k + 1) * kGamma);
}

// uniform in [0,1) on the 2^53 lattice
inline double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Deterministic substream derivation for workers / grid points / maps.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t id) {
    return mix(seed + (id + 1) * kGamma);
}

// Number of uniform draws consumed per sphere point: Box-Muller pairs,
// fixed budget 2*ceil(n/2) regardless of the values drawn.
long draws_per_point(int n);

// Writes the `index`-th uniform point of stream `seed` on S^{n-1} to out[0..n).
void sphere_point(std::uint64_t seed, std::uint64_t index, int n, double* out);

// Standard gaussian pair from two uniform draws (Box-Muller).
void gaussian_pair(double u1, double u2, double& g0, double& g1);

} // namespace heinz::rng
