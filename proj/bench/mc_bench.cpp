// Timing comparison of the chunked Monte Carlo kernel against the
// straight-loop reference, plus the worst componentwise deviation.
// Usage: mc_bench [samples]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "heinz/ballharmonic.hpp"
#include "heinz/threading.hpp"
#include "heinz/types.hpp"
#include "heinz/verify.hpp"

using namespace heinz;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt =
        std::chrono::steady_clock::now() - t0;
    return dt.count();
}

} // namespace

int main(int argc, char** argv) {
    const long samples = argc > 1 ? std::atol(argv[1]) : 2000000L;
    if (samples < 1000) {
        std::fprintf(stderr, "samples must be >= 1000\n");
        return 2;
    }
    const BoundaryMap map = verify::random_odd_map(3, 2718);
    const BallPoint x{{0.2, -0.3, 0.4}};
    const std::uint64_t seed = 99;

    // warm-up run, excluded from the timings
    ball::mc_extension_serial(map, x, 10000, seed);

    std::vector<EvalResult> serial, chunked1, chunkedT;
    const double t_serial =
        time_ms([&] { serial = ball::mc_extension_serial(map, x, samples, seed); });

    setenv("HEINZ_THREADS", "1", 1);
    const double t_one =
        time_ms([&] { chunked1 = ball::mc_extension(map, x, samples, seed); });
    unsetenv("HEINZ_THREADS");

    const int workers = worker_count();
    const double t_many =
        time_ms([&] { chunkedT = ball::mc_extension(map, x, samples, seed); });

    double dev_serial = 0.0, dev_workers = 0.0;
    for (size_t j = 0; j < serial.size(); ++j) {
        dev_serial = std::max(dev_serial, std::fabs(serial[j].value - chunked1[j].value));
        dev_workers = std::max(dev_workers, std::fabs(chunked1[j].value - chunkedT[j].value));
    }

    std::printf("mc_extension benchmark, n = 3, samples = %ld\n", samples);
    std::printf("%-28s %10.1f ms\n", "straight-loop reference", t_serial);
    std::printf("%-28s %10.1f ms\n", "chunked, 1 worker", t_one);
    std::printf("chunked, %-2d workers %18.1f ms  (speedup %.2fx)\n", workers, t_many,
                t_many > 0.0 ? t_one / t_many : 0.0);
    std::printf("max |serial - chunked| deviation: %.3e\n", dev_serial);
    std::printf("max cross-worker deviation:       %.3e (must be 0)\n", dev_workers);
    return dev_workers == 0.0 ? 0 : 1;
}
