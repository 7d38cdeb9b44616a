// Timing comparison of the serial reference sweep against the OpenMP one on a
// mixed grid of oracle-heavy evaluations.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gamow/sweep.hpp"

using namespace gamow;

namespace {

std::vector<SweepJob> make_grid(int repeats) {
    std::vector<SweepJob> jobs;
    for (int r = 0; r < repeats; ++r) {
        for (double nu : {0.0, 0.25, 1.0, 1.3, 2.2})
            for (double z : {0.5, 1.0, 2.0, 5.0, 10.0}) {
                SweepJob j;
                j.kind = IntegralKind::I1;
                j.params.nu = nu;
                j.params.a = 1.0 + 0.001 * r;  // defeat any caching across repeats
                j.params.z = z;
                j.params.rho = 0.5;
                jobs.push_back(j);

                SweepJob j5;
                j5.kind = IntegralKind::I5;
                j5.params = j.params;
                j5.params.resonance = Resonance{1.0, 2.0, 1.0};
                jobs.push_back(j5);
            }
    }
    return jobs;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 8;
    const auto jobs = make_grid(repeats);
    std::printf("sweep benchmark: %zu jobs\n", jobs.size());
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path runs serially\n");
#endif

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = eval_grid_serial(jobs);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = eval_grid_parallel(jobs);
    const double tp = seconds_since(t0);

    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i)
        if (serial[i].value != parallel[i].value) ++mismatches;

    std::printf("serial:   %8.3f s\n", ts);
    std::printf("parallel: %8.3f s\n", tp);
    std::printf("speedup:  %8.2fx\n", ts / tp);
    std::printf("bitwise mismatches: %zu\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
