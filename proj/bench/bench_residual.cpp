// Compares the serial and OpenMP point-evaluation paths of residual_report
// on one synthetic residual. The kernel is embarrassingly parallel; the
// serial run doubles as the reference the parallel result must reproduce
// bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bq/constructors.hpp"
#include "bq/sampling.hpp"

using namespace bq;

namespace {

BqFunction workload() {
    const HoloExpr z1 = HoloExpr::var(1), z2 = HoloExpr::var(2);
    const HoloExpr z3 = HoloExpr::var(3), z4 = HoloExpr::var(4);
    BqFunction f{Basis::Cartan, {}};
    f.comp[0] = HoloExpr::pow(z1 + 2.0 * z2, 3) + HoloExpr::exp(z3 * z4) * z1;
    f.comp[1] = HoloExpr::exp(z1 * z2) - HoloExpr::pow(z3, 4);
    f.comp[2] = z1 * z2 * z3 * z4 + Complex(0, 1) * HoloExpr::pow(z2, 3);
    f.comp[3] = HoloExpr::exp(z1 + z2 + z3 + z4);
    // A function that is not hyperholomorphic for these weights, so the
    // residual evaluation does real work at every point.
    return left_dirac(cauchy_fueter_cartan_psi(), f);
}

template <typename F>
double best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int n_points = argc > 1 ? std::atoi(argv[1]) : 200000;
    if (n_points < 1) {
        std::fprintf(stderr, "usage: %s [points]\n", argv[0]);
        return 2;
    }

    Rng rng(42);
    const auto points = sample_polydisc(rng, n_points);
    const BqFunction residual = workload();

    ResidualReport serial, parallel;
    const double t_serial =
        best_of(3, [&] { serial = residual_report(residual, points, EvalMode::Serial); });
    const double t_parallel =
        best_of(3, [&] { parallel = residual_report(residual, points, EvalMode::Parallel); });

    bool identical = serial.max_abs == parallel.max_abs &&
                     serial.per_point.size() == parallel.per_point.size();
    for (std::size_t k = 0; identical && k < serial.per_point.size(); ++k) {
        for (int s = 0; s < 4; ++s) {
            identical = identical &&
                        serial.per_point[k].residual[s] == parallel.per_point[k].residual[s];
        }
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    std::printf("points                 %d\n", n_points);
    std::printf("threads                %d\n", threads);
    std::printf("serial                 %8.1f ms  (%.1f Mpts/s)\n", t_serial * 1e3,
                n_points / t_serial / 1e6);
    std::printf("openmp                 %8.1f ms  (%.1f Mpts/s)\n", t_parallel * 1e3,
                n_points / t_parallel / 1e6);
    std::printf("speedup                %8.2fx\n", t_serial / t_parallel);
    std::printf("reports identical      %s\n", identical ? "yes" : "NO");
    std::printf("max_abs                %.6g\n", serial.max_abs);

    return identical ? 0 : 1;
}
