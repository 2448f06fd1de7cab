// Compares the serial reference implementations against the OpenMP kernels:
// the oracle pair scan and the downward non-genus scan.

#include <chrono>
#include <cstdio>
#include <string>

#include "frobpq/covering.hpp"
#include "frobpq/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace frobpq;

namespace {

template <typename F>
double time_run(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* what, double serial, double parallel, int jobs, bool same) {
    std::printf("%-28s serial %8.3f s   %2d jobs %8.3f s   speedup %5.2fx   %s\n", what, serial,
                jobs, parallel, parallel > 0 ? serial / parallel : 0.0,
                same ? "outputs identical" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 4;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    if (argc > 1) jobs = std::atoi(argv[1]);
    if (jobs < 2) jobs = 2;

    {
        ScanOptions opts;
        opts.p_max = 150;
        opts.q_max = 150;
        opts.with_oracle = true;
        opts.jobs = 1;
        std::string serial_csv, parallel_csv;
        const double ts = time_run([&] { serial_csv = records_to_csv(scan_pairs_serial(opts)); });
        opts.jobs = jobs;
        const double tp = time_run([&] { parallel_csv = records_to_csv(scan_pairs(opts)); });
        report("oracle scan p,q <= 150", ts, tp, jobs, serial_csv == parallel_csv);
    }

    {
        // A moderately heavy two-prime non-genus scan.
        const CoveringInstance cov = make_covering(5 * 293);
        NuResult serial_nu, parallel_nu;
        const double ts =
            time_run([&] { serial_nu = nu_cyclic_bruteforce(cov, {kDefaultTupleBudget, 1}); });
        const double tp = time_run(
            [&] { parallel_nu = nu_cyclic_bruteforce(cov, {kDefaultTupleBudget, jobs}); });
        report("non-genus scan n = 1465", ts, tp, jobs,
               serial_nu.value == parallel_nu.value &&
                   serial_nu.all_admissible == parallel_nu.all_admissible);
    }
    return 0;
}
