// Wall-clock comparison of the serial reference audit against the OpenMP
// fan-out, plus a wide inequality grid scan where the parallel win is visible.
// Prints a small table; exits nonzero if parallel and serial outputs differ.

#include "sombor/audit.hpp"
#include "sombor/families.hpp"
#include "sombor/indices.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>

using namespace sombor;

namespace {

using Clock = std::chrono::steady_clock;

double best_audit_ms(const FamilyRegistry& reg, int workers, std::string& output) {
    AuditOptions opts;
    opts.workers = workers;
    opts.timestamp = "bench";
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = Clock::now();
        const AuditReport report = run_full_audit(reg, opts);
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
        output = render_json(report);
    }
    return best;
}

struct ScanResult {
    long long valid = 0;
    long long violations = 0;
    double min_margin = 1e300;

    bool operator==(const ScanResult&) const = default;
};

ScanResult scan_point(const FamilySpec& fam, long long p, long long q) {
    ScanResult r;
    const auto part = partition_counts_at(fam, p, q, CountValidation::lenient);
    for (const auto& [pair, c] : part.counts)
        if (c < 0) return r; // outside the formulas' validity range
    r.valid = 1;
    const double so = index_on_partition(get_index("sombor"), part).approx;
    const double bound = std::max({index_on_partition(get_index("m1"), part).approx / 2.0,
                                   index_on_partition(get_index("m2"), part).approx / 3.0,
                                   2.0 * index_on_partition(get_index("isi"), part).approx});
    r.min_margin = so - bound;
    if (r.min_margin < 0) r.violations = 1;
    return r;
}

void merge(ScanResult& acc, const ScanResult& r) {
    acc.valid += r.valid;
    acc.violations += r.violations;
    acc.min_margin = std::min(acc.min_margin, r.min_margin);
}

ScanResult grid_scan_serial(const FamilyRegistry& reg, long long side) {
    ScanResult acc;
    for (const auto& fam : reg.all())
        for (long long p = 1; p <= side; ++p)
            for (long long q = 1; q <= side; ++q) merge(acc, scan_point(fam, p, q));
    return acc;
}

ScanResult grid_scan_parallel(const FamilyRegistry& reg, long long side) {
    ScanResult acc;
    const auto& fams = reg.all();
    const long long total = static_cast<long long>(fams.size()) * side * side;
#ifdef _OPENMP
#pragma omp parallel
    {
        ScanResult local;
#pragma omp for schedule(dynamic, 256) nowait
        for (long long i = 0; i < total; ++i) {
            const auto& fam = fams[static_cast<std::size_t>(i / (side * side))];
            const long long rem = i % (side * side);
            merge(local, scan_point(fam, rem / side + 1, rem % side + 1));
        }
#pragma omp critical
        merge(acc, local);
    }
#else
    for (long long i = 0; i < total; ++i) {
        const auto& fam = fams[static_cast<std::size_t>(i / (side * side))];
        const long long rem = i % (side * side);
        merge(acc, scan_point(fam, rem / side + 1, rem % side + 1));
    }
#endif
    return acc;
}

} // namespace

int main() {
#ifdef _OPENMP
    const int cores = omp_get_max_threads();
#else
    const int cores = 1;
#endif
    const FamilyRegistry reg = FamilyRegistry::builtin();

    std::printf("full audit (52 findings), best of 3:\n");
    std::string serial_json;
    const double t_serial = best_audit_ms(reg, 1, serial_json);
    std::printf("  %-22s %8.2f ms\n", "serial reference", t_serial);
    bool identical = true;
    for (int workers : {2, cores}) {
        if (workers <= 1) continue;
        std::string json;
        const double t = best_audit_ms(reg, workers, json);
        identical = identical && json == serial_json;
        std::printf("  %-19s %2dx %8.2f ms   speedup %.2fx   output %s\n", "parallel, workers",
                    workers, t, t_serial / t, json == serial_json ? "identical" : "DIFFERS");
    }

    const long long side = 120;
    std::printf("\ninequality grid scan, 8 families x [1,%lld]^2:\n", side);
    const auto t0 = Clock::now();
    const ScanResult s = grid_scan_serial(reg, side);
    const auto t1 = Clock::now();
    const ScanResult par = grid_scan_parallel(reg, side);
    const auto t2 = Clock::now();
    const double ms_s = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double ms_p = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::printf("  serial   %8.2f ms   valid=%lld violations=%lld min margin=%.6f\n", ms_s,
                s.valid, s.violations, s.min_margin);
    std::printf("  parallel %8.2f ms   valid=%lld violations=%lld min margin=%.6f   speedup %.2fx\n",
                ms_p, par.valid, par.violations, par.min_margin, ms_s / ms_p);

    const bool ok = identical && s == par;
    if (!ok) std::printf("\nmismatch between serial and parallel results\n");
    return ok ? 0 : 1;
}
