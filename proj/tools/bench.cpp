// Times the data-parallel kernels against their serial twins and checks that
// both produce identical results.  Run directly; not part of the test suite.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gcat/admissible.hpp"
#include "gcat/parallel.hpp"
#include "gcat/rank_oracle.hpp"
#include "gcat/rng.hpp"
#include "gcat/verify.hpp"

using namespace gcat;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n", name.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "results identical" : "RESULTS DIFFER");
}

void bench_admissibility() {
    OsCategory cat(2);
    AdmissibilityReport<OsCategory> serial_report, parallel_report;
    double s = time_ms(
        [&] { serial_report = check_admissible(cat, LexComparator{}, 9, ExecPolicy::serial); });
    double p = time_ms(
        [&] { parallel_report = check_admissible(cat, LexComparator{}, 9, ExecPolicy::parallel); });
    bool identical = serial_report.pairs_checked == parallel_report.pairs_checked &&
                     serial_report.actions_checked == parallel_report.actions_checked &&
                     serial_report.pass() == parallel_report.pass();
    report("admissibility check (bound 9)", s, p, identical);
}

void bench_wqo() {
    WqoExperiment config{3000, 300, 3, 14, 12345};
    std::vector<DominationResult> serial_results, parallel_results;
    double s = time_ms([&] {
        serial_results = wqo_random_batch(config, DominationMode::first_pair, ExecPolicy::serial);
    });
    double p = time_ms([&] {
        parallel_results =
            wqo_random_batch(config, DominationMode::first_pair, ExecPolicy::parallel);
    });
    report("domination search (3000 x 300)", s, p, serial_results == parallel_results);
}

void bench_oracle() {
    SuiteReport serial_report, parallel_report;
    double s =
        time_ms([&] { serial_report = verify_oracle_equiv(60, 10, 777, ExecPolicy::serial); });
    double p =
        time_ms([&] { parallel_report = verify_oracle_equiv(60, 10, 777, ExecPolicy::parallel); });
    bool identical = serial_report.cases == parallel_report.cases &&
                     serial_report.failures == parallel_report.failures;
    report("basis + rank oracle (60 runs)", s, p, identical);
}

} // namespace

int main() {
    std::printf("workers: %d\n", worker_count());
    bench_admissibility();
    bench_wqo();
    bench_oracle();
    return 0;
}
