// Acceptance suite: runs every top-level criterion at its stated bounds and
// prints one pass/fail line per criterion.  --only N restricts to a single
// criterion; --list shows them.  Exit code 0 iff every executed criterion
// passed within its time limit.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "gcat/verify.hpp"

using namespace gcat;

namespace {

struct Criterion {
    int number;
    std::string description;
    double limit_ms;
    std::function<SuiteReport()> run;
};

std::vector<Criterion> criteria() {
    return {
        {1, "hom-count identities (m<=6, n<=4, exact)", 5000,
         [] { return verify_hom_counts(6, 4); }},
        {2, "factorization bijections round-trip (m<=6, n<=4; t,n<=5, exact)", 10000,
         [] { return verify_contra1(6, 4, 5); }},
        {3, "reduction order: f <= reduced(f) and the gluing implication (10^4 pairs)", 10000,
         [] { return verify_higman(10000, 4, 8, 0, ExecPolicy::parallel); }},
        {4, "domination pair found in 500 random length-200 sequences", 60000,
         [] { return verify_stronglynoeth(500, 200, 3, 12, 0, ExecPolicy::parallel); }},
        {5, "lex admissibility axioms + right cancellation at bound 4 (exact)", 10000,
         [] { return verify_admissible(4, 4, ExecPolicy::parallel); }},
        {6, "division membership == rank membership, dimensions agree (100 runs x 10 probes)",
         120000, [] { return verify_oracle_equiv(100, 10, 0, ExecPolicy::parallel); }},
        {7, "initial data separates 200 proper inclusions", 60000,
         [] { return verify_tilde(200, 0, ExecPolicy::parallel); }},
        {8, "monoid membership == univariate gcd divisibility (10^3 polys, F_2 and F_5)", 10000,
         [] { return verify_hbt_demo(1000, 8, 0); }},
        {9, "every injection n->m (n<=3, m<=6) covered by inj_cover", 5000,
         [] { return verify_fi_epi(3, 6); }},
        {10, "free-module adjunction cardinality and round trips (q in {2,3,4}, X,r<=3)", 5000,
         [] { return verify_adjunction(3, {2, 3, 4}); }},
    };
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--list") == 0) {
            for (const Criterion& c : criteria())
                std::printf("%2d  %s\n", c.number, c.description.c_str());
            return 0;
        }
    }

    bool all_pass = true;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.number != only) continue;
        auto start = std::chrono::steady_clock::now();
        SuiteReport report = c.run();
        double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        bool in_time = elapsed < c.limit_ms;
        bool pass = report.pass() && in_time;
        all_pass = all_pass && pass;
        std::printf("[%s] criterion %2d: %s  (%lld cases, %lld failures, %.0f ms / limit %.0f ms)\n",
                    pass ? "PASS" : "FAIL", c.number, c.description.c_str(), report.cases,
                    report.failures, elapsed, c.limit_ms);
        for (const std::string& ce : report.counterexamples)
            std::printf("         counterexample: %s\n", ce.c_str());
        if (!report.note.empty()) std::printf("         note: %s\n", report.note.c_str());
        if (!in_time) std::printf("         exceeded the time limit\n");
    }
    return all_pass ? 0 : 1;
}
