#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcat/order.hpp"
#include "gcat/parallel.hpp"

namespace gcat {

struct SuiteReport {
    std::string suite;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> counterexamples; // capped at a few entries
    std::string note;
    double elapsed_ms = 0.0;

    bool pass() const { return failures == 0; }
    void note_failure(const std::string& what);
};

struct SuiteOptions {
    int max = -1;           // size bound, suite-specific (-1 = suite default)
    long long trials = -1;  // trial/sequence/pair count (-1 = suite default)
    std::uint64_t seed = 0;
    ExecPolicy policy = ExecPolicy::parallel;
};

/// Exhaustive hom-set cardinalities against the independent recurrences:
/// n^m, falling factorials, Stirling numbers, n! * Stirling.
SuiteReport verify_hom_counts(int max_m, int max_n);

/// Round trips of the two factorization bijections: surjections against
/// (ordered surjection, permutation) pairs, and all maps against
/// (increasing injection, surjection) pairs, with the cardinality identities.
SuiteReport verify_contra1(int max_m, int max_n, int max_decompose);

/// f <= reduced(f) for non-injective f, and the reduction implication:
/// equal mu, equal pi and reduced(f) <= reduced(g) force f <= g.
SuiteReport verify_higman(long long trials, int max_n, int max_domain, std::uint64_t seed,
                          ExecPolicy policy);

/// Random long sequences in the divisibility order always contain a
/// domination pair.
SuiteReport verify_stronglynoeth(long long sequences, int length, int max_n, int max_domain,
                                 std::uint64_t seed, ExecPolicy policy);

/// Lexicographic order passes the admissibility axioms and right
/// cancellation exhaustively, for every target up to max_target; the degree
/// order on the monoid instance passes at the same bound.
SuiteReport verify_admissible(int bound, int max_target, ExecPolicy policy);

/// Division-based membership equals row-reduction membership, and
/// standard-monomial counts equal rank dimensions, over random
/// presentations.
SuiteReport verify_oracle_equiv(long long presentations, int probes, std::uint64_t seed,
                                ExecPolicy policy);

/// Properly nested evaluations always produce distinct initial data.
SuiteReport verify_tilde(long long pairs, std::uint64_t seed, ExecPolicy policy);

/// Engine membership on the monoid instance against univariate gcd
/// divisibility, over F_2 and F_5.
SuiteReport verify_hbt_demo(long long trials, int max_degree, std::uint64_t seed);

/// Coverage of injections by (ordered surjection, permutation) pairs via
/// inj_cover.  The covering reaches exactly the injections whose image
/// contains 1 (the section of an ordered surjection fixes 1), so this suite
/// reports the uncovered injections as failures.
SuiteReport verify_fi_epi(int max_n, int max_m);

/// Cardinality and round trips of the free-module adjunction over Z/q.
SuiteReport verify_adjunction(int max_size, const std::vector<int>& moduli);

/// Dispatch by CLI suite name: stronglynoeth, higman, contra1, admissible,
/// tilde, adjunction, fi-epi, oracle-equiv.  Throws std::invalid_argument on
/// unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

std::vector<std::string> suite_names();

/// Random-sequence batch for the domination search; one result slot per
/// sequence, independent per-sequence seeds, so serial and parallel runs
/// agree exactly.
struct WqoExperiment {
    long long sequences = 1;
    int length = 200;
    int max_target = 3;
    int max_domain = 12;
    std::uint64_t seed = 0;
};

std::vector<DominationResult> wqo_random_batch(const WqoExperiment& config, DominationMode mode,
                                               ExecPolicy policy);

} // namespace gcat
