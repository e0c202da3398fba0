#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gcat/category.hpp"
#include "gcat/parallel.hpp"

namespace gcat {

enum class Cmp { lt, eq, gt };
enum class PartialCmp { lt, eq, gt, incomparable };

/// Lexicographic comparison of two maps sharing domain and codomain: the
/// first differing position decides.  Throws std::domain_error on shape
/// mismatch.
Cmp lex_compare(const FinMap& f, const FinMap& g);

enum class ViolationKind {
    incomparable,   // axiom 1: cmp returned no verdict
    cyclic,         // axiom 1: f < g and g < f
    intransitive,   // axiom 1: f < g < h but not f < h
    order_break,    // axiom 2: f < g but not f.e < g.e
    cancellation    // right action by e identifies f != g
};

std::string violation_kind_name(ViolationKind k);

template <CategoryOracle Cat>
struct AdmissibilityViolation {
    ViolationKind kind;
    typename Cat::Morphism f, g;
    typename Cat::Morphism extra; // e for order_break/cancellation, h for intransitive
    bool has_extra = false;
};

template <CategoryOracle Cat>
struct AdmissibilityReport {
    int bound = 0;
    long long pairs_checked = 0;
    long long actions_checked = 0;
    std::vector<AdmissibilityViolation<Cat>> axiom1;
    std::vector<AdmissibilityViolation<Cat>> axiom2;
    std::vector<AdmissibilityViolation<Cat>> cancellation;

    bool pass() const { return axiom1.empty() && axiom2.empty() && cancellation.empty(); }
};

namespace detail {

template <CategoryOracle Cat, class Comparator>
void check_unit_pair(const Cat& cat, const Comparator& cmp, int bound,
                     const std::vector<typename Cat::Morphism>& unit, std::size_t a,
                     std::size_t b, AdmissibilityReport<Cat>& report) {
    using V = AdmissibilityViolation<Cat>;
    const auto& f = unit[a];
    const auto& g = unit[b];
    PartialCmp fg = cmp(f, g);
    PartialCmp gf = cmp(g, f);
    ++report.pairs_checked;
    if (fg == PartialCmp::incomparable || gf == PartialCmp::incomparable) {
        report.axiom1.push_back(V{ViolationKind::incomparable, f, g, f, false});
        return;
    }
    bool flt = fg == PartialCmp::lt;
    bool glt = gf == PartialCmp::lt;
    if (flt == glt) { // both strict or both non-strict on a pair of distinct maps
        report.axiom1.push_back(V{ViolationKind::cyclic, f, g, f, false});
        return;
    }
    const auto& lo = flt ? f : g;
    const auto& hi = flt ? g : f;
    for (const auto& e : cat.unit_actions(lo, hi, bound)) {
        ++report.actions_checked;
        auto le = cat.compose(lo, e);
        auto he = cat.compose(hi, e);
        if (cmp(le, he) != PartialCmp::lt)
            report.axiom2.push_back(V{ViolationKind::order_break, lo, hi, e, true});
        if (le == he)
            report.cancellation.push_back(V{ViolationKind::cancellation, lo, hi, e, true});
    }
}

} // namespace detail

/// Exhaustively checks the two admissibility axioms, plus right cancellation,
/// over every comparison unit and composable action within the bound:
///   axiom 1: the comparator is total and antisymmetric (and transitive) on
///            each unit;
///   axiom 2: f < g implies f.e < g.e.
/// Empty violation lists mean "pass at bound".
template <CategoryOracle Cat, class Comparator>
AdmissibilityReport<Cat> check_admissible_serial(const Cat& cat, const Comparator& cmp,
                                                 int bound) {
    AdmissibilityReport<Cat> report;
    report.bound = bound;
    using V = AdmissibilityViolation<Cat>;
    for (const auto& unit : cat.comparison_units(bound)) {
        for (std::size_t a = 0; a < unit.size(); ++a)
            for (std::size_t b = a + 1; b < unit.size(); ++b)
                detail::check_unit_pair(cat, cmp, bound, unit, a, b, report);
        // transitivity on triples
        for (std::size_t a = 0; a < unit.size(); ++a)
            for (std::size_t b = 0; b < unit.size(); ++b)
                for (std::size_t c = 0; c < unit.size(); ++c) {
                    if (a == b || b == c || a == c) continue;
                    if (cmp(unit[a], unit[b]) == PartialCmp::lt &&
                        cmp(unit[b], unit[c]) == PartialCmp::lt &&
                        cmp(unit[a], unit[c]) != PartialCmp::lt)
                        report.axiom1.push_back(
                            V{ViolationKind::intransitive, unit[a], unit[c], unit[b], true});
                }
    }
    return report;
}

/// OpenMP variant of check_admissible_serial.  Work is split over the pairs
/// of each unit; per-pair results land in preallocated slots and are merged
/// in index order, so the report is identical to the serial one.
template <CategoryOracle Cat, class Comparator>
AdmissibilityReport<Cat> check_admissible(const Cat& cat, const Comparator& cmp, int bound,
                                          ExecPolicy policy = ExecPolicy::parallel) {
    if (policy == ExecPolicy::serial) return check_admissible_serial(cat, cmp, bound);
    AdmissibilityReport<Cat> report;
    report.bound = bound;
    using V = AdmissibilityViolation<Cat>;
    for (const auto& unit : cat.comparison_units(bound)) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < unit.size(); ++a)
            for (std::size_t b = a + 1; b < unit.size(); ++b) pairs.emplace_back(a, b);
        std::vector<AdmissibilityReport<Cat>> partial(pairs.size());
        const int nthreads = worker_count();
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 16)
        for (long long idx = 0; idx < static_cast<long long>(pairs.size()); ++idx) {
            auto [a, b] = pairs[static_cast<std::size_t>(idx)];
            detail::check_unit_pair(cat, cmp, bound, unit, a, b,
                                    partial[static_cast<std::size_t>(idx)]);
        }
        for (const auto& part : partial) {
            report.pairs_checked += part.pairs_checked;
            report.actions_checked += part.actions_checked;
            report.axiom1.insert(report.axiom1.end(), part.axiom1.begin(), part.axiom1.end());
            report.axiom2.insert(report.axiom2.end(), part.axiom2.begin(), part.axiom2.end());
            report.cancellation.insert(report.cancellation.end(), part.cancellation.begin(),
                                       part.cancellation.end());
        }
        for (std::size_t a = 0; a < unit.size(); ++a)
            for (std::size_t b = 0; b < unit.size(); ++b)
                for (std::size_t c = 0; c < unit.size(); ++c) {
                    if (a == b || b == c || a == c) continue;
                    if (cmp(unit[a], unit[b]) == PartialCmp::lt &&
                        cmp(unit[b], unit[c]) == PartialCmp::lt &&
                        cmp(unit[a], unit[c]) != PartialCmp::lt)
                        report.axiom1.push_back(
                            V{ViolationKind::intransitive, unit[a], unit[c], unit[b], true});
                }
    }
    return report;
}

/// The lexicographic comparator on ordered surjections, as a PartialCmp.
struct LexComparator {
    PartialCmp operator()(const FinMap& f, const FinMap& g) const {
        switch (lex_compare(f, g)) {
            case Cmp::lt: return PartialCmp::lt;
            case Cmp::eq: return PartialCmp::eq;
            case Cmp::gt: return PartialCmp::gt;
        }
        return PartialCmp::incomparable;
    }
};

/// The divisibility order restricted to a hom-set, as a partial comparator.
/// Almost all distinct pairs are incomparable; used to exhibit axiom-1
/// violations.
struct DivisibilityComparator {
    PartialCmp operator()(const FinMap& f, const FinMap& g) const;
};

/// Reversed numeric order on degrees.
struct ReverseDegreeComparator {
    PartialCmp operator()(int a, int b) const {
        if (a == b) return PartialCmp::eq;
        return a > b ? PartialCmp::lt : PartialCmp::gt;
    }
};

} // namespace gcat
