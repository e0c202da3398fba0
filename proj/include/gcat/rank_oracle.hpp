#pragma once

#include <vector>

#include "gcat/groebner.hpp"
#include "gcat/linalg.hpp"

namespace gcat {

/// The brute-force route: membership, dimensions and initial data computed
/// by exact row reduction over F_p, independent of every order convention
/// the division engine uses.  The engine's answers are cross-checked against
/// these throughout the test suites.

/// Columns of the level-t evaluation, ascending in the admissible order.
template <CategoryOracle Cat>
std::vector<Mono<Cat>> column_monomials(const Cat& cat, int t, int coords) {
    std::vector<typename Cat::Morphism> mors = cat.monomials_at(t);
    std::sort(mors.begin(), mors.end(),
              [](const auto& a, const auto& b) { return Cat::mono_less(a, b); });
    std::vector<Mono<Cat>> cols;
    cols.reserve(mors.size() * static_cast<std::size_t>(coords));
    for (const auto& mor : mors)
        for (int c = 1; c <= coords; ++c) cols.push_back(Mono<Cat>{mor, c});
    return cols;
}

template <CategoryOracle Cat>
std::vector<int> element_to_vector(const Element<Cat>& v, const std::vector<Mono<Cat>>& cols) {
    std::vector<int> row(cols.size(), 0);
    MonoLess<Cat> less;
    for (const auto& [m, c] : v.terms()) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m, less);
        if (it == cols.end() || !(*it == m))
            throw std::invalid_argument("element_to_vector: monomial outside the column set");
        row[static_cast<std::size_t>(it - cols.begin())] = c;
    }
    return row;
}

/// All act(g, e) of the presentation's generators landing in the level-t
/// evaluation, one row per action, over the given columns.
template <CategoryOracle Cat>
std::vector<std::vector<int>> span_rows(const Cat& cat, const Presentation<Cat>& pres, int t,
                                        const std::vector<Mono<Cat>>& cols) {
    std::vector<std::vector<int>> rows;
    for (const auto& g : pres.generators)
        for (const auto& e : cat.span_actions(g.level(), t))
            rows.push_back(element_to_vector(act(cat, g, e), cols));
    return rows;
}

/// Row-reduced basis of the level-t evaluation of the width-truncated
/// subfunctor.  For a cumulative category the span is taken at the width and
/// restricted to the level-t slice, so that cancellations between
/// higher-grade products are seen; column order makes the slice a suffix,
/// and the suffix rows of an echelon basis span the slice.
template <CategoryOracle Cat>
Rref evaluation_basis(const Cat& cat, const Presentation<Cat>& pres, int t,
                      const std::vector<Mono<Cat>>& cols) {
    if constexpr (Cat::cumulative) {
        auto wide_cols = column_monomials(cat, pres.width, pres.coords);
        Rref wide = rref(span_rows(cat, pres, pres.width, wide_cols), wide_cols.size(), pres.prime);
        MonoLess<Cat> less;
        std::vector<std::vector<int>> slice;
        for (std::size_t r = 0; r < wide.rows.size(); ++r) {
            const Mono<Cat>& pivot_mono = wide_cols[wide.pivots[r]];
            if (Cat::grade_of(pivot_mono.mor) > t) continue;
            // re-express the row over the level-t columns
            std::vector<int> row(cols.size(), 0);
            for (std::size_t c = 0; c < wide_cols.size(); ++c) {
                if (wide.rows[r][c] == 0) continue;
                auto it = std::lower_bound(cols.begin(), cols.end(), wide_cols[c], less);
                if (it == cols.end() || !(*it == wide_cols[c]))
                    throw std::logic_error("evaluation_basis: slice row leaves the slice");
                row[static_cast<std::size_t>(it - cols.begin())] = wide.rows[r][c];
            }
            slice.push_back(std::move(row));
        }
        return rref(std::move(slice), cols.size(), pres.prime);
    } else {
        return rref(span_rows(cat, pres, t, cols), cols.size(), pres.prime);
    }
}

/// dim of the level-t evaluation, by row reduction.
template <CategoryOracle Cat>
long long rank_at_level(const Cat& cat, const Presentation<Cat>& pres, int t) {
    auto cols = column_monomials(cat, t, pres.coords);
    return static_cast<long long>(evaluation_basis(cat, pres, t, cols).rank());
}

/// Membership by solvability of the row-reduced system.  Throws
/// TruncationError above the presentation width.
template <CategoryOracle Cat>
bool oracle_member(const Cat& cat, const Element<Cat>& v, const Presentation<Cat>& pres) {
    if (v.level() > pres.width)
        throw TruncationError("oracle_member: element level exceeds the width");
    if (v.zero()) return true;
    int t = Cat::cumulative ? pres.width : v.level();
    auto cols = column_monomials(cat, t, pres.coords);
    Rref basis = evaluation_basis(cat, pres, t, cols);
    return in_row_space(element_to_vector(v, cols), basis);
}

struct HilbertRow {
    int level = 0;
    long long standard_monomials = 0;
    long long rank = 0;
    bool agree() const { return standard_monomials == rank; }
};

/// Standard-monomial dimensions next to the rank-oracle dimensions, one row
/// per level 0..width.
template <CategoryOracle Cat>
std::vector<HilbertRow> hilbert_table(const Cat& cat, const Presentation<Cat>& pres,
                                      const GroebnerBasis<Cat>& gb) {
    std::vector<long long> standard = hilbert_function(cat, gb);
    std::vector<HilbertRow> rows(standard.size());
    for (int t = 0; t <= gb.width; ++t) {
        auto& row = rows[static_cast<std::size_t>(t)];
        row.level = t;
        row.standard_monomials = standard[static_cast<std::size_t>(t)];
        row.rank = rank_at_level(cat, pres, t);
    }
    return rows;
}

/// The per-monomial leading-coefficient data of the level-t evaluation: each
/// morphism f maps to the canonical (row-reduced) basis of the subspace of
/// F_p^k obtained by projecting, onto the f-block, those members of the
/// evaluation supported on monomials >= f in the admissible order.
template <CategoryOracle Cat>
struct InitialData {
    int level = 0;
    std::vector<std::pair<typename Cat::Morphism, std::vector<std::vector<int>>>> spaces;

    bool operator==(const InitialData&) const = default;
};

/// Computed from the echelon basis of the evaluation: the members supported
/// on the suffix starting at f's block are spanned by the echelon rows whose
/// pivot lies at or after that block, and only rows with pivot inside the
/// block project nontrivially.
template <CategoryOracle Cat>
InitialData<Cat> tilde_at(const Cat& cat, const Presentation<Cat>& pres, int t) {
    if (t > pres.width) throw TruncationError("tilde_at: level exceeds the width");
    InitialData<Cat> data;
    data.level = t;
    auto cols = column_monomials(cat, t, pres.coords);
    Rref basis = evaluation_basis(cat, pres, t, cols);

    std::vector<typename Cat::Morphism> mors = cat.monomials_at(t);
    std::sort(mors.begin(), mors.end(),
              [](const auto& a, const auto& b) { return Cat::mono_less(a, b); });
    std::size_t k = static_cast<std::size_t>(pres.coords);
    for (std::size_t mi = 0; mi < mors.size(); ++mi) {
        std::size_t block_begin = mi * k;
        std::size_t block_end = block_begin + k;
        std::vector<std::vector<int>> projections;
        for (std::size_t r = 0; r < basis.rows.size(); ++r) {
            if (basis.pivots[r] < block_begin || basis.pivots[r] >= block_end) continue;
            projections.emplace_back(basis.rows[r].begin() + static_cast<std::ptrdiff_t>(block_begin),
                                     basis.rows[r].begin() + static_cast<std::ptrdiff_t>(block_end));
        }
        Rref canonical = rref(std::move(projections), k, pres.prime);
        data.spaces.emplace_back(mors[mi], std::move(canonical.rows));
    }
    return data;
}

} // namespace gcat
