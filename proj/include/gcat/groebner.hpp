#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "gcat/element.hpp"

namespace gcat {

/// Raised when a query exceeds the width bound a basis was computed under.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// A finitely generated subfunctor of a free module, given by generators and
/// the truncation width the engine works under.
template <CategoryOracle Cat>
struct Presentation {
    std::vector<Element<Cat>> generators; // nonzero, deduplicated
    int width = 0;
    int target = 0;
    int coords = 1;
    int prime = 2;
};

/// Validates shared target/coords/prime, drops zero generators, removes
/// duplicates (keeping first occurrences).  Throws std::domain_error on
/// inconsistent generators.
template <CategoryOracle Cat>
Presentation<Cat> make_presentation(std::vector<Element<Cat>> generators, int width, int target,
                                    int coords, int prime) {
    if (width < 0) throw std::domain_error("make_presentation: negative width");
    Presentation<Cat> pres;
    pres.width = width;
    pres.target = target;
    pres.coords = coords;
    pres.prime = prime;
    for (auto& g : generators) {
        if (g.zero()) continue;
        if (g.target() != target || g.coords() != coords || g.prime() != prime)
            throw std::domain_error("make_presentation: generators disagree on target/k/p");
        if (g.level() > width)
            throw std::domain_error("make_presentation: generator level exceeds width");
        if (std::find(pres.generators.begin(), pres.generators.end(), g) ==
            pres.generators.end())
            pres.generators.push_back(std::move(g));
    }
    return pres;
}

template <CategoryOracle Cat>
Presentation<Cat> make_presentation(std::vector<Element<Cat>> generators, int width) {
    if (generators.empty())
        throw std::domain_error("make_presentation: empty list needs explicit target/k/p");
    int target = generators.front().target();
    int coords = generators.front().coords();
    int prime = generators.front().prime();
    return make_presentation(std::move(generators), width, target, coords, prime);
}

template <CategoryOracle Cat>
struct GroebnerBasis {
    std::vector<Element<Cat>> elements; // monic, auto-reduced, sorted
    int width = 0;
    std::string category;
    int target = 0;
    int coords = 1;
    int prime = 2;
};

template <CategoryOracle Cat>
struct QuotientStep {
    std::size_t index;             // divisor position in the basis list
    typename Cat::Morphism action; // e with lm(basis[index]).e = the cancelled monomial
    int scalar;
};

template <CategoryOracle Cat>
struct DivisionResult {
    Element<Cat> remainder;
    std::vector<QuotientStep<Cat>> quotient;
};

/// Division with remainder: v = sum scalar_i * act(basis[index_i], e_i) +
/// remainder, and no monomial of the remainder is divisible by the leading
/// monomial of any basis element.  Deterministic: the first divisor in basis
/// order and the least action e win at every step.
///
/// Each step cancels the current leading (= admissibly minimal) monomial or
/// moves it to the remainder; by admissibility the minimum of the remaining
/// support strictly increases, so the loop terminates.
template <CategoryOracle Cat>
DivisionResult<Cat> divide(const Cat& cat, const Element<Cat>& v,
                           std::span<const Element<Cat>> basis) {
    DivisionResult<Cat> out;
    out.remainder = Element<Cat>(v.target(), v.coords(), v.prime());
    Element<Cat> work = v;
    Fp field{v.prime()};
    while (!work.zero()) {
        auto [mono, coeff] = work.leading_term();
        bool divided = false;
        for (std::size_t b = 0; b < basis.size() && !divided; ++b) {
            if (basis[b].zero()) continue;
            auto [bm, bc] = basis[b].leading_term();
            if (bm.coord != mono.coord) continue;
            auto actions = cat.divisors(bm.mor, mono.mor);
            if (actions.empty()) continue;
            int scalar = field.div(coeff, bc);
            work.axpy(field.neg(scalar), act(cat, basis[b], actions.front()));
            out.quotient.push_back(QuotientStep<Cat>{b, actions.front(), scalar});
            divided = true;
        }
        if (!divided) {
            out.remainder.add_term(mono, coeff);
            work.add_term(mono, -static_cast<long long>(coeff));
        }
    }
    return out;
}

namespace detail {

template <CategoryOracle Cat>
void sort_elements(std::vector<Element<Cat>>& v) {
    std::sort(v.begin(), v.end(),
              [](const Element<Cat>& a, const Element<Cat>& b) { return a.before(b); });
}

/// Full inter-reduction: every element reduces to remainder zero against the
/// others or is replaced by its (monic) remainder.  On exit no leading
/// monomial divides another and every tail is reduced.
template <CategoryOracle Cat>
void autoreduce(const Cat& cat, std::vector<Element<Cat>>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        sort_elements(basis);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Element<Cat>> others;
            others.reserve(basis.size() - 1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Element<Cat> r = divide(cat, basis[i], std::span<const Element<Cat>>(others)).remainder;
            if (r == basis[i]) continue;
            if (r.zero())
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            else {
                r.make_monic();
                basis[i] = std::move(r);
            }
            changed = true;
            break;
        }
    }
}

} // namespace detail

/// Truncated Buchberger completion.  All overlap pairs (e1, e2) with
/// lm(b1).e1 = lm(b2).e2 at each level up to the width are reduced; nonzero
/// remainders join the basis (made monic) and the basis is inter-reduced.
/// Sweeps restart until a full pass adds nothing.  Terminates because every
/// addition strictly enlarges the sieve generated by the leading monomials
/// inside the finite monomial universe below the width.
template <CategoryOracle Cat>
GroebnerBasis<Cat> buchberger(const Cat& cat, const Presentation<Cat>& pres) {
    GroebnerBasis<Cat> gb;
    gb.width = pres.width;
    gb.category = cat.name();
    gb.target = pres.target;
    gb.coords = pres.coords;
    gb.prime = pres.prime;

    std::vector<Element<Cat>> basis = pres.generators;
    for (auto& b : basis) b.make_monic();
    detail::autoreduce(cat, basis);

    bool added = true;
    while (added) {
        added = false;
        for (int t = 0; t <= pres.width && !added; ++t) {
            for (std::size_t i = 0; i < basis.size() && !added; ++i) {
                for (std::size_t j = i; j < basis.size() && !added; ++j) {
                    auto [lm_i, lc_i] = basis[i].leading_term();
                    auto [lm_j, lc_j] = basis[j].leading_term();
                    if (lm_i.coord != lm_j.coord) continue;
                    for (const auto& e1 : cat.hom(t, Cat::grade_of(lm_i.mor))) {
                        auto overlap = cat.compose(lm_i.mor, e1);
                        for (const auto& e2 : cat.divisors(lm_j.mor, overlap)) {
                            if (i == j && !(e1 < e2)) continue; // skip self and symmetric pairs
                            Element<Cat> s = act(cat, basis[i], e1);
                            s.axpy(pres.prime - 1, act(cat, basis[j], e2));
                            if (s.zero()) continue;
                            Element<Cat> r =
                                divide(cat, s, std::span<const Element<Cat>>(basis)).remainder;
                            if (r.zero()) continue;
                            r.make_monic();
                            basis.push_back(std::move(r));
                            detail::autoreduce(cat, basis);
                            added = true;
                            break;
                        }
                        if (added) break;
                    }
                }
            }
        }
    }
    detail::sort_elements(basis);
    gb.elements = std::move(basis);
    return gb;
}

/// Membership via division.  Throws TruncationError above the width bound.
template <CategoryOracle Cat>
bool is_member(const Cat& cat, const Element<Cat>& v, const GroebnerBasis<Cat>& gb) {
    if (v.level() > gb.width)
        throw TruncationError("is_member: element level exceeds the basis width");
    if (v.zero()) return true;
    return divide(cat, v, std::span<const Element<Cat>>(gb.elements)).remainder.zero();
}

/// Number of level-t monomials inside the sieve generated by the leading
/// monomials, for t = 0..width.  These are the dimensions of the presented
/// subfunctor's evaluations.
template <CategoryOracle Cat>
std::vector<long long> hilbert_function(const Cat& cat, const GroebnerBasis<Cat>& gb) {
    std::vector<long long> dims(static_cast<std::size_t>(gb.width) + 1, 0);
    for (int t = 0; t <= gb.width; ++t) {
        long long count = 0;
        for (const auto& mor : cat.monomials_at(t))
            for (int coord = 1; coord <= gb.coords; ++coord)
                for (const auto& b : gb.elements) {
                    auto [bm, bc] = b.leading_term();
                    if (bm.coord != coord) continue;
                    if (!cat.divisors(bm.mor, mor).empty()) {
                        ++count;
                        break;
                    }
                }
        dims[static_cast<std::size_t>(t)] = count;
    }
    return dims;
}

} // namespace gcat
