#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "gcat/category.hpp"
#include "gcat/linalg.hpp"

namespace gcat {

/// A basis monomial of a free module: a morphism into the target together
/// with a coordinate of the coefficient module F_p^k.
template <CategoryOracle Cat>
struct Mono {
    typename Cat::Morphism mor;
    int coord = 1;

    bool operator==(const Mono&) const = default;
};

/// Strict order on monomials: the category's admissible order on morphisms
/// (minimum first), ties broken by lower coordinate.
template <CategoryOracle Cat>
struct MonoLess {
    bool operator()(const Mono<Cat>& a, const Mono<Cat>& b) const {
        if (!(a.mor == b.mor)) return Cat::mono_less(a.mor, b.mor);
        return a.coord < b.coord;
    }
};

/// An element of the free module M[C(-,x)] with M = F_p^k: a finite mapping
/// from monomials to nonzero residues.  For the finite-set instance every
/// monomial shares the element's level; for the monoid instance the level is
/// the top grade of the support.
template <CategoryOracle Cat>
class Element {
public:
    using Morphism = typename Cat::Morphism;
    using TermMap = std::map<Mono<Cat>, int, MonoLess<Cat>>;

    Element() = default;
    Element(int target, int coords, int prime) : target_(target), coords_(coords), prime_(prime) {
        if (prime_ < 2) throw std::invalid_argument("Element: characteristic must be >= 2");
        if (coords_ < 0) throw std::invalid_argument("Element: negative coordinate count");
    }

    int target() const { return target_; }
    int coords() const { return coords_; }
    int prime() const { return prime_; }
    bool zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Level of the element: grade of the leading monomial, 0 when zero.
    int level() const { return terms_.empty() ? 0 : Cat::grade_of(terms_.begin()->first.mor); }

    /// Accumulates coeff at the monomial, reducing mod p and dropping zeros.
    void add_term(const Mono<Cat>& m, long long coeff) {
        if (m.coord < 1 || m.coord > coords_)
            throw std::invalid_argument("Element: coordinate out of range");
        Fp field{prime_};
        int c = field.reduce(coeff);
        if (c == 0 && !terms_.contains(m)) return;
        auto [it, inserted] = terms_.try_emplace(m, 0);
        it->second = field.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    /// Leading term: the monomial minimal under the admissible order.
    std::pair<Mono<Cat>, int> leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading_term: zero element");
        return *terms_.begin();
    }

    /// this += scalar * other
    void axpy(int scalar, const Element& other) {
        if (other.prime_ != prime_ || other.coords_ != coords_ || other.target_ != target_)
            throw std::invalid_argument("Element::axpy: incompatible elements");
        for (const auto& [m, c] : other.terms_)
            add_term(m, static_cast<long long>(scalar) * c);
    }

    void scale(int scalar) {
        Fp field{prime_};
        int s = field.reduce(scalar);
        if (s == 0) {
            terms_.clear();
            return;
        }
        for (auto& [m, c] : terms_) c = field.mul(c, s);
    }

    /// Divides through by the leading coefficient.
    void make_monic() {
        if (terms_.empty()) return;
        Fp field{prime_};
        scale(field.inv(terms_.begin()->second));
    }

    bool operator==(const Element&) const = default;

    /// Deterministic container order: level, then the term sequence.
    bool before(const Element& other) const {
        if (level() != other.level()) return level() < other.level();
        auto it = terms_.begin();
        auto jt = other.terms_.begin();
        MonoLess<Cat> less;
        for (; it != terms_.end() && jt != other.terms_.end(); ++it, ++jt) {
            if (less(it->first, jt->first)) return true;
            if (less(jt->first, it->first)) return false;
            if (it->second != jt->second) return it->second < jt->second;
        }
        return it == terms_.end() && jt != other.terms_.end();
    }

private:
    int target_ = 0;
    int coords_ = 1;
    int prime_ = 2;
    TermMap terms_;
};

/// Precomposition action: each monomial (f, i) moves to (f.e, i).  Throws
/// std::domain_error unless e composes with the element's monomials into
/// valid module monomials.
template <CategoryOracle Cat>
Element<Cat> act(const Cat& cat, const Element<Cat>& v, const typename Cat::Morphism& e) {
    Element<Cat> out(v.target(), v.coords(), v.prime());
    for (const auto& [m, c] : v.terms()) {
        typename Cat::Morphism moved;
        try {
            moved = cat.compose(m.mor, e);
        } catch (const std::invalid_argument&) {
            throw std::domain_error("act: morphism does not compose");
        }
        if (!cat.valid_monomial(moved))
            throw std::domain_error("act: morphism does not compose into the module");
        out.add_term(Mono<Cat>{moved, m.coord}, c);
    }
    return out;
}

} // namespace gcat
