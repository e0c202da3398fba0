#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "gcat/finmap.hpp"
#include "gcat/order.hpp"

namespace gcat {

/// A graded presentation of a small category with a distinguished target
/// object, the plug-in point of the module engine.
///
/// Morphisms are graded by the size of their source.  `monomials_of_grade(t)`
/// enumerates the basis morphisms of grade exactly t; `monomials_at(t)`
/// enumerates the basis of the level-t evaluation of the free module (equal
/// to grade t for the finite-set instance, cumulative for the monoid, whose
/// single object is truncated by degree).  `hom(s, t)` are the action
/// morphisms s -> t; `span_actions(d, t)` are all actions carrying a grade-d
/// morphism into the level-t evaluation.  `divisors(f, g)` enumerates every
/// e with compose(f, e) = g in ascending order.
template <class C>
concept CategoryOracle = requires(const C& c, const typename C::Morphism& f,
                                  const typename C::Morphism& g, int s, int t) {
    typename C::Morphism;
    { C::cumulative } -> std::convertible_to<bool>;
    { C::grade_of(f) } -> std::convertible_to<int>;
    { C::mono_less(f, g) } -> std::same_as<bool>;
    { c.hom(s, t) } -> std::same_as<std::vector<typename C::Morphism>>;
    { c.monomials_of_grade(t) } -> std::same_as<std::vector<typename C::Morphism>>;
    { c.monomials_at(t) } -> std::same_as<std::vector<typename C::Morphism>>;
    { c.span_actions(s, t) } -> std::same_as<std::vector<typename C::Morphism>>;
    { c.compose(f, g) } -> std::same_as<typename C::Morphism>;
    { c.divisors(f, g) } -> std::same_as<std::vector<typename C::Morphism>>;
    { c.identity(t) } -> std::same_as<typename C::Morphism>;
    { c.comparison_units(t) } -> std::same_as<std::vector<std::vector<typename C::Morphism>>>;
    { c.unit_actions(f, g, t) } -> std::same_as<std::vector<typename C::Morphism>>;
    { c.name() } -> std::convertible_to<std::string>;
    { c.valid_monomial(f) } -> std::same_as<bool>;
};

/// Ordered surjections into a fixed target set {1..x}.  The admissible order
/// on each hom-set is lexicographic on value sequences.
class OsCategory {
public:
    using Morphism = FinMap;

    /// Evaluations are level-homogeneous: the level-t basis is the grade-t
    /// hom-set.
    static constexpr bool cumulative = false;

    explicit OsCategory(int target) : target_(target) {
        if (target < 0) throw std::invalid_argument("OsCategory: negative target");
    }

    int target() const { return target_; }

    static int grade_of(const FinMap& f) { return f.domain_size(); }

    /// Lexicographic comparison; defined on morphisms of a common hom-set.
    static bool mono_less(const FinMap& a, const FinMap& b) {
        return a.values() < b.values();
    }

    std::vector<FinMap> hom(int s, int t) const {
        return enumerate_homs(CatKind::ordered_surjections, s, t);
    }

    std::vector<FinMap> monomials_of_grade(int t) const { return hom(t, target_); }
    std::vector<FinMap> monomials_at(int t) const { return hom(t, target_); }
    std::vector<FinMap> span_actions(int gen_level, int t) const { return hom(t, gen_level); }

    /// Precomposition f.e (e applied first).
    FinMap compose(const FinMap& f, const FinMap& e) const { return gcat::compose(f, e); }

    /// All ordered surjections e with f.e = g, ascending; this is the witness
    /// search of the divisibility order run to exhaustion.
    std::vector<FinMap> divisors(const FinMap& f, const FinMap& g) const;

    FinMap identity(int t) const { return FinMap::identity(t); }

    std::vector<std::vector<FinMap>> comparison_units(int bound) const {
        std::vector<std::vector<FinMap>> units;
        for (int t = 0; t <= bound; ++t)
            if (auto h = monomials_of_grade(t); !h.empty()) units.push_back(std::move(h));
        return units;
    }

    /// Actions composable with both f and g (which share a grade): all
    /// ordered surjections s -> grade(f) with s <= bound.
    std::vector<FinMap> unit_actions(const FinMap& f, const FinMap& g, int bound) const;

    std::string name() const { return "gamma_os"; }

    bool valid_monomial(const FinMap& f) const {
        return f.codomain_size() == target_ && is_ordered_surjection(f);
    }

private:
    int target_;
};

/// The additive monoid of natural numbers, viewed as a one-object category;
/// a morphism is its degree.  Free modules over it are spaces of univariate
/// polynomials with the shift action.  The admissible order is the reversed
/// numeric order, so the minimal element of a support is its highest degree.
class NatMonoid {
public:
    using Morphism = int;

    /// One object only: the level-t evaluation is the degree <= t slice.
    static constexpr bool cumulative = true;

    static int grade_of(int d) { return d; }
    static bool mono_less(int a, int b) { return a > b; }

    std::vector<int> hom(int s, int t) const {
        if (s < t || t < 0) return {};
        return {s - t};
    }

    std::vector<int> monomials_of_grade(int t) const { return {t}; }

    std::vector<int> monomials_at(int t) const {
        std::vector<int> v;
        for (int d = 0; d <= t; ++d) v.push_back(d);
        return v;
    }

    std::vector<int> span_actions(int gen_level, int t) const {
        std::vector<int> v;
        for (int e = 0; e + gen_level <= t; ++e) v.push_back(e);
        return v;
    }

    int compose(int f, int e) const { return f + e; }

    std::vector<int> divisors(int f, int g) const {
        if (g < f) return {};
        return {g - f};
    }

    int identity(int) const { return 0; }

    std::vector<std::vector<int>> comparison_units(int bound) const {
        return {monomials_at(bound)};
    }

    std::vector<int> unit_actions(int f, int g, int bound) const {
        std::vector<int> v;
        for (int e = 0; e + std::max(f, g) <= bound; ++e) v.push_back(e);
        return v;
    }

    std::string name() const { return "nat_monoid"; }

    bool valid_monomial(int d) const { return d >= 0; }
};

static_assert(CategoryOracle<OsCategory>);
static_assert(CategoryOracle<NatMonoid>);

} // namespace gcat
