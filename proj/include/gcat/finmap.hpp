#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcat {

/// A total map f : {1,...,m} -> {1,...,n} between initial segments of the
/// positive integers, stored densely as the value sequence f(1),...,f(m).
/// FinMaps are immutable values; all operations on them are pure.
class FinMap {
public:
    FinMap() = default;

    /// Throws std::invalid_argument if an entry lies outside {1,...,n}.
    FinMap(std::vector<int> values, int codomain_size)
        : values_(std::move(values)), codomain_(codomain_size) {
        if (codomain_ < 0)
            throw std::invalid_argument("FinMap: negative codomain");
        for (int v : values_)
            if (v < 1 || v > codomain_)
                throw std::invalid_argument("FinMap: value out of range");
    }

    static FinMap identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return FinMap(std::move(v), n);
    }

    int domain_size() const { return static_cast<int>(values_.size()); }
    int codomain_size() const { return codomain_; }
    const std::vector<int>& values() const { return values_; }

    /// 1-indexed application f(i).
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const FinMap&) const = default;

    /// Container order: domain size, then codomain size, then value sequence.
    /// Within one hom-set this is the lexicographic order on values.
    std::strong_ordering operator<=>(const FinMap& other) const {
        if (auto c = domain_size() <=> other.domain_size(); c != 0) return c;
        if (auto c = codomain_ <=> other.codomain_; c != 0) return c;
        return values_ <=> other.values_;
    }

    std::string str() const;

private:
    std::vector<int> values_;
    int codomain_ = 0;
};

enum class CatKind { all, surjections, ordered_surjections, injections };

/// Accepts "all", "sur", "os", "inj" and the long spellings.
CatKind parse_cat_kind(const std::string& s);
std::string cat_kind_name(CatKind k);

struct MapFlags {
    bool injective = false;
    bool surjective = false;
    bool ordered_surjective = false;
    bool bijective = false;
};

/// g after f (f is applied first).  Throws std::invalid_argument when
/// codomain(f) != domain(g).
FinMap compose(const FinMap& g, const FinMap& f);

MapFlags classify(const FinMap& f);

bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);
bool is_ordered_surjection(const FinMap& f);
bool is_bijective(const FinMap& f);
bool satisfies(CatKind kind, const FinMap& f);

/// All morphisms of the given kind from {1..m} to {1..n}, in lexicographic
/// order of the value sequence.  Empty when none exist.
std::vector<FinMap> enumerate_homs(CatKind kind, int m, int n);

/// The section f^! of a surjection f, picking the minimum of each preimage:
/// f^!(i) = min f^{-1}(i), so that compose(f, splitting(f)) = identity.
/// Throws std::domain_error if f is not surjective.
FinMap splitting(const FinMap& f);

struct ImageFactorization {
    FinMap injection;   // u, the increasing injection onto image(f)
    FinMap surjection;  // s, the corestriction of f to its image
};

/// Unique factorization f = u . s with u an increasing injection and s a
/// surjection onto {1..|image(f)|}.
ImageFactorization image_factorization(const FinMap& f);

/// A bijective FinMap n -> n.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless the values are a permutation.
    explicit Permutation(std::vector<int> values);
    explicit Permutation(const FinMap& map);

    static Permutation identity(int n) { return Permutation(FinMap::identity(n)); }

    int degree() const { return map_.domain_size(); }
    int operator()(int i) const { return map_(i); }
    const FinMap& as_finmap() const { return map_; }
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    std::strong_ordering operator<=>(const Permutation&) const = default;

private:
    FinMap map_;
};

} // namespace gcat
