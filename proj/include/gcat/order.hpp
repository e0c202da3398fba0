#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gcat/finmap.hpp"

namespace gcat {

/// Divisibility on maps with a common codomain n: f <= g when f = g.h for
/// some ordered surjection h.  Returns the lexicographically least witness h,
/// or nullopt.  Throws std::domain_error on codomain mismatch.
///
/// The search backtracks over h(i) in g^{-1}(f(i)), pruned by the
/// restricted-growth condition that characterises ordered surjections.
std::optional<FinMap> divides_os(const FinMap& f, const FinMap& g);

/// Reference implementation: filter the full enumeration of ordered
/// surjections.  Kept as the oracle for divides_os.
std::optional<FinMap> divides_os_brute(const FinMap& f, const FinMap& g);

/// The reduction data of a non-injective map f : m -> n.
///   mu(f)   = m - max{ i | f(i) = f(j) for some j < i }
///   pi(f)   = f(m - mu(f))
///   reduced = f with position m - mu(f) deleted
/// For injective f the three optional fields are empty.  When defined,
/// f <= reduced in the divisibility order.
struct HigmanData {
    int lambda = 0; // domain size
    std::optional<int> mu;
    std::optional<int> pi;
    std::optional<FinMap> reduced;

    bool injective() const { return !mu.has_value(); }
};

HigmanData higman_data(const FinMap& f);

enum class DominationMode { first_pair, chain };

struct DominationPair {
    int i = 0, j = 0; // i < j and x_j <= x_i
    bool operator==(const DominationPair&) const = default;
};

/// monostate = no domination found within the budget.
using DominationResult = std::variant<std::monostate, DominationPair, std::vector<int>>;

/// Searches the first `budget` terms of the sequence.
///
/// first_pair: the least pair under lexicographic (j, i) with i < j and
/// x_j <= x_i.  chain: greedy descending chain a(0) < a(1) < ... with
/// x_{a(k+1)} <= x_{a(k)}, starting at the least index that dominates some
/// later term and extending by the least later dominated index each step.
template <class T, class Leq>
DominationResult find_domination(std::span<const T> seq, int budget, DominationMode mode,
                                 Leq&& leq) {
    if (budget < 1) throw std::invalid_argument("find_domination: budget must be >= 1");
    int limit = std::min<int>(budget, static_cast<int>(seq.size()));
    auto le = [&](int a, int b) {
        return leq(seq[static_cast<std::size_t>(a)], seq[static_cast<std::size_t>(b)]);
    };
    if (mode == DominationMode::first_pair) {
        for (int j = 1; j < limit; ++j)
            for (int i = 0; i < j; ++i)
                if (le(j, i)) return DominationPair{i, j};
        return std::monostate{};
    }
    // chain mode
    for (int start = 0; start < limit; ++start) {
        std::vector<int> chain{start};
        int cur = start;
        for (int j = cur + 1; j < limit; ++j)
            if (le(j, cur)) {
                chain.push_back(j);
                cur = j;
            }
        if (chain.size() > 1) return chain;
    }
    return std::monostate{};
}

DominationResult find_domination(std::span<const FinMap> seq, int budget, DominationMode mode);

/// A decidable quasi-order on a bounded, explicitly enumerated carrier.
template <class T>
struct QOrderOracle {
    std::vector<T> carrier;
    std::function<bool(const T&, const T&)> leq;

    bool contains(const T& x) const {
        return std::find(carrier.begin(), carrier.end(), x) != carrier.end();
    }
};

/// A downward-closed subset of the oracle's carrier, kept sorted.
template <class T>
struct Sieve {
    std::vector<T> members;
    const QOrderOracle<T>* universe = nullptr;

    bool contains(const T& x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }

    /// Exhaustive check of downward closure within the carrier.
    bool is_downward_closed() const {
        for (const T& y : members)
            for (const T& x : universe->carrier)
                if (universe->leq(x, y) && !contains(x)) return false;
        return true;
    }
};

/// All carrier elements below some generator.  Throws std::domain_error if a
/// generator lies outside the carrier.
template <class T>
Sieve<T> generated_sieve(const QOrderOracle<T>& oracle, std::span<const T> generators) {
    for (const T& g : generators)
        if (!oracle.contains(g))
            throw std::domain_error("generated_sieve: generator outside the universe");
    Sieve<T> sieve;
    sieve.universe = &oracle;
    for (const T& x : oracle.carrier)
        for (const T& g : generators)
            if (oracle.leq(x, g)) {
                sieve.members.push_back(x);
                break;
            }
    std::sort(sieve.members.begin(), sieve.members.end());
    return sieve;
}

/// {0, 1, ..., bound} with the usual order.
QOrderOracle<int> nat_leq_oracle(int bound);

/// All maps into {1..n} with domain size <= max_domain, under divisibility.
QOrderOracle<FinMap> gamma_divisibility_oracle(int n, int max_domain);

} // namespace gcat
