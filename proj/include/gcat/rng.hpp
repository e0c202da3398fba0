#pragma once

#include <cstdint>
#include <vector>

#include "gcat/finmap.hpp"

namespace gcat {

/// splitmix64: tiny deterministic generator.  Used instead of the standard
/// distributions so that seeded runs are byte-identical across platforms and
/// so that parallel loops can derive independent per-item streams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] (inclusive).
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Stream derivation for parallel trials: trial i uses seed mix(seed, i).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL + stream * 0x100000001b3ULL));
    return g.next();
}

inline FinMap random_map(SplitMix64& rng, int m, int n) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (auto& x : v) x = rng.uniform(1, n);
    return FinMap(std::move(v), n);
}

} // namespace gcat
