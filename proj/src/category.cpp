#include "gcat/category.hpp"

namespace gcat {

namespace {

// Collect every ordered surjection e with f.e = g, in lexicographic order.
void divisors_rec(const FinMap& f, const FinMap& g, std::vector<int>& e,
                  std::vector<char>& seen, int distinct, std::vector<FinMap>& out) {
    int mg = g.domain_size();
    int mf = f.domain_size();
    int pos = static_cast<int>(e.size());
    if (pos == mg) {
        if (distinct == mf) out.emplace_back(e, mf);
        return;
    }
    if (distinct + (mg - pos) < mf) return;
    int want = g(pos + 1);
    for (int v = 1; v <= std::min(mf, distinct + 1); ++v) {
        if (f(v) != want) continue;
        bool was_seen = seen[static_cast<std::size_t>(v)] != 0;
        seen[static_cast<std::size_t>(v)] = 1;
        e.push_back(v);
        divisors_rec(f, g, e, seen, distinct + (was_seen ? 0 : 1), out);
        e.pop_back();
        seen[static_cast<std::size_t>(v)] = static_cast<char>(was_seen);
    }
}

} // namespace

std::vector<FinMap> OsCategory::divisors(const FinMap& f, const FinMap& g) const {
    if (f.codomain_size() != g.codomain_size()) return {};
    if (g.domain_size() < f.domain_size()) return {};
    std::vector<FinMap> out;
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(g.domain_size()));
    std::vector<char> seen(static_cast<std::size_t>(f.domain_size()) + 1, 0);
    divisors_rec(f, g, e, seen, 0, out);
    return out;
}

std::vector<FinMap> OsCategory::unit_actions(const FinMap& f, const FinMap& g, int bound) const {
    if (f.domain_size() != g.domain_size())
        throw std::invalid_argument("unit_actions: morphisms from different hom-sets");
    std::vector<FinMap> out;
    for (int s = 0; s <= bound; ++s)
        for (FinMap& e : hom(s, f.domain_size())) out.push_back(std::move(e));
    return out;
}

} // namespace gcat
