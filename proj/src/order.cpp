#include "gcat/order.hpp"

namespace gcat {

namespace {

// Backtracking search for the lex-least ordered surjection h with g.h = f.
// h(i) must lie in g^{-1}(f(i)); the restricted-growth condition (a value is
// legal iff already seen or exactly the next unseen one) plus a
// remaining-positions bound prune the search.
bool divides_rec(const FinMap& f, const FinMap& g, std::vector<int>& h,
                 std::vector<char>& seen, int distinct) {
    int mf = f.domain_size();
    int mg = g.domain_size();
    int pos = static_cast<int>(h.size());
    if (pos == mf) return distinct == mg;
    if (distinct + (mf - pos) < mg) return false;
    int want = f(pos + 1);
    for (int v = 1; v <= std::min(mg, distinct + 1); ++v) {
        if (g(v) != want) continue;
        bool was_seen = seen[static_cast<std::size_t>(v)] != 0;
        seen[static_cast<std::size_t>(v)] = 1;
        h.push_back(v);
        if (divides_rec(f, g, h, seen, distinct + (was_seen ? 0 : 1))) return true;
        h.pop_back();
        seen[static_cast<std::size_t>(v)] = static_cast<char>(was_seen);
    }
    return false;
}

} // namespace

std::optional<FinMap> divides_os(const FinMap& f, const FinMap& g) {
    if (f.codomain_size() != g.codomain_size())
        throw std::domain_error("divides_os: codomain mismatch");
    if (f.domain_size() < g.domain_size()) return std::nullopt;
    std::vector<int> h;
    h.reserve(static_cast<std::size_t>(f.domain_size()));
    std::vector<char> seen(static_cast<std::size_t>(g.domain_size()) + 1, 0);
    if (divides_rec(f, g, h, seen, 0))
        return FinMap(std::move(h), g.domain_size());
    return std::nullopt;
}

std::optional<FinMap> divides_os_brute(const FinMap& f, const FinMap& g) {
    if (f.codomain_size() != g.codomain_size())
        throw std::domain_error("divides_os_brute: codomain mismatch");
    for (const FinMap& h :
         enumerate_homs(CatKind::ordered_surjections, f.domain_size(), g.domain_size()))
        if (compose(g, h) == f) return h;
    return std::nullopt;
}

HigmanData higman_data(const FinMap& f) {
    HigmanData data;
    int m = f.domain_size();
    data.lambda = m;
    int last_repeat = 0; // max i such that f(i) = f(j) for some j < i
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j < i; ++j)
            if (f(i) == f(j)) {
                last_repeat = i;
                break;
            }
    if (last_repeat == 0) return data; // injective
    data.mu = m - last_repeat;
    data.pi = f(last_repeat);
    std::vector<int> reduced;
    reduced.reserve(static_cast<std::size_t>(m - 1));
    for (int i = 1; i <= m; ++i)
        if (i != last_repeat) reduced.push_back(f(i));
    data.reduced = FinMap(std::move(reduced), f.codomain_size());
    return data;
}

DominationResult find_domination(std::span<const FinMap> seq, int budget, DominationMode mode) {
    return find_domination(seq, budget, mode, [](const FinMap& a, const FinMap& b) {
        return divides_os(a, b).has_value();
    });
}

QOrderOracle<int> nat_leq_oracle(int bound) {
    QOrderOracle<int> oracle;
    for (int i = 0; i <= bound; ++i) oracle.carrier.push_back(i);
    oracle.leq = [](int a, int b) { return a <= b; };
    return oracle;
}

QOrderOracle<FinMap> gamma_divisibility_oracle(int n, int max_domain) {
    QOrderOracle<FinMap> oracle;
    for (int m = 0; m <= max_domain; ++m)
        for (FinMap& f : enumerate_homs(CatKind::all, m, n))
            oracle.carrier.push_back(std::move(f));
    oracle.leq = [](const FinMap& a, const FinMap& b) { return divides_os(a, b).has_value(); };
    return oracle;
}

} // namespace gcat
