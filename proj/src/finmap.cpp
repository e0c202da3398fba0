#include "gcat/finmap.hpp"

#include <algorithm>

namespace gcat {

std::string FinMap::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values_[i]);
    }
    s += "]:" + std::to_string(domain_size()) + "->" + std::to_string(codomain_);
    return s;
}

CatKind parse_cat_kind(const std::string& s) {
    if (s == "all") return CatKind::all;
    if (s == "sur" || s == "surjections") return CatKind::surjections;
    if (s == "os" || s == "ordered_surjections") return CatKind::ordered_surjections;
    if (s == "inj" || s == "injections") return CatKind::injections;
    throw std::invalid_argument("unknown category kind: " + s);
}

std::string cat_kind_name(CatKind k) {
    switch (k) {
        case CatKind::all: return "all";
        case CatKind::surjections: return "surjections";
        case CatKind::ordered_surjections: return "ordered_surjections";
        case CatKind::injections: return "injections";
    }
    return "?";
}

FinMap compose(const FinMap& g, const FinMap& f) {
    if (f.codomain_size() != g.domain_size())
        throw std::invalid_argument("compose: codomain of f != domain of g");
    std::vector<int> v(static_cast<std::size_t>(f.domain_size()));
    for (int i = 1; i <= f.domain_size(); ++i)
        v[static_cast<std::size_t>(i - 1)] = g(f(i));
    return FinMap(std::move(v), g.codomain_size());
}

bool is_injective(const FinMap& f) {
    std::vector<char> seen(static_cast<std::size_t>(f.codomain_size()) + 1, 0);
    for (int v : f.values()) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool is_surjective(const FinMap& f) {
    std::vector<char> seen(static_cast<std::size_t>(f.codomain_size()) + 1, 0);
    int hit = 0;
    for (int v : f.values())
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            ++hit;
        }
    return hit == f.codomain_size();
}

bool is_ordered_surjection(const FinMap& f) {
    // Surjective with strictly increasing preimage minima; equivalently the
    // first occurrences of values, scanned left to right, are 1,2,3,...
    int next_new = 1;
    for (int v : f.values()) {
        if (v > next_new) return false;
        if (v == next_new) ++next_new;
    }
    return next_new == f.codomain_size() + 1;
}

bool is_bijective(const FinMap& f) {
    return f.domain_size() == f.codomain_size() && is_injective(f);
}

MapFlags classify(const FinMap& f) {
    MapFlags flags;
    flags.injective = is_injective(f);
    flags.surjective = is_surjective(f);
    flags.ordered_surjective = flags.surjective && is_ordered_surjection(f);
    flags.bijective = flags.injective && f.domain_size() == f.codomain_size();
    return flags;
}

bool satisfies(CatKind kind, const FinMap& f) {
    switch (kind) {
        case CatKind::all: return true;
        case CatKind::surjections: return is_surjective(f);
        case CatKind::ordered_surjections: return is_ordered_surjection(f);
        case CatKind::injections: return is_injective(f);
    }
    return false;
}

namespace {

// Backtracking enumeration in lexicographic order.  `max_allowed` caps each
// value by the restricted-growth condition for ordered surjections; the
// remaining-positions bound prunes non-surjective branches early.
void enumerate_rec(CatKind kind, int m, int n, std::vector<int>& prefix,
                   std::vector<char>& used, int distinct,
                   std::vector<FinMap>& out) {
    int pos = static_cast<int>(prefix.size());
    if (pos == m) {
        bool ok = true;
        if (kind == CatKind::surjections || kind == CatKind::ordered_surjections)
            ok = distinct == n;
        if (ok) out.emplace_back(prefix, n);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (kind == CatKind::injections && used[static_cast<std::size_t>(v)]) continue;
        if (kind == CatKind::ordered_surjections && v > distinct + 1) break;
        if (kind == CatKind::surjections || kind == CatKind::ordered_surjections) {
            int new_distinct = distinct + (used[static_cast<std::size_t>(v)] ? 0 : 1);
            if (new_distinct + (m - pos - 1) < n) continue;
        }
        bool was_used = used[static_cast<std::size_t>(v)] != 0;
        used[static_cast<std::size_t>(v)] = 1;
        prefix.push_back(v);
        enumerate_rec(kind, m, n, prefix, used, distinct + (was_used ? 0 : 1), out);
        prefix.pop_back();
        used[static_cast<std::size_t>(v)] = static_cast<char>(was_used);
    }
}

} // namespace

std::vector<FinMap> enumerate_homs(CatKind kind, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate_homs: negative size");
    std::vector<FinMap> out;
    if (m == 0) {
        bool ok = kind == CatKind::all || kind == CatKind::injections ? true : n == 0;
        if (ok) out.emplace_back(std::vector<int>{}, n);
        return out;
    }
    if (n == 0) return out; // no maps from a nonempty set into the empty set
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(m));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    enumerate_rec(kind, m, n, prefix, used, 0, out);
    return out;
}

FinMap splitting(const FinMap& f) {
    if (!is_surjective(f)) throw std::domain_error("splitting: map is not surjective");
    std::vector<int> sec(static_cast<std::size_t>(f.codomain_size()), 0);
    for (int i = f.domain_size(); i >= 1; --i)
        sec[static_cast<std::size_t>(f(i) - 1)] = i;
    return FinMap(std::move(sec), f.domain_size());
}

ImageFactorization image_factorization(const FinMap& f) {
    std::vector<char> seen(static_cast<std::size_t>(f.codomain_size()) + 1, 0);
    for (int v : f.values()) seen[static_cast<std::size_t>(v)] = 1;
    std::vector<int> image;
    std::vector<int> rank(static_cast<std::size_t>(f.codomain_size()) + 1, 0);
    for (int v = 1; v <= f.codomain_size(); ++v)
        if (seen[static_cast<std::size_t>(v)]) {
            image.push_back(v);
            rank[static_cast<std::size_t>(v)] = static_cast<int>(image.size());
        }
    int r = static_cast<int>(image.size());
    std::vector<int> s(static_cast<std::size_t>(f.domain_size()));
    for (int i = 1; i <= f.domain_size(); ++i)
        s[static_cast<std::size_t>(i - 1)] = rank[static_cast<std::size_t>(f(i))];
    return {FinMap(std::move(image), f.codomain_size()), FinMap(std::move(s), r)};
}

Permutation::Permutation(std::vector<int> values) {
    int n = static_cast<int>(values.size());
    FinMap m(std::move(values), n);
    if (!is_bijective(m)) throw std::invalid_argument("Permutation: not bijective");
    map_ = std::move(m);
}

Permutation::Permutation(const FinMap& map) {
    if (!is_bijective(map)) throw std::invalid_argument("Permutation: not bijective");
    map_ = map;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(static_cast<std::size_t>(degree()));
    for (int i = 1; i <= degree(); ++i)
        inv[static_cast<std::size_t>(map_(i) - 1)] = i;
    return Permutation(std::move(inv));
}

} // namespace gcat
