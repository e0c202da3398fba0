#include "gcat/admissible.hpp"

namespace gcat {

Cmp lex_compare(const FinMap& f, const FinMap& g) {
    if (f.domain_size() != g.domain_size() || f.codomain_size() != g.codomain_size())
        throw std::domain_error("lex_compare: shape mismatch");
    for (int i = 1; i <= f.domain_size(); ++i) {
        if (f(i) < g(i)) return Cmp::lt;
        if (f(i) > g(i)) return Cmp::gt;
    }
    return Cmp::eq;
}

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::incomparable: return "incomparable";
        case ViolationKind::cyclic: return "cyclic";
        case ViolationKind::intransitive: return "intransitive";
        case ViolationKind::order_break: return "order_break";
        case ViolationKind::cancellation: return "cancellation";
    }
    return "?";
}

PartialCmp DivisibilityComparator::operator()(const FinMap& f, const FinMap& g) const {
    if (f == g) return PartialCmp::eq;
    bool fg = divides_os(f, g).has_value();
    bool gf = divides_os(g, f).has_value();
    if (fg && gf) return PartialCmp::eq; // identified in the quotient poset
    if (fg) return PartialCmp::lt;
    if (gf) return PartialCmp::gt;
    return PartialCmp::incomparable;
}

} // namespace gcat
