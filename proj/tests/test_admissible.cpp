#include <doctest.h>

#include "gcat/admissible.hpp"
#include "gcat/io.hpp"

using namespace gcat;

namespace {

FinMap fm(std::vector<int> v, int n) { return FinMap(std::move(v), n); }

} // namespace

TEST_SUITE("admissible") {

TEST_CASE("lex comparison") {
    CHECK(lex_compare(fm({1, 1, 2}, 2), fm({1, 2, 1}, 2)) == Cmp::lt);
    CHECK(lex_compare(fm({1, 2, 1}, 2), fm({1, 2, 2}, 2)) == Cmp::lt);
    CHECK(lex_compare(fm({1, 2, 2}, 2), fm({1, 2, 2}, 2)) == Cmp::eq);
    CHECK(lex_compare(fm({1, 2, 1}, 2), fm({1, 1, 2}, 2)) == Cmp::gt);
    CHECK_THROWS_AS(lex_compare(fm({1}, 2), fm({1, 1}, 2)), std::domain_error);
}

TEST_CASE("right compatibility: worked instance") {
    // [1,1,2] < [1,2,1]; acting by e = [1,2,2,3] keeps the order
    FinMap f = fm({1, 1, 2}, 2);
    FinMap g = fm({1, 2, 1}, 2);
    FinMap e = fm({1, 2, 2, 3}, 3);
    CHECK(lex_compare(f, g) == Cmp::lt);
    CHECK(compose(f, e) == fm({1, 1, 1, 2}, 2));
    CHECK(compose(g, e) == fm({1, 2, 2, 1}, 2));
    CHECK(lex_compare(compose(f, e), compose(g, e)) == Cmp::lt);
}

TEST_CASE("lex passes the axioms on ordered surjections at bound 4") {
    for (int target = 0; target <= 4; ++target) {
        auto report = check_admissible(OsCategory(target), LexComparator{}, 4);
        CHECK(report.pass());
    }
}

TEST_CASE("lex right-compatibility at the wider module bounds") {
    // targets <= 3, acting morphisms with domains <= 6
    for (int target = 1; target <= 3; ++target) {
        OsCategory cat(target);
        for (int t = target; t <= 4; ++t) {
            auto unit = cat.monomials_of_grade(t);
            for (std::size_t a = 0; a < unit.size(); ++a)
                for (std::size_t b = 0; b < unit.size(); ++b) {
                    if (a == b) continue;
                    if (lex_compare(unit[a], unit[b]) != Cmp::lt) continue;
                    for (int s = t; s <= 6; ++s)
                        for (const FinMap& e : cat.hom(s, t))
                            CHECK(lex_compare(compose(unit[a], e), compose(unit[b], e)) ==
                                  Cmp::lt);
                }
        }
    }
}

TEST_CASE("right action by an ordered surjection cancels") {
    for (int target = 1; target <= 3; ++target) {
        OsCategory cat(target);
        for (int t = target; t <= 4; ++t) {
            auto unit = cat.monomials_of_grade(t);
            for (std::size_t a = 0; a < unit.size(); ++a)
                for (std::size_t b = a + 1; b < unit.size(); ++b)
                    for (int s = t; s <= 6; ++s)
                        for (const FinMap& e : cat.hom(s, t))
                            CHECK(compose(unit[a], e) != compose(unit[b], e));
        }
    }
}

TEST_CASE("divisibility restricted to hom-sets violates totality") {
    auto report = check_admissible(OsCategory(2), DivisibilityComparator{}, 3);
    CHECK_FALSE(report.pass());
    bool found = false;
    for (const auto& v : report.axiom1) {
        if (v.kind != ViolationKind::incomparable) continue;
        if ((v.f == fm({1, 1, 2}, 2) && v.g == fm({1, 2, 1}, 2)) ||
            (v.f == fm({1, 2, 1}, 2) && v.g == fm({1, 1, 2}, 2)))
            found = true;
    }
    CHECK(found);
}

TEST_CASE("reversed numeric order passes on the truncated monoid") {
    auto report = check_admissible(NatMonoid{}, ReverseDegreeComparator{}, 6);
    CHECK(report.pass());
    CHECK(report.pairs_checked == 21); // pairs within {0..6}
}

TEST_CASE("serial and parallel checks produce identical reports") {
    auto runs_equal = [](const auto& a, const auto& b) {
        if (a.pairs_checked != b.pairs_checked) return false;
        if (a.actions_checked != b.actions_checked) return false;
        if (a.axiom1.size() != b.axiom1.size()) return false;
        if (a.axiom2.size() != b.axiom2.size()) return false;
        if (a.cancellation.size() != b.cancellation.size()) return false;
        for (std::size_t i = 0; i < a.axiom1.size(); ++i) {
            if (a.axiom1[i].kind != b.axiom1[i].kind) return false;
            if (!(a.axiom1[i].f == b.axiom1[i].f) || !(a.axiom1[i].g == b.axiom1[i].g))
                return false;
        }
        return true;
    };
    auto serial = check_admissible(OsCategory(2), LexComparator{}, 5, ExecPolicy::serial);
    auto parallel = check_admissible(OsCategory(2), LexComparator{}, 5, ExecPolicy::parallel);
    CHECK(runs_equal(serial, parallel));

    auto dserial = check_admissible(OsCategory(2), DivisibilityComparator{}, 4, ExecPolicy::serial);
    auto dparallel =
        check_admissible(OsCategory(2), DivisibilityComparator{}, 4, ExecPolicy::parallel);
    CHECK(runs_equal(dserial, dparallel));
    CHECK(to_json(dserial) == to_json(dparallel));
}

} // TEST_SUITE
