#include <doctest.h>

#include "gcat/element.hpp"
#include "gcat/io.hpp"
#include "gcat/polynomial.hpp"
#include "gcat/rng.hpp"

using namespace gcat;

namespace {

FinMap fm(std::vector<int> v, int n) { return FinMap(std::move(v), n); }

Element<OsCategory> os_elem(int target, int k, int p,
                            std::vector<std::pair<FinMap, int>> terms) {
    Element<OsCategory> v(target, k, p);
    for (auto& [mono, coeff] : terms) v.add_term(Mono<OsCategory>{mono, 1}, coeff);
    return v;
}

} // namespace

TEST_SUITE("element") {

TEST_CASE("terms accumulate mod p and zeros vanish") {
    Element<OsCategory> v(2, 1, 5);
    FinMap m = fm({1, 1, 2}, 2);
    v.add_term(Mono<OsCategory>{m, 1}, 3);
    v.add_term(Mono<OsCategory>{m, 1}, 2);
    CHECK(v.zero());
    v.add_term(Mono<OsCategory>{m, 1}, 7);
    CHECK(v.terms().begin()->second == 2);
    CHECK(v.level() == 3);
    CHECK_THROWS_AS(v.add_term(Mono<OsCategory>{m, 2}, 1), std::invalid_argument);
}

TEST_CASE("action relabels basis monomials") {
    Element<OsCategory> v = os_elem(2, 1, 5, {{fm({1, 1, 2}, 2), 2}, {fm({1, 2, 2}, 2), 3}});
    OsCategory cat(2);
    Element<OsCategory> moved = act(cat, v, fm({1, 2, 3, 3}, 3));
    Element<OsCategory> expected =
        os_elem(2, 1, 5, {{fm({1, 1, 2, 2}, 2), 2}, {fm({1, 2, 2, 2}, 2), 3}});
    CHECK(moved == expected);

    CHECK(act(cat, v, FinMap::identity(3)) == v);
    CHECK_THROWS_AS(act(cat, v, fm({1, 2}, 2)), std::domain_error);
    CHECK_THROWS_AS(act(cat, v, fm({2, 1, 2}, 3)), std::domain_error); // not ordered
}

TEST_CASE("monoid action shifts degrees") {
    NatMonoid cat;
    Element<NatMonoid> v = poly_to_element(poly_parse("x^2+1", 2), 2);
    Element<NatMonoid> moved = act(cat, v, 3);
    CHECK(element_to_poly(moved) == poly_parse("x^5+x^3", 2));
}

TEST_CASE("leading term is minimal in the admissible order") {
    Element<OsCategory> v = os_elem(2, 1, 5, {{fm({1, 2, 2}, 2), 3}, {fm({1, 1, 2}, 2), 2}});
    auto [mono, coeff] = v.leading_term();
    CHECK(mono.mor == fm({1, 1, 2}, 2));
    CHECK(coeff == 2);

    Element<OsCategory> single = os_elem(2, 1, 5, {{fm({1, 2, 1}, 2), 4}});
    CHECK(single.leading_term().first.mor == fm({1, 2, 1}, 2));

    Element<NatMonoid> p = poly_to_element(poly_parse("x^2+x+1", 2), 2);
    CHECK(p.leading_term().first.mor == 2); // highest degree leads
    CHECK(p.level() == 2);

    Element<OsCategory> zero(2, 1, 5);
    CHECK_THROWS_AS(zero.leading_term(), std::domain_error);
}

TEST_CASE("leading monomials are stable under the action") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 10000; ++trial) {
        int x = rng.uniform(1, 3);
        OsCategory cat(x);
        int level = rng.uniform(x, x + 2);
        auto homs = cat.monomials_of_grade(level);
        int k = rng.uniform(1, 2);
        Element<OsCategory> v(x, k, 5);
        int nterms = rng.uniform(1, 3);
        for (int i = 0; i < nterms; ++i)
            v.add_term(Mono<OsCategory>{homs[static_cast<std::size_t>(rng.uniform(
                                            0, static_cast<int>(homs.size()) - 1))],
                                        rng.uniform(1, k)},
                       rng.uniform(1, 4));
        if (v.zero()) continue;
        int s = rng.uniform(level, level + 2);
        auto actions = cat.hom(s, level);
        const FinMap& e = actions[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(actions.size()) - 1))];
        auto lead = v.leading_term().first;
        auto moved = act(cat, v, e);
        auto moved_lead = moved.leading_term().first;
        CHECK(moved_lead.mor == compose(lead.mor, e));
        CHECK(moved_lead.coord == lead.coord);
    }
}

TEST_CASE("axpy and monic normalization") {
    Element<OsCategory> a = os_elem(2, 1, 5, {{fm({1, 1, 2}, 2), 2}, {fm({1, 2, 2}, 2), 3}});
    Element<OsCategory> b = os_elem(2, 1, 5, {{fm({1, 1, 2}, 2), 4}});
    a.axpy(1, b);
    CHECK(a.terms().begin()->second == 1);
    a.make_monic();
    CHECK(a.leading_term().second == 1);
    Element<OsCategory> c(2, 2, 5);
    CHECK_THROWS_AS(a.axpy(1, c), std::invalid_argument);
}

TEST_CASE("element json round trip") {
    SplitMix64 rng(43);
    OsCategory cat(2);
    auto homs = cat.monomials_of_grade(4);
    for (int trial = 0; trial < 200; ++trial) {
        Element<OsCategory> v(2, 2, 7);
        int nterms = rng.uniform(0, 4);
        for (int i = 0; i < nterms; ++i)
            v.add_term(Mono<OsCategory>{homs[static_cast<std::size_t>(rng.uniform(
                                            0, static_cast<int>(homs.size()) - 1))],
                                        rng.uniform(1, 2)},
                       rng.uniform(1, 6));
        CHECK(os_element_from_json(to_json(v)) == v);
    }
    CHECK_THROWS_AS(os_element_from_json(json::parse(
                        R"({"target":2,"k":1,"p":2,"level":2,"terms":
                        [{"mono":{"m":2,"n":2,"values":[2,1]},"coord":1,"coeff":1}]})")),
                    std::invalid_argument);
}

TEST_CASE("polynomial parsing and printing") {
    CHECK(poly_parse("x^3+1", 2) == Poly{1, 0, 0, 1});
    CHECK(poly_parse("x^2+x+1", 5) == Poly{1, 1, 1});
    CHECK(poly_parse("2x^2 + 4x + 1", 5) == Poly{1, 4, 2});
    CHECK(poly_parse("-x+3", 5) == Poly{3, 4});
    CHECK(poly_parse("x+x", 2).empty()); // cancels mod 2
    CHECK(poly_print(poly_parse("x^3+1", 2)) == "x^3+1");
    CHECK(poly_print(Poly{}) == "0");
    CHECK(poly_print(Poly{2, 1}) == "x+2");
    CHECK_THROWS_AS(poly_parse("", 2), std::invalid_argument);
    CHECK_THROWS_AS(poly_parse("x^", 2), std::invalid_argument);
    CHECK_THROWS_AS(poly_parse("y+1", 2), std::invalid_argument);

    SplitMix64 rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        int p = rng.uniform(0, 1) == 0 ? 2 : 5;
        Poly a(static_cast<std::size_t>(rng.uniform(1, 9)), 0);
        for (auto& c : a) c = rng.uniform(0, p - 1);
        a = poly_normalize(std::move(a), p);
        CHECK(poly_parse(poly_print(a), p) == a);
    }
}

TEST_CASE("polynomial gcd and divisibility") {
    CHECK(poly_gcd(poly_parse("x^2+x+1", 2), poly_parse("x^3+1", 2), 2) ==
          poly_parse("x^2+x+1", 2));
    CHECK(poly_gcd(poly_parse("x^2+x+1", 5), poly_parse("x^3+1", 5), 5) == Poly{1});
    CHECK(poly_divides(poly_parse("x^2+x+1", 2), poly_parse("x^3+1", 2), 2));
    CHECK_FALSE(poly_divides(poly_parse("x^2+x+1", 2), poly_parse("x^3+x+1", 2), 2));
    CHECK(poly_divides(poly_parse("x+1", 5), Poly{}, 5)); // zero is divisible

    SplitMix64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        int p = rng.uniform(0, 1) == 0 ? 2 : 5;
        auto random_poly = [&](int maxdeg) {
            Poly a(static_cast<std::size_t>(rng.uniform(1, maxdeg + 1)), 0);
            for (auto& c : a) c = rng.uniform(0, p - 1);
            return poly_normalize(std::move(a), p);
        };
        Poly a = random_poly(6);
        Poly b = random_poly(6);
        Poly g = poly_gcd(a, b, p);
        if (!g.empty()) {
            CHECK(poly_divides(g, a, p));
            CHECK(poly_divides(g, b, p));
        }
        Poly prod = poly_mul(a, b, p);
        if (!a.empty()) CHECK(poly_divides(a, prod, p));
    }
}

} // TEST_SUITE
