#include "gcat/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "gcat/linalg.hpp"

namespace gcat {

Poly poly_normalize(Poly a, int p) {
    Fp field{p};
    for (auto& c : a) c = field.reduce(c);
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_parse(std::string_view text, int p) {
    Poly out;
    Fp field{p};
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("poly_parse: empty input");
    int sign = 1;
    bool expect_term = true;
    while (i < text.size()) {
        skip_ws();
        if (!expect_term) {
            if (text[i] == '+') sign = 1;
            else if (text[i] == '-') sign = -1;
            else throw std::invalid_argument("poly_parse: expected + or -");
            ++i;
            skip_ws();
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
            skip_ws();
        }
        long long coeff = 1;
        bool have_digits = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = coeff * 10 + (text[i] - '0');
                if (coeff > (1LL << 40)) throw std::invalid_argument("poly_parse: coefficient too large");
                ++i;
            }
            have_digits = true;
        }
        int exponent = 0;
        skip_ws();
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            while (i < text.size() && (text[i] == '*' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("poly_parse: missing exponent");
                exponent = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    exponent = exponent * 10 + (text[i] - '0');
                    if (exponent > 4096) throw std::invalid_argument("poly_parse: exponent too large");
                    ++i;
                }
            } else {
                exponent = 1;
            }
        } else if (!have_digits) {
            throw std::invalid_argument("poly_parse: expected a term");
        }
        if (static_cast<int>(out.size()) <= exponent) out.resize(static_cast<std::size_t>(exponent) + 1, 0);
        out[static_cast<std::size_t>(exponent)] =
            field.reduce(out[static_cast<std::size_t>(exponent)] + sign * coeff);
        sign = 1;
        expect_term = false;
        skip_ws();
        if (i < text.size() && text[i] != '+' && text[i] != '-')
            throw std::invalid_argument("poly_parse: unexpected character");
    }
    return poly_normalize(std::move(out), p);
}

std::string poly_print(const Poly& a) {
    if (a.empty()) return "0";
    std::string s;
    for (int d = poly_degree(a); d >= 0; --d) {
        int c = a[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (c != 1 || d == 0) s += std::to_string(c);
        if (d >= 1) {
            s += "x";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

Poly poly_add(const Poly& a, const Poly& b, int p) {
    Fp field{p};
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        out[i] = field.add(x, y);
    }
    return poly_normalize(std::move(out), p);
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Fp field{p};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = field.reduce(out[i + j] + static_cast<long long>(a[i]) * b[j]);
    return poly_normalize(std::move(out), p);
}

Poly poly_mod(Poly a, const Poly& b, int p) {
    if (b.empty()) throw std::domain_error("poly_mod: division by zero polynomial");
    Fp field{p};
    a = poly_normalize(std::move(a), p);
    int db = poly_degree(b);
    int lead_inv = field.inv(b.back());
    while (poly_degree(a) >= db) {
        int da = poly_degree(a);
        int factor = field.mul(a.back(), lead_inv);
        for (int i = 0; i <= db; ++i) {
            auto& slot = a[static_cast<std::size_t>(da - db + i)];
            slot = field.sub(slot, field.mul(factor, b[static_cast<std::size_t>(i)]));
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    Fp field{p};
    a = poly_normalize(std::move(a), p);
    b = poly_normalize(std::move(b), p);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int inv = field.inv(a.back());
        for (auto& c : a) c = field.mul(c, inv);
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& v, int p) {
    if (d.empty()) return poly_normalize(v, p).empty();
    return poly_mod(v, d, p).empty();
}

Element<NatMonoid> poly_to_element(const Poly& a, int p) {
    Element<NatMonoid> v(0, 1, p);
    for (std::size_t i = 0; i < a.size(); ++i)
        v.add_term(Mono<NatMonoid>{static_cast<int>(i), 1}, a[i]);
    return v;
}

Poly element_to_poly(const Element<NatMonoid>& v) {
    Poly out(static_cast<std::size_t>(v.level()) + 1, 0);
    if (v.zero()) return {};
    for (const auto& [m, c] : v.terms()) out[static_cast<std::size_t>(m.mor)] = c;
    return poly_normalize(std::move(out), v.prime());
}

} // namespace gcat
