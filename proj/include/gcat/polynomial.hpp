#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcat/category.hpp"
#include "gcat/element.hpp"

namespace gcat {

/// Dense univariate polynomial over F_p: coefficient of x^i at position i,
/// normalized with no trailing zeros (the zero polynomial is empty).
using Poly = std::vector<int>;

Poly poly_normalize(Poly a, int p);
int poly_degree(const Poly& a); // -1 for the zero polynomial

/// Parses forms like "x^3+2x+1", "1", "x", "4x^2".  Coefficients are reduced
/// mod p.  Throws std::invalid_argument on malformed input.
Poly poly_parse(std::string_view text, int p);

std::string poly_print(const Poly& a);

Poly poly_add(const Poly& a, const Poly& b, int p);
Poly poly_mul(const Poly& a, const Poly& b, int p);
Poly poly_mod(Poly a, const Poly& b, int p);

/// Monic greatest common divisor by the Euclidean algorithm.
Poly poly_gcd(Poly a, Poly b, int p);

bool poly_divides(const Poly& d, const Poly& v, int p);

Element<NatMonoid> poly_to_element(const Poly& a, int p);
Poly element_to_poly(const Element<NatMonoid>& v);

} // namespace gcat
