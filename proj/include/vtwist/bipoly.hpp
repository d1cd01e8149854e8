#ifndef VTWIST_BIPOLY_HPP
#define VTWIST_BIPOLY_HPP

#include <algorithm>

#include "vtwist/number_field.hpp"
#include "vtwist/poly.hpp"
#include "vtwist/ratfunc.hpp"

namespace vtwist {

/// chi(x0, t) as a polynomial in t.
inline UniPoly specialize_x(const BiPoly& f, const Rational& x0) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const UniPoly& k : f.coeffs()) c.push_back(k(x0));
    return UniPoly(std::move(c));
}

/// Substitutes t = y for y in a number field, at base point x0.
inline NumberFieldElement evaluate_at(const BiPoly& f, const Rational& x0, const NumberFieldElement& y) {
    return specialize_x(f, x0)(y);
}

/// Largest x-degree among the t-coefficients; -1 for the zero polynomial.
inline int x_degree(const BiPoly& f) {
    int d = -1;
    for (const UniPoly& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

/// Polynomial in x viewed as a constant in t.
inline BiPoly constant_in_t(const UniPoly& p) { return BiPoly(p); }

inline BiPoly t_variable() { return BiPoly::variable(); }

/// Remainder of f modulo a polynomial g that is monic in t.
inline BiPoly reduce_mod(const BiPoly& f, const BiPoly& g) {
    if (!g.is_monic()) throw DomainError("reduction modulo a polynomial that is not monic in t");
    return f % g;
}

/// Multiplies every coefficient by a rational.
inline BiPoly scale(const BiPoly& f, const Rational& s) {
    return f.map([&](const UniPoly& c) { return UniPoly(c * UniPoly(s)); });
}

}  // namespace vtwist

#endif  // VTWIST_BIPOLY_HPP
