#ifndef VTWIST_POLY_HPP
#define VTWIST_POLY_HPP

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "vtwist/errors.hpp"
#include "vtwist/rational.hpp"

namespace vtwist {

/*
 * Dense univariate polynomial with coefficients in a commutative ring R,
 * stored by ascending degree. The zero polynomial has no coefficients and
 * the leading coefficient of any other polynomial is nonzero.
 *
 * R must be default-constructible to zero, constructible from int and
 * support + - * ==. Division routines additionally need invert_unit(R).
 */
template <class R>
class Poly {
   public:
    using coeff_type = R;

    Poly() = default;
    Poly(int v) {
        if (v != 0) c_.push_back(R(v));
    }
    Poly(const R& c) {
        if (!(c == R{})) c_.push_back(c);
    }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const R& c, std::size_t k) {
        if (c == R{}) return Poly();
        std::vector<R> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    /// The indeterminate itself.
    static Poly variable() { return monomial(R(1), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<R>& coeffs() const noexcept { return c_; }

    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R{}; }
    const R& lead() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == R(1); }

    /// Horner evaluation at a point of any ring S into which R embeds.
    template <class S>
    S operator()(const S& s) const {
        S acc{};
        for (std::size_t k = c_.size(); k-- > 0;) acc = S(acc * s + S(c_[k]));
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = R(c_[k] * R(static_cast<int>(k)));
        return Poly(std::move(d));
    }

    template <class F>
    auto map(F&& f) const -> Poly<decltype(f(std::declval<const R&>()))> {
        using U = decltype(f(std::declval<const R&>()));
        std::vector<U> v;
        v.reserve(c_.size());
        for (const R& c : c_) v.push_back(f(c));
        return Poly<U>(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (R& c : a.c_) c = R(-c);
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == R{}) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == R{}) c_.pop_back();
    }

    std::vector<R> c_;
};

using UniPoly = Poly<Rational>;
/// Polynomial in t whose coefficients are polynomials in x: index k holds the coefficient of t^k.
using BiPoly = Poly<UniPoly>;

/// A polynomial is a unit of the coefficient ring R[x] only when it is a nonzero constant unit.
template <class R>
Poly<R> invert_unit(const Poly<R>& p) {
    if (p.degree() != 0) throw DomainError("leading coefficient is not invertible");
    return Poly<R>(invert_unit(p.lead()));
}

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero();
}

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned e) {
    Poly<R> result(1), base = p;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

/// Division with remainder; the divisor's leading coefficient must be a unit of R.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<R>(), a};
    const R inv = invert_unit(b.lead());
    std::vector<R> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<R> quo(rem.size() - db);
    for (std::size_t k = quo.size(); k-- > 0;) {
        R q = R(rem[k + db] * inv);
        if (q == R{}) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
        quo[k] = std::move(q);
    }
    rem.resize(db);
    return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> operator/(const Poly<R>& a, const Poly<R>& b) {
    return divrem(a, b).first;
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
    return divrem(a, b).second;
}

template <class R>
bool divides(const Poly<R>& d, const Poly<R>& p) {
    return (p % d).is_zero();
}

/// Scales a nonzero polynomial over a field to leading coefficient one.
template <class R>
Poly<R> monic(const Poly<R>& p) {
    if (p.is_zero()) return p;
    return p * Poly<R>(invert_unit(p.lead()));
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        Poly<R> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Extended Euclid over a field: returns (g, s, u) with s*a + u*b = g, g monic.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> xgcd(const Poly<R>& a, const Poly<R>& b) {
    Poly<R> r0 = a, r1 = b, s0(1), s1, u0, u1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<R> s2 = s0 - q * s1, u2 = u0 - q * u1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {r0, s0, u0};
    const Poly<R> scale(invert_unit(r0.lead()));
    return {r0 * scale, s0 * scale, u0 * scale};
}

/// Product of (x - r) over the given roots.
template <class R>
Poly<R> from_roots(const std::vector<R>& roots) {
    Poly<R> p(1);
    for (const R& r : roots) p *= Poly<R>(std::vector<R>{R(-r), R(1)});
    return p;
}

/// Lagrange interpolation over a field through (nodes[i], values[i]); nodes pairwise distinct.
template <class R>
Poly<R> interpolate(const std::vector<R>& nodes, const std::vector<R>& values) {
    if (nodes.size() != values.size()) throw DomainError("interpolation: size mismatch");
    Poly<R> result;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (values[i] == R{}) continue;
        Poly<R> basis(1);
        R denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis *= Poly<R>(std::vector<R>{R(-nodes[j]), R(1)});
            denom *= R(nodes[i] - nodes[j]);
        }
        result += basis * Poly<R>(R(values[i] * invert_unit(denom)));
    }
    return result;
}

// Rational-coefficient helpers.

/// Least common multiple of the coefficient denominators.
inline Integer denominator_lcm(const UniPoly& p) {
    Integer l = 1;
    for (const Rational& c : p.coeffs()) l = integer_lcm(l, c.get_den());
    return l;
}

/// Positive primitive integer polynomial proportional to p (p != 0): gcd of coefficients 1, leading coefficient > 0.
inline UniPoly primitive_integer(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("primitive part of zero polynomial");
    const Integer l = denominator_lcm(p);
    Integer g = 0;
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const Rational& c : p.coeffs()) {
        Rational s = c * l;
        g = integer_gcd(g, s.get_num());
        v.push_back(s);
    }
    if (sgn(p.lead()) < 0) g = -g;
    for (Rational& c : v) c /= g;
    return UniPoly(std::move(v));
}

}  // namespace vtwist

#endif  // VTWIST_POLY_HPP
