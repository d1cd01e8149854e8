#ifndef VTWIST_RATFUNC_HPP
#define VTWIST_RATFUNC_HPP

#include <utility>

#include "vtwist/poly.hpp"

namespace vtwist {

/// Element of the rational function field Q(x), kept as num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
   public:
    RationalFunction() : den_(1) {}
    RationalFunction(int v) : num_(v), den_(1) {}
    RationalFunction(const Rational& q) : num_(q), den_(1) {}
    RationalFunction(UniPoly p) : num_(std::move(p)), den_(1) {}
    RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const UniPoly& numerator() const noexcept { return num_; }
    const UniPoly& denominator() const noexcept { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }

    /// Value at x0; throws DivisionByZero at a pole.
    Rational operator()(const Rational& x0) const {
        Rational d = den_(x0);
        if (sgn(d) == 0) throw DivisionByZero("rational function evaluated at a pole");
        return num_(x0) / d;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return {};
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw DivisionByZero("division by zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

   private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        if (den_.degree() > 0) {
            UniPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        const Rational lc = den_.lead();
        if (lc != 1) {
            const UniPoly s(Rational(1 / lc));
            num_ *= s;
            den_ *= s;
        }
    }

    UniPoly num_, den_;
};

inline RationalFunction invert_unit(const RationalFunction& f) { return RationalFunction(1) / f; }

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

/// Polynomial in t over Q(x).
using FunctionFieldPoly = Poly<RationalFunction>;

inline FunctionFieldPoly to_function_field(const BiPoly& f) {
    return f.map([](const UniPoly& c) { return RationalFunction(c); });
}

/// Inverse of to_function_field; every coefficient must be a polynomial.
inline BiPoly to_polynomial_coefficients(const FunctionFieldPoly& f) {
    return f.map([](const RationalFunction& c) {
        if (!c.is_polynomial()) throw InconsistencyError("expected polynomial coefficients");
        return UniPoly(c.numerator() * UniPoly(Rational(1 / c.denominator().lead())));
    });
}

}  // namespace vtwist

#endif  // VTWIST_RATFUNC_HPP
