#ifndef VTWIST_NUMBER_FIELD_HPP
#define VTWIST_NUMBER_FIELD_HPP

#include <memory>
#include <utility>

#include "vtwist/factor.hpp"
#include "vtwist/poly.hpp"

namespace vtwist {

/// Q[t]/(m) for a monic irreducible m. No embeddings are modelled.
class NumberField {
   public:
    /// Validates that the polynomial is monic and irreducible over the rationals.
    explicit NumberField(UniPoly minimal_polynomial) : minpoly_(std::move(minimal_polynomial)) {
        if (!minpoly_.is_monic()) throw ValidationError("minimal polynomial must be monic");
        if (!is_irreducible(minpoly_)) throw ValidationError("minimal polynomial must be irreducible");
    }

    /// Skips the irreducibility check; the caller obtained m from factor_rationals.
    static std::shared_ptr<const NumberField> from_irreducible_factor(UniPoly m) {
        return std::shared_ptr<const NumberField>(new NumberField(std::move(m), trusted{}));
    }
    static std::shared_ptr<const NumberField> make(UniPoly m) {
        return std::make_shared<const NumberField>(std::move(m));
    }

    const UniPoly& minimal_polynomial() const noexcept { return minpoly_; }
    int degree() const noexcept { return minpoly_.degree(); }

    friend bool operator==(const NumberField& a, const NumberField& b) { return a.minpoly_ == b.minpoly_; }

   private:
    struct trusted {};
    NumberField(UniPoly m, trusted) : minpoly_(std::move(m)) {}

    UniPoly minpoly_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

/*
 * Residue class of a rational polynomial modulo the minimal polynomial.
 * An element without a field is a rational number; it combines with
 * elements of any field through the canonical embedding of Q.
 */
class NumberFieldElement {
   public:
    NumberFieldElement() = default;
    NumberFieldElement(int v) : rep_(v) {}
    NumberFieldElement(const Rational& q) : rep_(q) {}
    NumberFieldElement(NumberFieldPtr field, const UniPoly& representative)
        : field_(std::move(field)), rep_(field_ ? representative % field_->minimal_polynomial() : representative) {
        if (!field_ && rep_.degree() > 0) throw DomainError("non-constant representative without a field");
    }

    /// The class of t in Q[t]/(m).
    static NumberFieldElement generator(NumberFieldPtr field) {
        return NumberFieldElement(std::move(field), UniPoly::variable());
    }

    const NumberFieldPtr& field() const noexcept { return field_; }
    const UniPoly& representative() const noexcept { return rep_; }
    bool is_rational() const noexcept { return rep_.degree() <= 0; }
    bool is_zero() const noexcept { return rep_.is_zero(); }

    /// Trace from the field down to Q (the element itself for rational elements).
    Rational trace() const {
        if (!field_) return rep_.coeff(0);
        const UniPoly& m = field_->minimal_polynomial();
        Rational tr = 0;
        UniPoly basis(1);
        for (int k = 0; k < m.degree(); ++k) {
            tr += ((rep_ * basis) % m).coeff(static_cast<std::size_t>(k));
            basis = (basis * UniPoly::variable()) % m;
        }
        return tr;
    }

    NumberFieldElement inverse() const {
        if (rep_.is_zero()) throw DivisionByZero("inverse of zero number field element");
        if (!field_) return NumberFieldElement(invert_unit(rep_.lead()));
        auto [g, s, u] = xgcd(rep_, field_->minimal_polynomial());
        if (g.degree() != 0) throw InconsistencyError("element not invertible; minimal polynomial reducible");
        return NumberFieldElement(field_, s);
    }

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        return {common(a, b), a.rep_ + b.rep_};
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        return {common(a, b), a.rep_ - b.rep_};
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a) { return {a.field_, -a.rep_}; }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        return {common(a, b), a.rep_ * b.rep_};
    }
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a * b.inverse();
    }
    NumberFieldElement& operator+=(const NumberFieldElement& o) { return *this = *this + o; }
    NumberFieldElement& operator-=(const NumberFieldElement& o) { return *this = *this - o; }
    NumberFieldElement& operator*=(const NumberFieldElement& o) { return *this = *this * o; }

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        if (a.is_rational() && b.is_rational()) return a.rep_ == b.rep_;
        common(a, b);
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) { return !(a == b); }

   private:
    static NumberFieldPtr common(const NumberFieldElement& a, const NumberFieldElement& b) {
        if (!a.field_) return b.field_;
        if (!b.field_ || a.field_ == b.field_ || *a.field_ == *b.field_) return a.field_;
        throw DomainError("arithmetic across different number fields");
    }

    NumberFieldPtr field_;
    UniPoly rep_;
};

inline NumberFieldElement invert_unit(const NumberFieldElement& e) { return e.inverse(); }

inline bool is_zero(const NumberFieldElement& e) { return e.is_zero(); }

}  // namespace vtwist

#endif  // VTWIST_NUMBER_FIELD_HPP
