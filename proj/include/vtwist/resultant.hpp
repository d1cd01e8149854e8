#ifndef VTWIST_RESULTANT_HPP
#define VTWIST_RESULTANT_HPP

#include "vtwist/matrix.hpp"
#include "vtwist/poly.hpp"
#include "vtwist/ratfunc.hpp"

namespace vtwist {

/*
 * Sylvester matrix of p (degree m) and q (degree n), size (m+n) x (m+n):
 * the first n rows hold shifted coefficient rows of p, the last m rows
 * shifted rows of q, coefficients listed from the top degree down.
 */
template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& p, const Poly<R>& q) {
    const int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) throw DomainError("sylvester matrix of a zero polynomial");
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix<R> s(size, size);
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            s(static_cast<std::size_t>(row), static_cast<std::size_t>(row + k)) = p.coeff(static_cast<std::size_t>(m - k));
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            s(static_cast<std::size_t>(n + row), static_cast<std::size_t>(row + k)) =
                q.coeff(static_cast<std::size_t>(n - k));
    return s;
}

/// Resultant over Q, equal to the Sylvester determinant; zero if exactly one argument is zero.
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero()) return 0;
    if (p.degree() + q.degree() == 0) return 1;
    return determinant(sylvester_matrix(p, q));
}

/// Resultant in t of two polynomials over Q[x]; the Sylvester determinant, a polynomial in x.
inline UniPoly resultant(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero()) return UniPoly();
    if (p.degree() + q.degree() == 0) return UniPoly(1);
    const Matrix<RationalFunction> s =
        sylvester_matrix(p, q).map([](const UniPoly& c) { return RationalFunction(c); });
    const RationalFunction det = determinant(s);
    if (!det.is_polynomial()) throw InconsistencyError("resultant over Q[x] is not a polynomial");
    return det.numerator();
}

/// Discriminant locus helper: Res_t(f, df/dt).
inline UniPoly t_discriminant_resultant(const BiPoly& f) { return resultant(f, f.derivative()); }

}  // namespace vtwist

#endif  // VTWIST_RESULTANT_HPP
