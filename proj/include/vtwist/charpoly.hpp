#ifndef VTWIST_CHARPOLY_HPP
#define VTWIST_CHARPOLY_HPP

#include <vector>

#include "vtwist/matrix.hpp"
#include "vtwist/number_field.hpp"
#include "vtwist/poly.hpp"

namespace vtwist {

/*
 * Characteristic polynomial det(tI - M) by Faddeev-LeVerrier:
 *   N_1 = I,  c_{r-k} = -tr(M N_k) / k,  N_{k+1} = M N_k + c_{r-k} I.
 * Only division by small integers is needed, so the recursion stays inside
 * the coefficient ring for any Q-algebra R (Q, Q[x], number fields).
 */
template <class R>
Poly<R> faddeev_leverrier(const Matrix<R>& m) {
    if (!m.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
    const std::size_t r = m.rows();
    std::vector<R> c(r + 1);
    c[r] = R(1);
    Matrix<R> n = Matrix<R>::identity(r);
    for (std::size_t k = 1; k <= r; ++k) {
        const Matrix<R> mn = m * n;
        c[r - k] = R(-(mn.trace() * R(Rational(1, static_cast<unsigned long>(k)))));
        if (k < r) n = mn + Matrix<R>::scalar(r, c[r - k]);
    }
    return Poly<R>(std::move(c));
}

/// det(tI - M) for a matrix over Q[x], as a polynomial in t monic of degree r.
inline BiPoly char_poly(const Matrix<UniPoly>& m) { return faddeev_leverrier(m); }

inline UniPoly char_poly(const Matrix<Rational>& m) { return faddeev_leverrier(m); }

/// Evaluates a polynomial at a square matrix (Horner).
template <class R>
Matrix<R> evaluate_at_matrix(const Poly<R>& p, const Matrix<R>& m) {
    Matrix<R> acc(m.rows(), m.cols());
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * m + Matrix<R>::scalar(m.rows(), p.coeffs()[k]);
    return acc;
}

/// True iff M^r = 0 for the r x r matrix M.
template <class T>
bool nilpotency_test(const Matrix<T>& m) {
    if (!m.is_square()) throw DomainError("nilpotency test of a non-square matrix");
    return power(m, static_cast<unsigned>(m.rows())).is_zero();
}

/// Basis (column vectors) of ker (M - yI)^r.
template <class T>
std::vector<std::vector<T>> generalized_eigenspace(const Matrix<T>& m, const T& y) {
    if (!m.is_square()) throw DomainError("eigenspace of a non-square matrix");
    const Matrix<T> shifted = m - Matrix<T>::scalar(m.rows(), y);
    return kernel_basis(power(shifted, static_cast<unsigned>(m.rows())));
}

/*
 * Matrix of the restriction of A to the subspace spanned by the columns of
 * `basis`, i.e. the R with A * B = B * R. Empty optional when the subspace
 * is not A-invariant.
 */
template <class T>
std::optional<Matrix<T>> restrict_to_subspace(const Matrix<T>& a, const std::vector<std::vector<T>>& basis) {
    const std::size_t n = a.rows(), k = basis.size();
    const Matrix<T> b = Matrix<T>::from_columns(basis, n);
    const Matrix<T> ab = a * b;
    Matrix<T> r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        std::optional<std::vector<T>> col = solve(b, ab.column(j));
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < k; ++i) r(i, j) = (*col)[i];
    }
    return r;
}

}  // namespace vtwist

#endif  // VTWIST_CHARPOLY_HPP
