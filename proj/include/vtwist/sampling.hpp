#ifndef VTWIST_SAMPLING_HPP
#define VTWIST_SAMPLING_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "vtwist/hecke.hpp"
#include "vtwist/higgs.hpp"
#include "vtwist/spectral.hpp"

// Seeded generators of random admissible instances for self-tests.

namespace vtwist {

struct InstanceLimits {
    int max_rank = 3;
    int min_twist = 0;
    int max_twist = 3;
    int max_points = 3;
    int max_budget = 2;
};

namespace detail {

inline Rational random_nonzero_scalar(std::mt19937_64& rng) {
    static const Rational choices[] = {Rational(1), Rational(-1), Rational(2), Rational(-2),
                                       Rational(3), Rational(-3), Rational(1, 2), Rational(-3, 2)};
    return choices[std::uniform_int_distribution<std::size_t>(0, std::size(choices) - 1)(rng)];
}

inline std::vector<Rational> random_points(std::mt19937_64& rng, int ell) {
    std::vector<Rational> pool = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2)};
    std::vector<Rational> xs;
    std::sample(pool.begin(), pool.end(), std::back_inserter(xs), ell, rng);
    return xs;
}

}  // namespace detail

inline HeckeData random_hecke(std::mt19937_64& rng, const InstanceLimits& lim) {
    std::uniform_int_distribution<int> twist(lim.min_twist, lim.max_twist);
    HeckeData h{twist(rng), twist(rng), {}};
    const int ell = std::uniform_int_distribution<int>(0, lim.max_points)(rng);
    const bool equal = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
    const Rational common = detail::random_nonzero_scalar(rng);
    for (const Rational& x : detail::random_points(rng, ell))
        h.points.push_back({x, equal ? common : detail::random_nonzero_scalar(rng)});
    return h;
}

inline SplitBundle random_bundle(std::mt19937_64& rng, int r) {
    std::uniform_int_distribution<int> tw(-2, 1);
    std::vector<int> e(static_cast<std::size_t>(r));
    for (int& v : e) v = tw(rng);
    std::sort(e.begin(), e.end(), std::greater<>());
    return SplitBundle(std::move(e));
}

/// Random admissible field of rank <= max_rank; (H, E) are resampled until some budget is feasible.
inline VTwistedHiggsField random_instance(std::uint64_t seed, const InstanceLimits& lim = {}) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int r = std::uniform_int_distribution<int>(1, lim.max_rank)(rng);
        const HeckeData h = random_hecke(rng, lim);
        const SplitBundle e = random_bundle(rng, r);
        const auto budget = max_feasible_budget(h, e);
        if (!budget) continue;
        return random_valid_instance(h, e, std::min(*budget, lim.max_budget), rng());
    }
    throw RetryExhaustedError("random_instance: no feasible Hecke data / bundle combination");
}

/// Spectral data with integral chi and Hecke data it is compatible with.
struct SpectralInstance {
    SpectralData data;
    HeckeData hecke;
};

/*
 * chi is a random integral curve of rank r with twist a; psi = beta(x) t +
 * prod(x - x_i) gamma(x, t) satisfies psi(x_i, t) = lambda_i t, and b is the
 * least twist for which multiplication by psi fits the End(E)(b) bounds.
 */
inline SpectralInstance random_spectral_instance(std::uint64_t seed, int r, int a, int max_points = 2) {
    if (r < 1 || a < 0) throw ValidationError("random_spectral_instance requires r >= 1 and a >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_poly = [&](int deg) {
        std::vector<Rational> c(static_cast<std::size_t>(std::max(deg, -1) + 1));
        for (auto& q : c) q = coeff(rng);
        return UniPoly(std::move(c));
    };
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<UniPoly> cc(static_cast<std::size_t>(r) + 1);
        cc[static_cast<std::size_t>(r)] = UniPoly(1);
        for (int i = 1; i <= r; ++i) cc[static_cast<std::size_t>(r - i)] = random_poly(std::min(i * a, 3));
        const SpectralCurve curve(BiPoly(std::move(cc)), a);
        if (!is_integral(curve).integral) continue;

        HeckeData h{a, 0, {}};
        const int ell = std::uniform_int_distribution<int>(0, max_points)(rng);
        std::vector<Rational> xs = detail::random_points(rng, ell), ls;
        for (const Rational& x : xs) {
            ls.push_back(detail::random_nonzero_scalar(rng));
            h.points.push_back({x, ls.back()});
        }
        const UniPoly beta = ell ? interpolate(xs, ls) : random_poly(0);
        std::vector<UniPoly> gamma(static_cast<std::size_t>(r));
        for (auto& g : gamma) g = random_poly(1);
        const BiPoly psi = reduce_mod(BiPoly::monomial(beta, 1) + BiPoly(from_roots(xs)) * BiPoly(std::move(gamma)),
                                      curve.chi());

        const Matrix<UniPoly> mult = multiplication_matrix(psi, curve.chi());
        int b = -(1 << 20);
        for (std::size_t i = 0; i < mult.rows(); ++i)
            for (std::size_t j = 0; j < mult.cols(); ++j)
                if (!mult(i, j).is_zero())
                    b = std::max(b, mult(i, j).degree() - (static_cast<int>(j) - static_cast<int>(i)) * a);
        if (b == -(1 << 20)) b = 0;
        h.b = b;
        return {SpectralData(curve, psi, UniPoly(1), b), h};
    }
    throw RetryExhaustedError("random_spectral_instance: no integral curve found");
}

}  // namespace vtwist

#endif  // VTWIST_SAMPLING_HPP
