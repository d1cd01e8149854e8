#ifndef VTWIST_IRREDUCIBLE_HPP
#define VTWIST_IRREDUCIBLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vtwist/bipoly.hpp"
#include "vtwist/factor.hpp"
#include "vtwist/ratfunc.hpp"

namespace vtwist {

/// Outcome of the factor search for a monic chi in Q[x][t] over the field Q(x).
struct FunctionFieldFactorSearch {
    bool squarefree = true;
    bool irreducible = true;
    /// A monic proper factor in Q[x][t] when reducible.
    std::optional<BiPoly> factor;
    /// Human-readable account of how the verdict was reached.
    std::string witness;
};

/// Upper bound on candidate combinations enumerated per factor degree.
inline constexpr std::uint64_t max_bivariate_combinations = 2'000'000;

namespace detail {

// All monic divisors of exact degree d of a squarefree rational polynomial, given its irreducible factors.
inline std::vector<UniPoly> monic_divisors_of_degree(const std::vector<UniPoly>& irreducibles, int d) {
    std::vector<UniPoly> out;
    const std::size_t n = irreducibles.size();
    std::vector<std::size_t> pick;
    // depth-first over subsets in index order
    auto rec = [&](auto&& self, std::size_t start, int remaining, const UniPoly& acc) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            const int di = irreducibles[i].degree();
            if (di <= remaining) self(self, i + 1, remaining - di, acc * irreducibles[i]);
        }
    };
    rec(rec, 0, d, UniPoly(1));
    return out;
}

// Sample base points 0, 1, -1, 2, -2, ..., then halves.
inline Rational sample_point(int i) {
    const int half = (i + 1) / 2;
    Rational u(i % 2 ? half : -half);
    if (i >= 60) u /= 2;
    return u;
}

}  // namespace detail

/*
 * Decides whether a monic chi in Q[x][t] is irreducible over Q(x).
 *
 * Squarefreeness is tested by gcd(chi, d chi/dt) over Q(x). For a squarefree
 * chi, a monic factor of t-degree d has (by Gauss's lemma) coefficients in
 * Q[x] and the coefficient of t^(d-k) has x-degree at most floor(k*w), where
 * w = max_k deg(c_k)/k over the coefficients c_k of t^(r-k). Such a factor
 * specializes at every base point to a degree-d monic divisor of chi(x0, t),
 * so enumerating divisor choices at B+1 base points and interpolating finds
 * it. An empty candidate set at any base point rules out degree d.
 */
inline FunctionFieldFactorSearch factor_search_over_function_field(const BiPoly& chi) {
    if (chi.degree() < 1 || !chi.is_monic())
        throw ValidationError("irreducibility test requires a polynomial monic in t of degree >= 1");
    FunctionFieldFactorSearch res;
    const int r = chi.degree();
    if (r == 1) {
        res.witness = "degree one in t";
        return res;
    }

    const FunctionFieldPoly f = to_function_field(chi);
    const FunctionFieldPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) {
        res.squarefree = false;
        res.irreducible = false;
        res.factor = to_polynomial_coefficients(g);
        res.witness = "gcd with the t-derivative has t-degree " + std::to_string(g.degree());
        return res;
    }

    // w = max deg(c_k)/k as a rational; bounds B_k = floor(k w).
    Rational w = 0;
    for (int k = 1; k <= r; ++k) {
        const int dk = chi.coeffs()[static_cast<std::size_t>(r - k)].degree();
        if (dk >= 0) w = std::max(w, make_rational(dk, k));
    }
    auto bound = [&](int k) { return static_cast<int>(floor_of(Rational(k * w)).get_si()); };

    for (int d = 1; 2 * d <= r; ++d) {
        const int needed = bound(d) + 1;
        struct Sample {
            Rational x0;
            std::vector<UniPoly> candidates;
        };
        std::vector<Sample> samples;
        bool excluded = false;
        for (int i = 0; static_cast<int>(samples.size()) < needed + 4 && i < 400; ++i) {
            const Rational x0 = detail::sample_point(i);
            const UniPoly fiber_poly = specialize_x(chi, x0);
            if (gcd(fiber_poly, fiber_poly.derivative()).degree() > 0) continue;  // discriminant vanishes here
            std::vector<UniPoly> irr;
            for (const auto& [p, m] : factor_rationals(fiber_poly).factors) irr.push_back(p);
            std::vector<UniPoly> cands = detail::monic_divisors_of_degree(irr, d);
            if (cands.empty()) {
                res.witness += (res.witness.empty() ? "" : "; ") + std::string("no degree-") + std::to_string(d) +
                               " divisor of chi(" + x0.get_str() + ", t)";
                excluded = true;
                break;
            }
            samples.push_back({x0, std::move(cands)});
        }
        if (excluded) continue;
        if (static_cast<int>(samples.size()) < needed)
            throw LimitError("factor search: not enough base points with squarefree fiber");
        std::stable_sort(samples.begin(), samples.end(),
                         [](const Sample& a, const Sample& b) { return a.candidates.size() < b.candidates.size(); });
        samples.resize(static_cast<std::size_t>(needed));

        std::uint64_t combos = 1;
        for (const Sample& s : samples) {
            combos *= s.candidates.size();
            if (combos > max_bivariate_combinations)
                throw LimitError("factor search exceeds the combination budget");
        }

        std::vector<Rational> nodes;
        for (const Sample& s : samples) nodes.push_back(s.x0);
        std::vector<std::size_t> idx(samples.size(), 0);
        for (;;) {
            // Interpolate each coefficient of t^(d-k) from the chosen specializations.
            std::vector<UniPoly> coeffs(static_cast<std::size_t>(d) + 1);
            coeffs[static_cast<std::size_t>(d)] = UniPoly(1);
            bool within = true;
            for (int k = 1; k <= d && within; ++k) {
                std::vector<Rational> values;
                for (std::size_t j = 0; j < samples.size(); ++j)
                    values.push_back(samples[j].candidates[idx[j]].coeff(static_cast<std::size_t>(d - k)));
                UniPoly ck = interpolate(nodes, values);
                if (ck.degree() > bound(k)) within = false;
                coeffs[static_cast<std::size_t>(d - k)] = std::move(ck);
            }
            if (within) {
                const BiPoly cand(std::move(coeffs));
                if (divides(cand, chi)) {
                    res.irreducible = false;
                    res.factor = cand;
                    res.witness = "factor of t-degree " + std::to_string(d) + " found by interpolation";
                    return res;
                }
            }
            std::size_t j = 0;
            while (j < idx.size() && ++idx[j] == samples[j].candidates.size()) idx[j++] = 0;
            if (j == idx.size()) break;
        }
        res.witness += (res.witness.empty() ? "" : "; ") + std::string("degree-") + std::to_string(d) +
                       " search exhausted over " + std::to_string(combos) + " combinations";
    }
    return res;
}

/// True iff chi (monic in t) is irreducible over Q(x).
inline bool irreducible_over_function_field(const BiPoly& chi) {
    return factor_search_over_function_field(chi).irreducible;
}

}  // namespace vtwist

#endif  // VTWIST_IRREDUCIBLE_HPP
