#ifndef VTWIST_HECKE_HPP
#define VTWIST_HECKE_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vtwist/matrix.hpp"
#include "vtwist/poly.hpp"
#include "vtwist/projective_line.hpp"

// A Hecke presentation 0 -> V -> O(a) + O(b) -> T -> 0 with T a skyscraper of
// length one at each marked point x_i. In chart trivializations the fiber map
// is (s, l) |-> l - lambda_i * s, so V = {(f, g) : g(x_i) = lambda_i f(x_i)}.

namespace vtwist {

struct HeckePoint {
    Rational x;
    Rational lambda;
    friend bool operator==(const HeckePoint&, const HeckePoint&) = default;
};

struct HeckeData {
    int a = 0;  // degree of the first summand
    int b = 0;  // degree of the second summand
    std::vector<HeckePoint> points;

    std::size_t length() const noexcept { return points.size(); }
    friend bool operator==(const HeckeData&, const HeckeData&) = default;
};

struct SplittingType {
    int c = 0;
    int d = 0;
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct HeckeReport {
    std::vector<std::string> problems;
    bool ok() const noexcept { return problems.empty(); }
};

inline HeckeReport validate(const HeckeData& h) {
    HeckeReport rep;
    for (std::size_t i = 0; i < h.points.size(); ++i) {
        if (sgn(h.points[i].lambda) == 0)
            rep.problems.push_back("zero lambda at x = " + to_string(h.points[i].x));
        for (std::size_t j = 0; j < i; ++j)
            if (h.points[j].x == h.points[i].x) rep.problems.push_back("duplicate point x = " + to_string(h.points[i].x));
    }
    return rep;
}

inline void require_valid(const HeckeData& h) {
    const HeckeReport rep = validate(h);
    if (rep.ok()) return;
    std::string msg = "invalid Hecke data:";
    for (const std::string& p : rep.problems) msg += " " + p + ";";
    throw ValidationError(msg);
}

inline int degree_of_V(const HeckeData& h) { return h.a + h.b - static_cast<int>(h.length()); }

inline Rational rho(const HeckeData& h, std::size_t i) {
    if (i >= h.length()) throw DomainError("Hecke point index " + std::to_string(i) + " out of range");
    return h.points[i].lambda;
}

/// dim H^0(V(n)) as the kernel dimension of the fiber conditions on sections of O(a+n) + O(b+n).
inline int h0_of_twist(const HeckeData& h, int n) {
    const int nf = h0(h.a + n), ng = h0(h.b + n);
    if (nf + ng == 0) return 0;
    if (h.points.empty()) return nf + ng;
    Matrix<Rational> cond(h.length(), static_cast<std::size_t>(nf + ng));
    for (std::size_t i = 0; i < h.length(); ++i) {
        const HeckePoint& p = h.points[i];
        Rational pw = 1;
        for (int k = 0; k < std::max(nf, ng); ++k) {
            if (k < nf) cond(i, static_cast<std::size_t>(k)) = -p.lambda * pw;
            if (k < ng) cond(i, static_cast<std::size_t>(nf + k)) = pw;
            pw *= p.x;
        }
    }
    return nf + ng - static_cast<int>(rank(cond));
}

/// h0(O(c+n)) + h0(O(d+n)).
inline int expected_h0(const SplittingType& s, int n) { return h0(s.c + n) + h0(s.d + n); }

/// Grothendieck splitting V = O(c) + O(d), c >= d, recovered from the first nonzero h0(V(-m)).
inline SplittingType splitting_type(const HeckeData& h) {
    require_valid(h);
    const int deg = degree_of_V(h);
    const int top = std::max(h.a, h.b);
    // c <= max(a, b) since V sits inside O(a) + O(b); c >= deg/2 since c >= d.
    int c = top;
    while (h0_of_twist(h, -c) == 0) {
        --c;
        if (2 * c < deg - 1) throw InconsistencyError("no nonzero twist of V found above the balanced bound");
    }
    const SplittingType s{c, deg - c};
    if (s.c < s.d) throw InconsistencyError("recovered splitting type is not ordered");
    for (int n = -(top + 2); n <= 2; ++n)
        if (h0_of_twist(h, n) != expected_h0(s, n))
            throw InconsistencyError("h0 of V(" + std::to_string(n) + ") disagrees with the splitting type");
    return s;
}

/// Attempt budget for make_presentation before giving up on generic choices.
inline constexpr int max_presentation_attempts = 400;

/*
 * Builds Hecke data whose kernel bundle splits as O(c) + O(d), using ell
 * points drawn from `pool`. Summand degrees a + b = c + d + ell are scanned
 * from balanced outward. The scalars are lambda_i = sigma(x_i) for a random
 * sigma of prescribed degree: the graph {(f, sigma f)} is then a subsheaf
 * O(min(a, b - deg sigma)) of V, which steers the top summand. Every
 * candidate is certified by splitting_type.
 */
inline HeckeData make_presentation(int c, int d, int ell, const std::vector<Rational>& pool, std::uint64_t seed) {
    if (c < d) throw ValidationError("make_presentation requires c >= d");
    if (ell < 1) throw ValidationError("make_presentation requires at least one point");
    if (ell <= c - d - 2) throw ValidationError("make_presentation requires ell > c - d - 2");
    std::vector<Rational> distinct;
    {
        std::set<Rational> seen;
        for (const Rational& q : pool)
            if (seen.insert(q).second) distinct.push_back(q);
    }
    if (static_cast<int>(distinct.size()) < ell) throw ValidationError("point pool has fewer distinct entries than ell");

    std::mt19937_64 rng(seed);
    std::vector<Rational> xs;
    std::sample(distinct.begin(), distinct.end(), std::back_inserter(xs), ell, rng);

    const int total = c + d + ell;
    const int spread_limit = (c - d) + ell + 2;
    std::vector<std::pair<int, int>> shapes;  // (a, b)
    for (int spread = 0; spread <= spread_limit; ++spread) {
        if ((total - spread) % 2 != 0) continue;
        const int lo = (total - spread) / 2;
        shapes.emplace_back(lo + spread, lo);
        if (spread > 0) shapes.emplace_back(lo, lo + spread);
    }

    std::uniform_int_distribution<int> coeff(-3, 3);
    int attempts = 0;
    for (const auto& [a, b] : shapes) {
        for (int s = ell - 1; s >= 0; --s) {
            for (int rep = 0; rep < 2; ++rep) {
                if (++attempts > max_presentation_attempts)
                    throw RetryExhaustedError("make_presentation: attempt budget exhausted for (c,d) = (" +
                                              std::to_string(c) + "," + std::to_string(d) + ")");
                std::vector<Rational> sc(static_cast<std::size_t>(s) + 1);
                for (auto& q : sc) q = coeff(rng);
                while (sgn(sc.back()) == 0) sc.back() = coeff(rng);
                const UniPoly sigma(std::move(sc));
                HeckeData h{a, b, {}};
                bool ok = true;
                for (const Rational& x : xs) {
                    const Rational lam = sigma(x);
                    if (sgn(lam) == 0) {
                        ok = false;
                        break;
                    }
                    h.points.push_back({x, lam});
                }
                if (ok && splitting_type(h) == SplittingType{c, d}) return h;
            }
        }
    }
    throw RetryExhaustedError("make_presentation: no presentation found for (c,d) = (" + std::to_string(c) + "," +
                              std::to_string(d) + ") with ell = " + std::to_string(ell));
}

}  // namespace vtwist

#endif  // VTWIST_HECKE_HPP
