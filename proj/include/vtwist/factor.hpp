#ifndef VTWIST_FACTOR_HPP
#define VTWIST_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vtwist/poly.hpp"

namespace vtwist {

namespace detail {

inline Integer abs_integer(const Integer& n) { return n < 0 ? Integer(-n) : n; }

// Pollard rho (Floyd cycle detection); n odd composite.
inline Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = integer_gcd(abs_integer(Integer(x - y)), n);
        }
        if (d != n) return d;
    }
}

inline void factor_integer_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    static constexpr unsigned long small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                     41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned long p : small_primes) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    const Integer d = pollard_rho(n);
    factor_integer_into(d, out);
    factor_integer_into(Integer(n / d), out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0) as prime -> exponent.
inline std::map<Integer, int> factor_integer(const Integer& n) {
    if (n == 0) throw DomainError("factorization of zero");
    std::map<Integer, int> out;
    detail::factor_integer_into(detail::abs_integer(n), out);
    return out;
}

/// Positive divisors of |n| (n != 0), ascending.
inline std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline std::size_t divisor_count(const Integer& n) {
    std::size_t count = 1;
    for (const auto& [p, e] : factor_integer(n)) count *= static_cast<std::size_t>(e + 1);
    return count;
}

/// p / gcd(p, p'), made monic.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of zero polynomial");
    return monic(p / gcd(p, p.derivative()));
}

/// Yun's squarefree decomposition: monic pairwise coprime squarefree a_i with p = lc * prod a_i^i.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    const UniPoly f = monic(p);
    if (f.degree() == 0) return out;
    const UniPoly df = f.derivative();
    const UniPoly a0 = gcd(f, df);
    UniPoly b = f / a0, c = df / a0;
    UniPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly a = gcd(b, d);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(a, i);
    }
    return out;
}

/// Distinct rational roots of p (p != 0), ascending.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("roots of zero polynomial");
    std::vector<Rational> roots;
    UniPoly g = primitive_integer(squarefree_part(p));
    if (g.degree() <= 0) return roots;
    if (sgn(g.coeff(0)) == 0) {
        roots.push_back(Rational(0));
        g = g / UniPoly::variable();
        if (g.degree() <= 0) return roots;
    }
    // Cauchy bound on root magnitude.
    Rational bound = 0;
    for (int k = 0; k < g.degree(); ++k) bound = std::max(bound, Rational(abs(g.coeff(k)) / abs(g.lead())));
    bound += 1;
    const std::vector<Integer> nums = positive_divisors(g.coeff(0).get_num());
    const std::vector<Integer> dens = positive_divisors(g.lead().get_num());
    for (const Integer& q : dens)
        for (const Integer& pn : nums) {
            if (integer_gcd(pn, q) != 1) continue;
            Rational cand(pn, q);
            cand.canonicalize();
            if (cand > bound) break;
            for (int s : {1, -1}) {
                Rational r = s * cand;
                if (sgn(g(r)) == 0) roots.push_back(r);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// p = content * prod factors[i].first ^ factors[i].second with monic irreducible factors.
struct Factorization {
    Rational content;
    std::vector<std::pair<UniPoly, int>> factors;

    UniPoly expand() const {
        UniPoly out(content);
        for (const auto& [f, m] : factors) out *= pow(f, static_cast<unsigned>(m));
        return out;
    }
};

/// Largest squarefree component degree accepted by factor_rationals.
inline constexpr int max_factor_degree = 8;
/// Upper bound on Kronecker candidate combinations tried per factor degree.
inline constexpr std::uint64_t max_kronecker_combinations = 4'000'000;

namespace detail {

// Kronecker's method: search a factor of exact degree k of a primitive squarefree integer
// polynomial g by interpolating through divisors of g at k+1 integer nodes.
inline std::optional<UniPoly> kronecker_factor(const UniPoly& g, int k) {
    struct Node {
        Rational u;
        Integer value;
        std::size_t count;
    };
    std::vector<Node> nodes;
    const int want = k + 1;
    for (int i = 0; static_cast<int>(nodes.size()) < want + 6 && i < 8 * g.degree() + 40; ++i) {
        const Rational u(i % 2 ? (i + 1) / 2 : -(i / 2));
        const Rational v = g(u);
        if (sgn(v) == 0) continue;
        nodes.push_back({u, v.get_num(), divisor_count(v.get_num())});
    }
    if (static_cast<int>(nodes.size()) < want) throw LimitError("kronecker: not enough evaluation nodes");
    std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.count < b.count; });
    nodes.resize(static_cast<std::size_t>(want));

    std::vector<std::vector<Integer>> choices(nodes.size());
    std::uint64_t combos = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        for (const Integer& d : positive_divisors(nodes[j].value)) {
            choices[j].push_back(d);
            if (j > 0) choices[j].push_back(-d);  // overall sign fixed by the first node
        }
        combos *= choices[j].size();
        if (combos > max_kronecker_combinations)
            throw LimitError("kronecker: factor search exceeds combination budget");
    }

    // Lagrange basis polynomials at the chosen nodes.
    std::vector<UniPoly> basis(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        UniPoly b(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            b *= UniPoly(std::vector<Rational>{Rational(-nodes[j].u), Rational(1)});
            denom *= nodes[i].u - nodes[j].u;
        }
        basis[i] = b * UniPoly(Rational(1 / denom));
    }

    const Integer lead = g.lead().get_num();
    std::vector<std::size_t> idx(nodes.size(), 0);
    for (;;) {
        UniPoly h;
        for (std::size_t j = 0; j < nodes.size(); ++j) h += basis[j] * UniPoly(Rational(choices[j][idx[j]]));
        if (h.degree() == k) {
            bool integral = true;
            for (const Rational& c : h.coeffs()) integral = integral && is_integer(c);
            if (integral && mpz_divisible_p(lead.get_mpz_t(), h.lead().get_num_mpz_t()) && divides(h, g))
                return h;
        }
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
        if (j == idx.size()) return std::nullopt;
    }
}

// Irreducible monic factors of a monic squarefree rational polynomial.
inline std::vector<UniPoly> factor_squarefree(const UniPoly& f) {
    std::vector<UniPoly> out;
    UniPoly rest = f;
    for (const Rational& r : rational_roots(f)) {
        const UniPoly lin(std::vector<Rational>{Rational(-r), Rational(1)});
        out.push_back(lin);
        rest = rest / lin;
    }
    if (rest.degree() > max_factor_degree)
        throw LimitError("factor_rationals: squarefree component of degree above " +
                         std::to_string(max_factor_degree) + " without rational roots");
    UniPoly g = primitive_integer(rest);
    for (int k = 2; 2 * k <= g.degree(); ++k) {
        while (2 * k <= g.degree()) {
            std::optional<UniPoly> h = kronecker_factor(g, k);
            if (!h) break;
            out.push_back(monic(*h));
            g = primitive_integer(g / *h);
        }
    }
    if (g.degree() > 0) out.push_back(monic(g));
    return out;
}

}  // namespace detail

/// Complete factorization over the rationals into monic irreducible factors.
inline Factorization factor_rationals(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("factorization of zero polynomial");
    Factorization result{p.lead(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(p))
        for (UniPoly& f : detail::factor_squarefree(part)) result.factors.emplace_back(std::move(f), mult);
    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return result;
}

inline bool is_irreducible(const UniPoly& p) {
    if (p.degree() <= 0) return false;
    const Factorization f = factor_rationals(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace vtwist

#endif  // VTWIST_FACTOR_HPP
