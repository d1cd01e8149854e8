#ifndef VTWIST_HIGGS_HPP
#define VTWIST_HIGGS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vtwist/hecke.hpp"
#include "vtwist/matrix.hpp"
#include "vtwist/projective_line.hpp"

// A field with values in V is stored as the pair (Theta, Theta') of its
// components in End(E)(a) and End(E)(b); the pair is admissible when the two
// commute and Theta'(x_i) = lambda_i Theta(x_i) at every marked point.

namespace vtwist {

class HiggsPair {
   public:
    HiggsPair(TwistedEndo theta, TwistedEndo theta_prime)
        : theta_(std::move(theta)), theta_prime_(std::move(theta_prime)) {
        if (!(theta_.source == theta_prime_.source))
            throw ValidationError("Theta and Theta' act on different bundles");
        require_valid(theta_, "Theta");
        require_valid(theta_prime_, "ThetaPrime");
    }

    const SplitBundle& bundle() const noexcept { return theta_.source; }
    const TwistedEndo& theta() const noexcept { return theta_; }
    const TwistedEndo& theta_prime() const noexcept { return theta_prime_; }
    std::size_t rank() const noexcept { return theta_.rank(); }

    friend bool operator==(const HiggsPair&, const HiggsPair&) = default;

   private:
    TwistedEndo theta_;
    TwistedEndo theta_prime_;
};

/// Theta Theta' - Theta' Theta, a section of End(E)(a + b).
inline TwistedEndo commutator(const HiggsPair& p) {
    return {p.bundle(), p.theta().twist + p.theta_prime().twist,
            p.theta().entries * p.theta_prime().entries - p.theta_prime().entries * p.theta().entries};
}

inline bool check_commutation(const HiggsPair& p) { return commutator(p).entries.is_zero(); }

struct FiberPointReport {
    Rational x;
    bool ok = false;
    /// Theta'(x) - lambda Theta(x).
    Matrix<Rational> residual;
};

struct FiberReport {
    bool ok = true;
    std::vector<FiberPointReport> points;
};

inline void require_compatible(const HiggsPair& p, const HeckeData& h) {
    require_valid(h);
    if (p.theta().twist != h.a || p.theta_prime().twist != h.b)
        throw ValidationError("pair twists (" + std::to_string(p.theta().twist) + "," +
                              std::to_string(p.theta_prime().twist) + ") do not match Hecke degrees (" +
                              std::to_string(h.a) + "," + std::to_string(h.b) + ")");
}

inline FiberReport check_fiber_condition(const HiggsPair& p, const HeckeData& h) {
    require_compatible(p, h);
    FiberReport rep;
    for (const HeckePoint& pt : h.points) {
        Matrix<Rational> res =
            evaluate_endo(p.theta_prime(), pt.x) - pt.lambda * evaluate_endo(p.theta(), pt.x);
        const bool ok = res.is_zero();
        rep.ok = rep.ok && ok;
        rep.points.push_back({pt.x, ok, std::move(res)});
    }
    return rep;
}

struct FieldCertificate {
    bool commutation = false;
    std::vector<std::pair<Rational, bool>> fiber;
    bool unique = false;
};

class VTwistedHiggsField;
VTwistedHiggsField reconstruct(const HiggsPair& p, const HeckeData& h);

/// An admissible pair together with its Hecke data; only produced by reconstruct.
class VTwistedHiggsField {
   public:
    const HeckeData& hecke() const noexcept { return hecke_; }
    const HiggsPair& pair() const noexcept { return pair_; }
    const FieldCertificate& certificate() const noexcept { return cert_; }

    friend bool operator==(const VTwistedHiggsField& a, const VTwistedHiggsField& b) {
        return a.hecke_ == b.hecke_ && a.pair_ == b.pair_;
    }

   private:
    VTwistedHiggsField(HeckeData h, HiggsPair p, FieldCertificate c)
        : hecke_(std::move(h)), pair_(std::move(p)), cert_(std::move(c)) {}
    friend VTwistedHiggsField reconstruct(const HiggsPair& p, const HeckeData& h);

    HeckeData hecke_;
    HiggsPair pair_;
    FieldCertificate cert_;
};

/*
 * The unique field with components (Theta, Theta'). Throws CommutationError
 * when the components do not commute and FiberConditionError listing the
 * marked points where Theta'(x_i) != lambda_i Theta(x_i).
 */
inline VTwistedHiggsField reconstruct(const HiggsPair& p, const HeckeData& h) {
    require_compatible(p, h);
    if (!check_commutation(p)) throw CommutationError("Theta and Theta' do not commute");
    const FiberReport fr = check_fiber_condition(p, h);
    FieldCertificate cert;
    cert.commutation = true;
    std::vector<std::string> failing;
    for (const FiberPointReport& pt : fr.points) {
        cert.fiber.emplace_back(pt.x, pt.ok);
        if (!pt.ok) failing.push_back(to_string(pt.x));
    }
    if (!fr.ok) {
        std::string msg = "fiber condition fails at x =";
        for (const std::string& x : failing) msg += " " + x;
        throw FiberConditionError(msg, failing);
    }
    // The components determine the field: V(n) -> O(a+n) + O(b+n) is injective.
    cert.unique = true;
    return VTwistedHiggsField(h, p, std::move(cert));
}

inline std::pair<TwistedEndo, TwistedEndo> decompose(const VTwistedHiggsField& f) {
    return {f.pair().theta(), f.pair().theta_prime()};
}

namespace detail {

inline UniPoly random_poly(std::mt19937_64& rng, int max_degree, int span = 3) {
    if (max_degree < 0) return {};
    std::uniform_int_distribution<int> coeff(-span, span);
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& q : c) q = coeff(rng);
    return UniPoly(std::move(c));
}

// Minimal-degree beta with beta(x_i) = lambda_i.
inline UniPoly hecke_multiplier(const HeckeData& h) {
    std::vector<Rational> xs, ls;
    for (const HeckePoint& p : h.points) {
        xs.push_back(p.x);
        ls.push_back(p.lambda);
    }
    return interpolate(xs, ls);
}

}  // namespace detail

/// Largest budget accepted by random_valid_instance; empty when even constant Theta entries overflow.
inline std::optional<int> max_feasible_budget(const HeckeData& h, const SplitBundle& e) {
    const int db = h.points.empty() ? 0 : std::max(detail::hecke_multiplier(h).degree(), 0);
    int top = 0;
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < e.rank(); ++j) top = std::max(top, entry_bound(e, h.a, i, j));
    auto fits = [&](int budget) {
        for (std::size_t i = 0; i < e.rank(); ++i)
            for (std::size_t j = 0; j < e.rank(); ++j) {
                const int ba = entry_bound(e, h.a, i, j);
                if (ba >= 0 && std::min(budget, ba) + db > entry_bound(e, h.b, i, j)) return false;
            }
        return true;
    };
    for (int budget = top; budget >= 0; --budget)
        if (fits(budget)) return budget;
    return std::nullopt;
}

/*
 * Random admissible field: Theta has random entries of degree
 * min(budget, e_i - e_j + a), and Theta' = alpha I + beta Theta with
 * alpha(x_i) = 0 and beta(x_i) = lambda_i (beta of minimal degree).
 */
inline VTwistedHiggsField random_valid_instance(const HeckeData& h, const SplitBundle& e, int degree_budget,
                                               std::uint64_t seed) {
    require_valid(h);
    if (degree_budget < 0) throw ValidationError("negative degree budget");
    std::mt19937_64 rng(seed);
    const std::size_t r = e.rank();

    UniPoly beta;
    UniPoly alpha;
    if (h.points.empty()) {
        beta = detail::random_poly(rng, 0);
        alpha = detail::random_poly(rng, std::min(degree_budget, h.b));
    } else {
        beta = detail::hecke_multiplier(h);
        std::vector<Rational> xs;
        for (const HeckePoint& p : h.points) xs.push_back(p.x);
        const int free_degree = std::min(degree_budget, h.b - static_cast<int>(h.length()));
        alpha = from_roots(xs) * detail::random_poly(rng, free_degree);
    }

    Matrix<UniPoly> theta(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const int ba = entry_bound(e, h.a, i, j);
            if (ba < 0) continue;
            const int deg = std::min(degree_budget, ba);
            if (deg + std::max(beta.degree(), 0) > entry_bound(e, h.b, i, j))
                throw InfeasibleBudgetError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ") of beta*Theta exceeds the Theta' bound " +
                                            std::to_string(entry_bound(e, h.b, i, j)));
            theta(i, j) = detail::random_poly(rng, deg);
        }
    Matrix<UniPoly> theta_prime = Matrix<UniPoly>::scalar(r, alpha) + beta * theta;
    HiggsPair pair(TwistedEndo(e, h.a, std::move(theta)), TwistedEndo(e, h.b, std::move(theta_prime)));
    return reconstruct(pair, h);
}

}  // namespace vtwist

#endif  // VTWIST_HIGGS_HPP
