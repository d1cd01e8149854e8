#ifndef VTWIST_SPECTRAL_HPP
#define VTWIST_SPECTRAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vtwist/bipoly.hpp"
#include "vtwist/charpoly.hpp"
#include "vtwist/factor.hpp"
#include "vtwist/higgs.hpp"
#include "vtwist/irreducible.hpp"
#include "vtwist/number_field.hpp"
#include "vtwist/ratfunc.hpp"
#include "vtwist/text.hpp"

// Spectral side of a field: the characteristic polynomial chi(x, t) of
// Theta cuts out the spectral curve, and when that curve is integral Theta'
// is multiplication by a function psi on it.

namespace vtwist {

/// s_1..s_r with s_i a section of O(i a); chi = t^r - s_1 t^(r-1) + ... + (-1)^r s_r.
struct CharData {
    int a = 0;
    std::vector<Section> s;
    std::size_t rank() const noexcept { return s.size(); }
};

class SpectralCurve {
   public:
    SpectralCurve(BiPoly chi, int a) : chi_(std::move(chi)), a_(a) {
        if (chi_.degree() < 1 || !chi_.is_monic()) throw ValidationError("spectral polynomial must be monic in t");
        const int r = chi_.degree();
        for (int i = 1; i <= r; ++i) {
            const int deg = chi_.coeffs()[static_cast<std::size_t>(r - i)].degree();
            if (deg > i * a_)
                throw ValidationError("coefficient of t^" + std::to_string(r - i) + " has x-degree " +
                                      std::to_string(deg) + " > " + std::to_string(i * a_));
        }
    }

    const BiPoly& chi() const noexcept { return chi_; }
    int a() const noexcept { return a_; }
    int r() const noexcept { return chi_.degree(); }

    friend bool operator==(const SpectralCurve&, const SpectralCurve&) = default;

   private:
    BiPoly chi_;
    int a_;
};

inline CharData char_coefficients(const TwistedEndo& theta) {
    require_valid(theta, "Theta");
    const BiPoly chi = char_poly(theta.entries);
    const int r = chi.degree();
    CharData out{theta.twist, {}};
    for (int i = 1; i <= r; ++i) {
        UniPoly c = chi.coeff(static_cast<std::size_t>(r - i));
        if (i % 2) c = -c;
        out.s.emplace_back(LineBundle{i * theta.twist}, std::move(c));
    }
    return out;
}

inline SpectralCurve build_spectral_curve(const CharData& c) {
    const std::size_t r = c.rank();
    std::vector<UniPoly> coeffs(r + 1);
    coeffs[r] = UniPoly(1);
    for (std::size_t i = 1; i <= r; ++i) coeffs[r - i] = i % 2 ? UniPoly(-c.s[i - 1].poly()) : c.s[i - 1].poly();
    return SpectralCurve(BiPoly(std::move(coeffs)), c.a);
}

struct IntegralityCertificate {
    bool integral = false;
    bool squarefree = false;
    bool irreducible = false;
    /// Monic proper factor in Q[x][t] when not integral.
    std::optional<BiPoly> factor;
    std::string witness;
    /// Set when chi is integral over Q(x) but splits after a constant field extension.
    std::optional<std::string> geometric_warning;
};

namespace detail {

// For r = 2: chi splits over Qbar(x) iff its discriminant is a constant times a square.
inline std::optional<std::string> quadratic_geometric_warning(const BiPoly& chi) {
    const UniPoly disc = chi.coeff(1) * chi.coeff(1) - UniPoly(4) * chi.coeff(0);
    if (disc.is_zero()) return std::nullopt;
    for (const auto& [p, m] : squarefree_decomposition(disc))
        if (m % 2 == 1 && p.degree() > 0) return std::nullopt;
    return "discriminant " + to_string(disc) + " is a constant times a square: chi splits over Q(sqrt(" +
           to_string(disc.lead()) + "))(x)";
}

}  // namespace detail

inline IntegralityCertificate is_integral(const SpectralCurve& s) {
    const FunctionFieldFactorSearch f = factor_search_over_function_field(s.chi());
    IntegralityCertificate cert;
    cert.squarefree = f.squarefree;
    cert.irreducible = f.irreducible;
    cert.integral = f.squarefree && f.irreducible;
    cert.factor = f.factor;
    cert.witness = f.witness;
    if (cert.integral && s.r() == 2) cert.geometric_warning = detail::quadratic_geometric_warning(s.chi());
    return cert;
}

struct SpectralFiberPoint {
    Rational base_x;
    NumberFieldPtr field;
    NumberFieldElement y;
    int multiplicity = 0;

    int degree() const { return field->degree(); }
};

/// Root classes of a polynomial in t lying over x0, one per irreducible factor.
inline std::vector<SpectralFiberPoint> root_classes(const UniPoly& f, const Rational& x0) {
    std::vector<SpectralFiberPoint> out;
    for (const auto& [p, m] : factor_rationals(f).factors) {
        NumberFieldPtr k = NumberField::from_irreducible_factor(p);
        out.push_back({x0, k, NumberFieldElement::generator(k), m});
    }
    return out;
}

/// One point per irreducible factor of chi(x0, t); sum of multiplicity * degree equals r.
inline std::vector<SpectralFiberPoint> fiber_points(const BiPoly& chi, const Rational& x0) {
    return root_classes(specialize_x(chi, x0), x0);
}

inline std::vector<SpectralFiberPoint> fiber_points(const SpectralCurve& s, const Rational& x0) {
    return fiber_points(s.chi(), x0);
}

namespace detail {

inline Matrix<NumberFieldElement> lift(const Matrix<Rational>& m) {
    return m.map([](const Rational& q) { return NumberFieldElement(q); });
}

}  // namespace detail

/// Generalized eigenspaces of Theta(x0) are Theta'(x0)-invariant and the restrictions commute.
inline bool lemma1_check(const HiggsPair& p, const Rational& x0) {
    const Matrix<Rational> m0 = evaluate_endo(p.theta(), x0);
    const Matrix<NumberFieldElement> m = detail::lift(m0);
    const Matrix<NumberFieldElement> n = detail::lift(evaluate_endo(p.theta_prime(), x0));
    for (const SpectralFiberPoint& pt : root_classes(char_poly(m0), x0)) {
        const auto basis = generalized_eigenspace(m, pt.y);
        const auto rm = restrict_to_subspace(m, basis);
        const auto rn = restrict_to_subspace(n, basis);
        if (!rm || !rn) return false;
        if (!(*rm * *rn == *rn * *rm)) return false;
    }
    return true;
}

struct EigenPointReport {
    Rational x;
    UniPoly minimal_polynomial;  // in t
    int multiplicity = 0;
    Rational lambda;
    bool ok = false;
};

struct EigenReport {
    bool ok = true;
    std::vector<EigenPointReport> points;
};

/*
 * At every marked point x_i and every root y of chi(x_i, t): Theta'(x_i)
 * preserves the generalized y-eigenspace of Theta(x_i) and acts there as
 * sign * lambda_i * y plus a nilpotent.
 */
inline EigenReport eigenvalue_condition(const HiggsPair& p, const HeckeData& h, int sign = 1) {
    if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
    require_compatible(p, h);
    EigenReport rep;
    for (const HeckePoint& hp : h.points) {
        const Matrix<Rational> m0 = evaluate_endo(p.theta(), hp.x);
        const Matrix<NumberFieldElement> m = detail::lift(m0);
        const Matrix<NumberFieldElement> n = detail::lift(evaluate_endo(p.theta_prime(), hp.x));
        for (const SpectralFiberPoint& pt : root_classes(char_poly(m0), hp.x)) {
            bool ok = false;
            const auto basis = generalized_eigenspace(m, pt.y);
            if (const auto rn = restrict_to_subspace(n, basis)) {
                const NumberFieldElement target = NumberFieldElement(Rational(sign * hp.lambda)) * pt.y;
                ok = nilpotency_test(*rn - Matrix<NumberFieldElement>::scalar(rn->rows(), target));
            }
            rep.ok = rep.ok && ok;
            rep.points.push_back({hp.x, pt.field->minimal_polynomial(), pt.multiplicity, hp.lambda, ok});
        }
    }
    return rep;
}

/// psi = numerator / denominator with numerator in Q[x][t] of t-degree < r.
struct CommutantCoordinates {
    BiPoly numerator;
    UniPoly denominator{1};
};

namespace detail {

inline Matrix<RationalFunction> to_function_field(const Matrix<UniPoly>& m) {
    return m.map([](const UniPoly& c) { return RationalFunction(c); });
}

}  // namespace detail

/// Theta' = sum_k (p_k / q)(x) Theta^k, solved over Q(x) and verified by substitution.
inline CommutantCoordinates commutant_coordinates(const HiggsPair& p) {
    if (!check_commutation(p)) throw NotInCommutantError("Theta' does not commute with Theta");
    const SpectralCurve curve = build_spectral_curve(char_coefficients(p.theta()));
    const IntegralityCertificate cert = is_integral(curve);
    if (!cert.integral) throw NonIntegralError("spectral curve is not integral: " + cert.witness);

    const std::size_t r = p.rank();
    const Matrix<RationalFunction> theta = detail::to_function_field(p.theta().entries);
    const Matrix<RationalFunction> target = detail::to_function_field(p.theta_prime().entries);
    Matrix<RationalFunction> system(r * r, r);
    std::vector<RationalFunction> rhs(r * r);
    Matrix<RationalFunction> pw = Matrix<RationalFunction>::identity(r);
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) system(i * r + j, k) = pw(i, j);
        pw = pw * theta;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) rhs[i * r + j] = target(i, j);
    const auto sol = solve(system, rhs);
    if (!sol) throw NotInCommutantError("Theta' is not a polynomial in Theta over Q(x)");

    UniPoly q(1);
    for (const RationalFunction& c : *sol) q = q / gcd(q, c.denominator()) * c.denominator();
    q = monic(q);
    std::vector<UniPoly> num;
    for (const RationalFunction& c : *sol) num.push_back(c.numerator() * (q / c.denominator()));

    // Re-substitute: sum_k p_k Theta^k == q Theta'.
    Matrix<UniPoly> acc(r, r), tp = Matrix<UniPoly>::identity(r);
    for (std::size_t k = 0; k < r; ++k) {
        acc = acc + num[k] * tp;
        tp = tp * p.theta().entries;
    }
    if (!(acc == q * p.theta_prime().entries)) throw InconsistencyError("commutant solution fails re-substitution");
    return {BiPoly(std::move(num)), q};
}

class SpectralData {
   public:
    SpectralData(SpectralCurve curve, BiPoly psi, UniPoly psi_denominator, int b)
        : curve_(std::move(curve)), psi_(std::move(psi)), den_(std::move(psi_denominator)), b_(b) {
        if (den_.is_zero()) throw ValidationError("psi denominator is zero");
        psi_ = reduce_mod(psi_, curve_.chi());
        // normalize: monic denominator, common factor removed
        UniPoly g = den_;
        for (const UniPoly& c : psi_.coeffs()) g = gcd(g, c);
        if (g.degree() > 0) {
            den_ = den_ / g;
            psi_ = psi_.map([&](const UniPoly& c) { return UniPoly(c / g); });
        }
        const Rational lc = den_.lead();
        if (lc != 1) {
            den_ = monic(den_);
            psi_ = scale(psi_, invert_unit(lc));
        }
    }

    const SpectralCurve& curve() const noexcept { return curve_; }
    const BiPoly& psi() const noexcept { return psi_; }
    const UniPoly& psi_denominator() const noexcept { return den_; }
    int b() const noexcept { return b_; }
    bool psi_is_polynomial() const { return den_.degree() == 0; }

    friend bool operator==(const SpectralData&, const SpectralData&) = default;

   private:
    SpectralCurve curve_;
    BiPoly psi_;
    UniPoly den_;
    int b_;
};

namespace detail {

// psi(x0, y) for y in a number field; the denominator must not vanish at x0.
inline NumberFieldElement evaluate_psi(const SpectralData& s, const Rational& x0, const NumberFieldElement& y) {
    return evaluate_at(s.psi(), x0, y) * NumberFieldElement(invert_unit(s.psi_denominator()(x0)));
}

}  // namespace detail

/// Spectral data (chi, psi, b) of a field whose spectral curve is integral.
inline SpectralData forward_correspondence(const VTwistedHiggsField& f, int sign = 1) {
    const HiggsPair& p = f.pair();
    const HeckeData& h = f.hecke();
    const SpectralCurve curve = build_spectral_curve(char_coefficients(p.theta()));
    const IntegralityCertificate cert = is_integral(curve);
    if (!cert.integral)
        throw NonIntegralError("spectral curve " + to_string(curve.chi()) + " is not integral" +
                               (cert.factor ? ": factor " + to_string(*cert.factor) : std::string()));
    const EigenReport er = eigenvalue_condition(p, h, sign);
    if (!er.ok) {
        for (const EigenPointReport& pt : er.points)
            if (!pt.ok)
                throw EigenvalueConditionError("eigenvalue condition fails at x = " + to_string(pt.x) + ", y root of " +
                                               to_string(pt.minimal_polynomial, 't'));
    }
    const CommutantCoordinates cc = commutant_coordinates(p);
    SpectralData out(curve, cc.numerator, cc.denominator, h.b);
    for (const HeckePoint& hp : h.points) {
        if (sgn(out.psi_denominator()(hp.x)) == 0) continue;  // covered by the eigenvalue check above
        for (const SpectralFiberPoint& pt : fiber_points(curve, hp.x))
            if (detail::evaluate_psi(out, hp.x, pt.y) != NumberFieldElement(Rational(sign * hp.lambda)) * pt.y)
                throw EigenvalueConditionError("psi(x, y) != sign * lambda * y at x = " + to_string(hp.x) +
                                               ", y root of " + to_string(pt.field->minimal_polynomial(), 't'));
    }
    return out;
}

/// Twists (0, -a, ..., -(r-1)a) of the pushforward of the structure sheaf.
inline SplitBundle pushforward_twists(int a, int r) {
    std::vector<int> e;
    for (int i = 0; i < r; ++i) e.push_back(-i * a);
    return SplitBundle(std::move(e));
}

/// Companion matrix of a monic chi: column j is t * t^j mod chi in the basis 1, t, ..., t^(r-1).
inline Matrix<UniPoly> companion_matrix(const BiPoly& chi) {
    const std::size_t r = static_cast<std::size_t>(chi.degree());
    Matrix<UniPoly> m(r, r);
    for (std::size_t j = 0; j + 1 < r; ++j) m(j + 1, j) = UniPoly(1);
    for (std::size_t k = 0; k < r; ++k) m(k, r - 1) = -chi.coeff(k);
    return m;
}

/// Matrix of multiplication by f in Q[x][t]/(chi) in the basis 1, t, ..., t^(r-1).
inline Matrix<UniPoly> multiplication_matrix(const BiPoly& f, const BiPoly& chi) {
    const std::size_t r = static_cast<std::size_t>(chi.degree());
    Matrix<UniPoly> m(r, r);
    BiPoly col = reduce_mod(f, chi);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) m(i, j) = col.coeff(i);
        col = reduce_mod(col * t_variable(), chi);
    }
    return m;
}

/*
 * Field on the pushforward of the structure sheaf of the spectral curve:
 * Theta is the companion matrix of chi and Theta' is multiplication by psi.
 * At each marked point psi(x_i, t) must agree with sign * lambda_i * t
 * modulo chi(x_i, t), i.e. on every fiber component with its multiplicity.
 * The result is checked against the Hecke data with lambda replaced by
 * sign * lambda.
 */
inline VTwistedHiggsField backward_correspondence(const SpectralData& s, const HeckeData& h, int sign = 1) {
    if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
    require_valid(h);
    const SpectralCurve& curve = s.curve();
    if (curve.a() != h.a || s.b() != h.b)
        throw ValidationError("spectral twists (" + std::to_string(curve.a()) + "," + std::to_string(s.b()) +
                              ") do not match Hecke degrees (" + std::to_string(h.a) + "," + std::to_string(h.b) + ")");
    if (curve.a() < 0) throw ValidationError("structure-sheaf model requires a >= 0");
    if (!s.psi_is_polynomial()) throw ValidationError("structure-sheaf model requires a polynomial psi");
    const IntegralityCertificate cert = is_integral(curve);
    if (!cert.integral)
        throw NonIntegralError("spectral curve " + to_string(curve.chi()) + " is not integral" +
                               (cert.factor ? ": factor " + to_string(*cert.factor) : std::string()));

    const BiPoly& chi = curve.chi();
    const BiPoly psi = scale(s.psi(), invert_unit(s.psi_denominator().lead()));
    for (const HeckePoint& hp : h.points) {
        const UniPoly chi0 = specialize_x(chi, hp.x);
        const UniPoly diff = specialize_x(psi, hp.x) - UniPoly::monomial(Rational(sign * hp.lambda), 1);
        for (const auto& [m, mult] : factor_rationals(chi0).factors)
            if (!divides(pow(m, static_cast<unsigned>(mult)), diff))
                throw EigenvalueConditionError("psi(x, t) != sign * lambda * t on the fiber component at x = " +
                                               to_string(hp.x) + ", y root of " + to_string(m, 't') +
                                               (mult > 1 ? " (multiplicity " + std::to_string(mult) + ")" : ""));
    }

    const int r = curve.r();
    const SplitBundle e = pushforward_twists(curve.a(), r);
    TwistedEndo theta(e, h.a, companion_matrix(chi));
    TwistedEndo theta_prime(e, h.b, multiplication_matrix(psi, chi));
    if (const auto v = validate_twisted_endo(theta_prime); !v.empty())
        throw DegreeBoundError("multiplication by psi violates the Theta' bounds: " + describe(v));
    require_valid(theta, "companion matrix");
    HeckeData hs = h;
    for (HeckePoint& hp : hs.points) hp.lambda *= sign;
    return reconstruct(HiggsPair(std::move(theta), std::move(theta_prime)), hs);
}

enum class Stability { Stable, Unknown };

struct StabilityVerdict {
    Stability verdict = Stability::Unknown;
    IntegralityCertificate integrality;
};

inline StabilityVerdict certify_stability(const VTwistedHiggsField& f) {
    StabilityVerdict v;
    v.integrality = is_integral(build_spectral_curve(char_coefficients(f.pair().theta())));
    v.verdict = v.integrality.integral ? Stability::Stable : Stability::Unknown;
    return v;
}

inline std::string to_string(Stability s) { return s == Stability::Stable ? "Stable" : "Unknown"; }

struct InvariantLine {
    /// Primitive polynomial generator of the line, an eigenvector of Theta.
    std::vector<UniPoly> direction;
    /// Eigenvalue y(x) of Theta on the line.
    UniPoly eigenvalue;
    bool theta_prime_invariant = false;
};

/// For r = 2: a Theta-invariant line exists iff chi is reducible over Q(x).
inline std::optional<InvariantLine> invariant_line_search_r2(const HiggsPair& p) {
    if (p.rank() != 2) throw UnsupportedRankError("invariant line search is implemented for rank 2 only");
    const BiPoly chi = char_poly(p.theta().entries);
    const FunctionFieldFactorSearch fs = factor_search_over_function_field(chi);
    if (fs.squarefree && fs.irreducible) return std::nullopt;
    const BiPoly& lin = *fs.factor;
    if (lin.degree() != 1) throw InconsistencyError("rank-2 factor search returned a non-linear factor");
    const UniPoly y = -lin.coeff(0);

    const Matrix<RationalFunction> shifted =
        detail::to_function_field(p.theta().entries - Matrix<UniPoly>::scalar(2, y));
    const auto ker = kernel_basis(shifted);
    if (ker.empty()) throw InconsistencyError("no eigenvector for a root of the characteristic polynomial");
    UniPoly den(1);
    for (const RationalFunction& c : ker.front()) den = den / gcd(den, c.denominator()) * c.denominator();
    std::vector<UniPoly> v;
    UniPoly content;
    for (const RationalFunction& c : ker.front()) {
        v.push_back(c.numerator() * (den / c.denominator()));
        content = gcd(content, v.back());
    }
    for (UniPoly& c : v) c = c / content;

    InvariantLine line{v, y, false};
    const std::vector<UniPoly> w = p.theta_prime().entries * v;
    line.theta_prime_invariant = (v[0] * w[1] - v[1] * w[0]).is_zero();
    return line;
}

}  // namespace vtwist

#endif  // VTWIST_SPECTRAL_HPP
