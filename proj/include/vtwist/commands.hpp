#ifndef VTWIST_COMMANDS_HPP
#define VTWIST_COMMANDS_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vtwist/json_io.hpp"
#include "vtwist/sampling.hpp"

// Command implementations behind the CLI. Each returns the JSON report and
// the process exit code: 0 pass, 1 mathematical failure, 2 input error.

namespace vtwist {

inline constexpr const char* tool_version = "1.0.0";

struct CommandOptions {
    int sign = 1;
    bool timing = true;
    std::uint64_t seed = 1;
};

struct CommandResult {
    json report;
    int exit_code = 0;
};

inline std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
    if (dynamic_cast<const CommutationError*>(&e)) return "CommutationError";
    if (dynamic_cast<const FiberConditionError*>(&e)) return "FiberConditionError";
    if (dynamic_cast<const NonIntegralError*>(&e)) return "NonIntegralError";
    if (dynamic_cast<const EigenvalueConditionError*>(&e)) return "EigenvalueConditionError";
    if (dynamic_cast<const DegreeBoundError*>(&e)) return "DegreeBoundError";
    if (dynamic_cast<const NotInCommutantError*>(&e)) return "NotInCommutantError";
    if (dynamic_cast<const InfeasibleBudgetError*>(&e)) return "InfeasibleBudgetError";
    if (dynamic_cast<const RetryExhaustedError*>(&e)) return "RetryExhaustedError";
    if (dynamic_cast<const UnsupportedRankError*>(&e)) return "UnsupportedRankError";
    if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const LimitError*>(&e)) return "LimitError";
    if (dynamic_cast<const InconsistencyError*>(&e)) return "InconsistencyError";
    return "Error";
}

namespace detail {

inline json error_report(const std::exception& e) {
    json j = {{"error", error_kind(e)}, {"message", e.what()}};
    if (const auto* f = dynamic_cast<const FiberConditionError*>(&e)) j["failing_points"] = f->points();
    return j;
}

/*
 * Runs `body`, stamping command name, version and timing. Input errors map to
 * exit 2 and all other library errors to exit 1; failing reports embed
 * `instance` when one is available.
 */
inline CommandResult run(const std::string& name, const CommandOptions& opts, const json* instance,
                         const std::function<CommandResult()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CommandResult res;
    try {
        res = body();
    } catch (const InputError& e) {
        res = {error_report(e), 2};
    } catch (const Error& e) {
        res = {error_report(e), 1};
    } catch (const json::exception& e) {
        res = {{{"error", "ParseError"}, {"message", e.what()}}, 2};
    }
    res.report["command"] = name;
    res.report["tool_version"] = tool_version;
    res.report["sign"] = opts.sign;
    res.report["passed"] = res.exit_code == 0;
    if (res.exit_code != 0 && instance && !res.report.contains("instance")) res.report["instance"] = *instance;
    if (opts.timing)
        res.report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

inline json fiber_report_to_json(const FiberReport& fr) {
    json pts = json::array();
    for (const FiberPointReport& p : fr.points) {
        json j = {{"x", to_string(p.x)}, {"ok", p.ok}};
        if (!p.ok) j["residual"] = matrix_to_json(p.residual);
        pts.push_back(j);
    }
    return {{"ok", fr.ok}, {"points", pts}};
}

inline json eigen_report_to_json(const EigenReport& er) {
    json pts = json::array();
    for (const EigenPointReport& p : er.points)
        pts.push_back({{"x", to_string(p.x)},
                       {"minimal_polynomial", to_string(p.minimal_polynomial, 't')},
                       {"multiplicity", p.multiplicity},
                       {"lambda", to_string(p.lambda)},
                       {"ok", p.ok}});
    return {{"ok", er.ok}, {"points", pts}};
}

inline json fiber_table(const SpectralCurve& curve, const HeckeData& h) {
    json table = json::array();
    for (const HeckePoint& hp : h.points) {
        json pts = json::array();
        for (const SpectralFiberPoint& p : fiber_points(curve, hp.x))
            pts.push_back({{"minimal_polynomial", to_string(p.field->minimal_polynomial(), 't')},
                           {"multiplicity", p.multiplicity},
                           {"degree", p.degree()}});
        table.push_back({{"x", to_string(hp.x)}, {"points", pts}});
    }
    return table;
}

// Marked points plus a few seeded rational base points.
inline std::vector<Rational> sample_points(const HeckeData& h, std::uint64_t seed, int extra) {
    std::vector<Rational> out;
    for (const HeckePoint& p : h.points) out.push_back(p.x);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 3);
    for (int i = 0; i < extra; ++i) out.push_back(make_rational(num(rng), den(rng)));
    return out;
}

}  // namespace detail

inline CommandResult cmd_check(const json& doc, const CommandOptions& opts = {}) {
    return detail::run("check", opts, &doc, [&]() -> CommandResult {
        const InstanceDocument d = instance_from_json(doc);
        const HiggsPair& p = d.require_pair();
        require_compatible(p, d.hecke);
        json rep;
        rep["validate"] = true;
        const TwistedEndo comm = commutator(p);
        rep["commutation"] = {{"ok", comm.entries.is_zero()}};
        if (!comm.entries.is_zero()) rep["commutation"]["commutator"] = matrix_to_json(comm.entries);
        const FiberReport fr = check_fiber_condition(p, d.hecke);
        rep["fiber"] = detail::fiber_report_to_json(fr);
        const EigenReport er = eigenvalue_condition(p, d.hecke, opts.sign);
        rep["eigenvalue"] = detail::eigen_report_to_json(er);
        json l1 = json::array();
        bool l1_ok = true;
        for (const Rational& x0 : detail::sample_points(d.hecke, opts.seed, 5)) {
            const bool ok = lemma1_check(p, x0);
            l1_ok = l1_ok && ok;
            l1.push_back({{"x", to_string(x0)}, {"ok", ok}});
        }
        rep["lemma1"] = {{"ok", l1_ok}, {"points", l1}};
        rep["seed"] = opts.seed;
        const bool all = comm.entries.is_zero() && fr.ok && er.ok && l1_ok;
        return {rep, all ? 0 : 1};
    });
}

inline CommandResult cmd_reconstruct(const json& doc, const CommandOptions& opts = {}) {
    return detail::run("reconstruct", opts, &doc, [&]() -> CommandResult {
        const InstanceDocument d = instance_from_json(doc);
        const VTwistedHiggsField f = reconstruct(d.require_pair(), d.hecke);
        return {{{"certificate", certificate_to_json(f.certificate())}}, 0};
    });
}

inline CommandResult cmd_spectral(const json& doc, const CommandOptions& opts = {}) {
    return detail::run("spectral", opts, &doc, [&]() -> CommandResult {
        const InstanceDocument d = instance_from_json(doc);
        const HiggsPair& p = d.require_pair();
        require_compatible(p, d.hecke);
        const CharData cd = char_coefficients(p.theta());
        const SpectralCurve curve = build_spectral_curve(cd);
        json rep;
        json s = json::array();
        for (const Section& sec : cd.s) s.push_back(to_string(sec.poly()));
        rep["char_coefficients"] = s;
        rep["chi"] = to_string(curve.chi());
        rep["a"] = curve.a();
        rep["r"] = curve.r();
        const IntegralityCertificate cert = is_integral(curve);
        rep["integrality"] = integrality_to_json(cert);
        rep["fibers"] = detail::fiber_table(curve, d.hecke);
        rep["stability"] = to_string(cert.integral ? Stability::Stable : Stability::Unknown);
        const EigenReport er = eigenvalue_condition(p, d.hecke, opts.sign);
        rep["eigenvalue_condition"] = er.ok;
        if (!cert.integral) {
            rep["error"] = "NonIntegralError";
            rep["message"] = cert.squarefree ? "spectral curve is reducible" : "spectral curve is non-reduced";
            return {rep, 1};
        }
        const VTwistedHiggsField f = reconstruct(p, d.hecke);
        const SpectralData sd = forward_correspondence(f, opts.sign);
        rep["psi"] = to_string(sd.psi());
        rep["psi_denominator"] = to_string(sd.psi_denominator());
        rep["b"] = sd.b();
        rep["stability"] = to_string(certify_stability(f).verdict);
        return {rep, 0};
    });
}

inline CommandResult cmd_build(const json& doc, const CommandOptions& opts = {}) {
    return detail::run("build", opts, &doc, [&]() -> CommandResult {
        const InstanceDocument d = instance_from_json(doc);
        if (!d.spectral) throw ValidationError("build requires a 'spectral' section");
        const VTwistedHiggsField f = backward_correspondence(*d.spectral, d.hecke, opts.sign);
        json rep = instance_to_json(f.hecke(), f.pair(), d.spectral);
        rep["certificate"] = certificate_to_json(f.certificate());
        return {rep, 0};
    });
}

inline CommandResult cmd_hecke_make(int c, int d, int ell, const std::vector<Rational>& pool,
                                    const CommandOptions& opts = {}) {
    return detail::run("hecke-make", opts, nullptr, [&]() -> CommandResult {
        const HeckeData h = make_presentation(c, d, ell, pool, opts.seed);
        const SplittingType st = splitting_type(h);
        return {{{"hecke", hecke_to_json(h)},
                 {"splitting_type", {st.c, st.d}},
                 {"degree_of_V", degree_of_V(h)},
                 {"seed", opts.seed}},
                0};
    });
}

namespace detail {

struct PropertyFailure {
    std::string property;
    std::string detail;
};

// Perturbs Theta' at marked point i by an entry polynomial that is nonzero at x_i and fits the bounds.
inline std::optional<HiggsPair> perturb_at(const HiggsPair& p, const HeckeData& h, std::size_t i) {
    const SplitBundle& e = p.bundle();
    std::size_t bi = 0, bj = 0;
    int best = -1;
    for (std::size_t r = 0; r < e.rank(); ++r)
        for (std::size_t c = 0; c < e.rank(); ++c)
            if (entry_bound(e, h.b, r, c) > best) {
                best = entry_bound(e, h.b, r, c);
                bi = r;
                bj = c;
            }
    if (best < 0) return std::nullopt;
    UniPoly bump(1);
    if (best >= static_cast<int>(h.length()) - 1) {
        // Lagrange basis polynomial: 1 at x_i, 0 at the other marked points.
        std::vector<Rational> xs, vs;
        for (std::size_t k = 0; k < h.length(); ++k) {
            xs.push_back(h.points[k].x);
            vs.push_back(k == i ? 1 : 0);
        }
        bump = interpolate(xs, vs);
    }
    Matrix<UniPoly> m = p.theta_prime().entries;
    m(bi, bj) += bump;
    return HiggsPair(p.theta(), TwistedEndo(e, h.b, std::move(m)));
}

inline Matrix<UniPoly> conjugate(const Matrix<UniPoly>& g, const Matrix<UniPoly>& m, const Matrix<UniPoly>& ginv) {
    return g * m * ginv;
}

inline std::optional<PropertyFailure> check_properties(const VTwistedHiggsField& f, std::uint64_t seed, int sign) {
    std::mt19937_64 rng(seed);
    const HiggsPair& p = f.pair();
    const HeckeData& h = f.hecke();
    const std::size_t r = p.rank();

    const auto [t, tp] = decompose(f);
    if (!(reconstruct(HiggsPair(t, tp), h) == f)) return PropertyFailure{"round_trip", "reconstruct(decompose(F)) != F"};

    for (std::size_t i = 0; i < h.length(); ++i) {
        const auto q = perturb_at(p, h, i);
        if (!q) continue;
        bool rejected = false;
        try {
            reconstruct(*q, h);
        } catch (const MathError&) {
            rejected = true;
        }
        if (!rejected) return PropertyFailure{"perturbation_rejected", "perturbed pair accepted at x = " + to_string(h.points[i].x)};
    }

    // Constant unipotent upper-triangular change of basis respects the descending twists.
    std::uniform_int_distribution<int> small(-2, 2);
    Matrix<UniPoly> g = Matrix<UniPoly>::identity(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) g(i, j) = UniPoly(small(rng));
    const Matrix<UniPoly> ginv = inverse(g.map([](const UniPoly& c) { return RationalFunction(c); }))
                                     ->map([](const RationalFunction& c) { return c.numerator(); });
    const HiggsPair pc(TwistedEndo(p.bundle(), h.a, conjugate(g, p.theta().entries, ginv)),
                       TwistedEndo(p.bundle(), h.b, conjugate(g, p.theta_prime().entries, ginv)));
    if (check_fiber_condition(pc, h).ok != check_fiber_condition(p, h).ok)
        return PropertyFailure{"conjugation_invariance", "fiber verdict changed under constant conjugation"};
    {
        const CharData a = char_coefficients(p.theta()), b = char_coefficients(pc.theta());
        for (std::size_t i = 0; i < r; ++i)
            if (!(a.s[i] == b.s[i]))
                return PropertyFailure{"conjugation_invariance", "char coefficient s" + std::to_string(i + 1) + " changed"};
    }

    for (const FiberPointReport& pt : check_fiber_condition(p, h).points)
        if (!pt.residual.is_zero())
            return PropertyFailure{"zero_residual", "Theta'(x) - lambda Theta(x) != 0 at x = " + to_string(pt.x)};

    if (const auto budget = max_feasible_budget(h, p.bundle())) {
        const VTwistedHiggsField f2 = random_valid_instance(h, p.bundle(), std::min(*budget, 2), rng());
        Matrix<UniPoly> ct = UniPoly(2) * p.theta().entries - UniPoly(3) * f2.pair().theta().entries;
        Matrix<UniPoly> ctp = UniPoly(2) * p.theta_prime().entries - UniPoly(3) * f2.pair().theta_prime().entries;
        // the fiber condition is linear; commutation is not, so only the former is required of 2F - 3G
        const HiggsPair comb(TwistedEndo(p.bundle(), h.a, std::move(ct)), TwistedEndo(p.bundle(), h.b, std::move(ctp)));
        if (!check_fiber_condition(comb, h).ok)
            return PropertyFailure{"linearity", "2F - 3G violates the fiber condition"};
    }

    const BiPoly chi = char_poly(p.theta().entries);
    const SpectralCurve curve = build_spectral_curve(char_coefficients(p.theta()));
    if (!(curve.chi() == chi)) return PropertyFailure{"display_consistency", "chi from s_i differs from char_poly"};

    {
        const Rational x0 = make_rational(std::uniform_int_distribution<int>(-5, 5)(rng), 2);
        Rational sum = 0;
        for (const SpectralFiberPoint& pt : fiber_points(curve, x0)) sum += pt.multiplicity * pt.y.trace();
        const Rational s1 = char_coefficients(p.theta()).s[0].poly()(x0);
        if (sum != s1) return PropertyFailure{"fiber_trace", "sum of fiber points != s1 at x = " + to_string(x0)};
    }

    if (!eigenvalue_condition(p, h, sign).ok)
        return PropertyFailure{"eigenvalue_condition", "eigenvalue condition fails with sign " + std::to_string(sign)};

    for (const Rational& x0 : sample_points(HeckeData{}, rng(), 10))
        if (!lemma1_check(p, x0)) return PropertyFailure{"lemma1", "eigenspace invariance fails at x = " + to_string(x0)};

    const IntegralityCertificate cert = is_integral(curve);
    if (cert.integral && h.a >= 0) {
        const SpectralData sd = forward_correspondence(f, sign);
        if (sd.psi_is_polynomial()) {
            std::optional<VTwistedHiggsField> back;
            try {
                back = backward_correspondence(sd, h, sign);
            } catch (const DegreeBoundError&) {
                // psi does not fit the structure-sheaf bounds for this b
            }
            if (back && !(forward_correspondence(*back, sign) == sd))
                return PropertyFailure{"round_trip_A", "backward then forward changed (chi, psi)"};
        }
    }

    if (r == 2) {
        const auto line = invariant_line_search_r2(p);
        if (cert.integral && line) return PropertyFailure{"stability_oracle", "invariant line found on an integral curve"};
        if (!cert.integral && !line) return PropertyFailure{"stability_oracle", "no invariant line on a reducible curve"};
    }
    return std::nullopt;
}

}  // namespace detail

inline CommandResult cmd_selftest(int count, const CommandOptions& opts = {}) {
    return detail::run("selftest", opts, nullptr, [&]() -> CommandResult {
        if (count < 0) throw ValidationError("count must be nonnegative");
        json rep;
        rep["seed"] = opts.seed;
        rep["count"] = count;
        for (int k = 0; k < count; ++k) {
            const std::uint64_t s = opts.seed * 1000003ULL + static_cast<std::uint64_t>(k);
            const VTwistedHiggsField f = random_instance(s);
            if (const auto fail = detail::check_properties(f, s, opts.sign)) {
                rep["property"] = fail->property;
                rep["message"] = fail->detail;
                rep["failed_at"] = k;
                rep["instance"] = instance_to_json(f);
                return {rep, 1};
            }
        }
        rep["instances_checked"] = count;
        return {rep, 0};
    });
}

}  // namespace vtwist

#endif  // VTWIST_COMMANDS_HPP
