// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "oracles.hpp"
#include "vtwist/commands.hpp"
#include "vtwist/sampling.hpp"

using namespace vtwist;

namespace {

// Wall-clock limit for the timed criteria, in seconds.
constexpr double time_limit_s = 60.0;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Two kinds of single-point perturbation of Theta' at x_i, each with a polynomial bump that is 1 at
// x_i and 0 at the other marked points when the degree bound allows (else the constant 1):
// bump * I keeps commutation, so the rejection must be a fiber failure naming x_i; a bump in one
// entry may also break commutation, and any rejection counts.
bool all_perturbations_rejected(const VTwistedHiggsField& f, std::string& why, std::size_t& tried) {
    const HeckeData& h = f.hecke();
    const HiggsPair& p = f.pair();
    const SplitBundle& e = p.bundle();
    for (std::size_t i = 0; i < h.length(); ++i) {
        const std::string xi = to_string(h.points[i].x);
        std::vector<Rational> xs, vs;
        for (std::size_t k = 0; k < h.length(); ++k) {
            xs.push_back(h.points[k].x);
            vs.push_back(k == i ? 1 : 0);
        }
        const UniPoly lagrange = interpolate(xs, vs);
        auto bump = [&](int bound) { return lagrange.degree() <= bound ? lagrange : UniPoly(1); };
        auto accepted = [&](Matrix<UniPoly> m) {
            ++tried;
            reconstruct(HiggsPair(p.theta(), TwistedEndo(e, h.b, std::move(m))), h);
            return true;
        };

        if (h.b >= 0) {
            try {
                if (accepted(p.theta_prime().entries + Matrix<UniPoly>::scalar(e.rank(), bump(h.b)))) {
                    why = "scalar perturbation at x = " + xi + " accepted";
                    return false;
                }
            } catch (const FiberConditionError& err) {
                bool named = false;
                for (const std::string& s : err.points()) named = named || s == xi;
                if (!named) {
                    why = "rejection does not name x = " + xi;
                    return false;
                }
            }
        }
        for (std::size_t r = 0; r < e.rank(); ++r)
            for (std::size_t c = 0; c < e.rank(); ++c) {
                const int bound = entry_bound(e, h.b, r, c);
                if (bound < 0) continue;
                Matrix<UniPoly> m = p.theta_prime().entries;
                m(r, c) += bump(bound);
                try {
                    if (accepted(std::move(m))) {
                        why = "entry perturbation at x = " + xi + " accepted";
                        return false;
                    }
                } catch (const MathError&) {
                }
            }
    }
    return true;
}

std::vector<VTwistedHiggsField> criterion1_instances() {
    std::vector<VTwistedHiggsField> out;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) out.push_back(random_instance(seed));
    return out;
}

Outcome criterion1(const std::vector<VTwistedHiggsField>& inst) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t perturbed = 0, tried = 0;
    for (std::size_t k = 0; k < inst.size(); ++k) {
        const VTwistedHiggsField& f = inst[k];
        const HiggsPair& p = f.pair();
        const HeckeData& h = f.hecke();
        if (p.rank() > 3 || h.a > 3 || h.b > 3 || h.length() > 3) o.fail("instance outside the limits");
        const auto [t, tp] = decompose(f);
        if (!(reconstruct(HiggsPair(t, tp), h) == f)) o.fail("round trip differs at instance " + std::to_string(k));
        std::string why;
        if (!all_perturbations_rejected(f, why, tried)) o.fail(why + " (instance " + std::to_string(k) + ")");
        perturbed += h.length();
    }
    const double s = seconds_since(t0);
    if (s >= time_limit_s) o.fail("took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = std::to_string(inst.size()) + " instances, " + std::to_string(perturbed) + " marked points, " +
                   std::to_string(tried) + " perturbations rejected, " +
                   std::to_string(s) + " s";
    return o;
}

Outcome criterion2(const std::vector<VTwistedHiggsField>& inst) {
    Outcome o;
    std::size_t checked = 0, flipped_failures = 0;
    for (std::size_t k = 0; k < inst.size(); ++k) {
        const EigenReport plus = eigenvalue_condition(inst[k].pair(), inst[k].hecke(), 1);
        if (!plus.ok) o.fail("sign +1 fails at instance " + std::to_string(k));
        checked += plus.points.size();
        const EigenReport minus = eigenvalue_condition(inst[k].pair(), inst[k].hecke(), -1);
        for (const EigenPointReport& pt : minus.points)
            if (!pt.ok && pt.minimal_polynomial != parse_unipoly("t", 't')) {
                ++flipped_failures;
                break;
            }
    }
    if (flipped_failures == 0) o.fail("sign -1 never fails at a nonzero fiber point");
    if (o.pass)
        o.detail = std::to_string(checked) + " (x, y) classes pass with +1; " + std::to_string(flipped_failures) +
                   " instances fail with -1";
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    int n = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int r = seed % 2 ? 2 : 3;
        const int a = 1 + static_cast<int>((seed / 2) % 2);
        const SpectralInstance s = random_spectral_instance(seed, r, a);
        try {
            const VTwistedHiggsField f = backward_correspondence(s.data, s.hecke);
            const SpectralData back = forward_correspondence(f);
            if (!(back.curve() == s.data.curve())) o.fail("chi changed for seed " + std::to_string(seed));
            if (!(back.psi() == reduce_mod(s.data.psi(), s.data.curve().chi())) || back.psi_denominator() != UniPoly(1))
                o.fail("psi changed for seed " + std::to_string(seed));
            ++n;
        } catch (const Error& e) {
            o.fail("seed " + std::to_string(seed) + ": " + e.what());
        }
    }
    const double s = seconds_since(t0);
    if (s >= time_limit_s) o.fail("took " + std::to_string(s) + " s");
    if (o.pass) o.detail = std::to_string(n) + " pairs, " + std::to_string(s) + " s";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(4004);
    for (int k = 0; k < 100; ++k) {
        const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
        const TwistedEndo t(SplitBundle(std::vector<int>(r, 0)), 2, oracle::random_poly_matrix(rng, r, 2));
        const BiPoly shown = build_spectral_curve(char_coefficients(t)).chi();
        if (!(shown == char_poly(t.entries))) o.fail("display differs from char_poly at matrix " + std::to_string(k));
        if (!(shown == oracle::char_poly_cofactor(t.entries))) o.fail("differs from cofactor oracle at " + std::to_string(k));
    }
    if (o.pass) o.detail = "100 matrices, r <= 4, entry degree <= 2";
    return o;
}

// Integer bivariate polynomial, monic of t-degree r, every coefficient of x-degree <= xdeg.
BiPoly random_monic(std::mt19937_64& rng, int r, int xdeg) {
    std::uniform_int_distribution<int> c(-3, 3), d(-1, xdeg);
    std::vector<UniPoly> cc(static_cast<std::size_t>(r) + 1);
    cc.back() = UniPoly(1);
    for (int i = 0; i < r; ++i) {
        std::vector<Rational> v(static_cast<std::size_t>(d(rng) + 1));
        for (auto& q : v) q = c(rng);
        cc[static_cast<std::size_t>(i)] = UniPoly(std::move(v));
    }
    return BiPoly(std::move(cc));
}

int max_x_degree(const BiPoly& f) {
    int m = 0;
    for (const UniPoly& c : f.coeffs()) m = std::max(m, c.degree());
    return m;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(5005);
    int generic = 0, reducible = 0, nonreduced = 0, agree_integral = 0;
    while (generic + reducible + nonreduced < 200) {
        const int kind = (generic + reducible + nonreduced) % 4;
        BiPoly chi;
        if (kind <= 1) {
            chi = random_monic(rng, 2 + kind, 3);
        } else if (kind == 2) {
            chi = random_monic(rng, 1, 1) * random_monic(rng, 1 + static_cast<int>(rng() % 2), 1);
        } else {
            const BiPoly lin = random_monic(rng, 1, 1);
            chi = lin * lin * (rng() % 2 ? random_monic(rng, 1, 1) : BiPoly(UniPoly(1)));
        }
        if (max_x_degree(chi) > 3) continue;
        kind <= 1 ? ++generic : kind == 2 ? ++reducible : ++nonreduced;
        const bool got = is_integral(SpectralCurve(chi, 3)).integral;
        const bool want = oracle::integral_by_roots(chi);
        if (got != want) o.fail("disagreement on " + to_string(chi));
        if (kind >= 2 && got) o.fail("constructed non-integral case accepted: " + to_string(chi));
        agree_integral += got;
    }
    if (o.pass)
        o.detail = "200 cases (" + std::to_string(generic) + " random, " + std::to_string(reducible) + " reducible, " +
                   std::to_string(nonreduced) + " non-reduced), " + std::to_string(agree_integral) + " integral";
    return o;
}

Outcome criterion6() {
    Outcome o;
    int integral = 0;
    for (std::uint64_t seed = 1; integral < 50; ++seed) {
        const SpectralInstance s = random_spectral_instance(6000 + seed, 2, 1 + static_cast<int>(seed % 2));
        const VTwistedHiggsField f = backward_correspondence(s.data, s.hecke);
        ++integral;
        if (invariant_line_search_r2(f.pair())) o.fail("invariant line on integral seed " + std::to_string(seed));
        if (certify_stability(f).verdict != Stability::Stable) o.fail("integral instance not Stable");
    }
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<int> c(-3, 3), lam(1, 3);
    const SplitBundle e({0, 0});
    for (int k = 0; k < 20; ++k) {
        // upper-triangular Theta: e1 spans an invariant line, chi = (t - p)(t - s)
        const int a = 1 + k % 2;
        auto poly = [&](int deg) {
            std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
            for (auto& q : v) q = c(rng);
            return UniPoly(std::move(v));
        };
        const Matrix<UniPoly> theta{{poly(a), poly(a)}, {UniPoly(0), poly(a)}};
        HeckeData h{a, 0, {{0, lam(rng)}, {1, -lam(rng)}}};
        const UniPoly beta = interpolate<Rational>({h.points[0].x, h.points[1].x}, {h.points[0].lambda, h.points[1].lambda});
        h.b = a + std::max(beta.degree(), 0);
        const VTwistedHiggsField f = reconstruct(HiggsPair(TwistedEndo(e, a, theta), TwistedEndo(e, h.b, beta * theta)), h);
        const auto line = invariant_line_search_r2(f.pair());
        if (!line) o.fail("no invariant line on reducible instance " + std::to_string(k));
        else if (!line->theta_prime_invariant) o.fail("line not Theta'-invariant on instance " + std::to_string(k));
        if (certify_stability(f).verdict != Stability::Unknown) o.fail("reducible instance certified Stable");
    }
    if (o.pass) o.detail = "50 integral (no line, Stable), 20 reducible (line found, Unknown)";
    return o;
}

Outcome criterion7() {
    Outcome o;
    const std::vector<std::vector<Rational>> pools{
        {0, 1, -1, 2, -2, 3, -3, 4},
        {Rational(1, 2), Rational(-1, 3), 5, 7, -4, 0, Rational(2, 3), 9},
    };
    std::mt19937_64 rng(7007);
    std::uniform_int_distribution<int> cd(-3, 3), extra(0, 2);
    for (int k = 0; k < 100; ++k) {
        int c = cd(rng), d = cd(rng);
        if (c < d) std::swap(c, d);
        const int ell = std::max(1, c - d - 1) + extra(rng);
        const HeckeData h = make_presentation(c, d, ell, pools[static_cast<std::size_t>(k % 2)], static_cast<std::uint64_t>(k));
        if (!(splitting_type(h) == SplittingType{c, d}))
            o.fail("target (" + std::to_string(c) + "," + std::to_string(d) + ") missed");
        if (c + d != h.a + h.b - ell) o.fail("degree identity fails");
        if (static_cast<int>(h.length()) != ell) o.fail("wrong number of points");
    }
    if (o.pass) o.detail = "100 targets hit; c + d = a + b - ell on all";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const std::string src = VTWIST_SOURCE_DIR;
    std::ifstream in(src + "/examples/usage/worked_instance.json");
    std::ifstream gin(src + "/tests/golden/worked_example.json");
    if (!in || !gin) {
        o.fail("missing worked instance or golden file");
        return o;
    }
    CommandOptions opts;
    opts.timing = false;
    const CommandResult r = cmd_spectral(json::parse(in), opts);
    const json golden = json::parse(gin);
    if (r.exit_code != 0) o.fail("spectral command failed");
    if (r.report != golden) o.fail("report differs from golden file");
    if (r.report.value("chi", "") != "t^2 - x") o.fail("chi is not t^2 - x");
    if (!r.report["integrality"].value("integral", false)) o.fail("not integral");
    if (r.report.value("psi", "") != "t") o.fail("psi is not t");
    if (!r.report.value("eigenvalue_condition", false)) o.fail("eigenvalue condition false");
    if (r.report.value("stability", "") != "Stable") o.fail("not Stable");
    if (o.pass) o.detail = "chi = t^2 - x, integral, psi = t, eigenvalue condition true, Stable; golden match";
    return o;
}

}  // namespace

int main() {
    const auto instances = criterion1_instances();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"round trip and perturbation rejection", [&] { return criterion1(instances); }},
        {"eigenvalue condition and sign convention", [&] { return criterion2(instances); }},
        {"spectral round trip", criterion3},
        {"spectral display vs characteristic polynomial", criterion4},
        {"integrality vs root oracle", criterion5},
        {"stability vs invariant lines (rank 2)", criterion6},
        {"splitting types from presentations", criterion7},
        {"worked example golden file", criterion8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
                  << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
