#ifndef VTWIST_JSON_IO_HPP
#define VTWIST_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "vtwist/hecke.hpp"
#include "vtwist/higgs.hpp"
#include "vtwist/projective_line.hpp"
#include "vtwist/spectral.hpp"
#include "vtwist/text.hpp"

// JSON encodings of every data type. Rationals and polynomials are strings in
// the text grammar; integers (twists, degrees) are JSON numbers.

namespace vtwist {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

inline int integer_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

inline std::string text_of(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(where + ": expected a string or integer");
}

}  // namespace detail

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j, const std::string& where = "rational") {
    return parse_rational(detail::text_of(j, where));
}

inline json matrix_to_json(const Matrix<UniPoly>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json matrix_to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json hecke_to_json(const HeckeData& h) {
    json pts = json::array();
    for (const HeckePoint& p : h.points) pts.push_back({{"x", to_string(p.x)}, {"lambda", to_string(p.lambda)}});
    return {{"S", h.a}, {"L", h.b}, {"points", pts}};
}

inline HeckeData hecke_from_json(const json& j) {
    HeckeData h;
    h.a = detail::integer_field(j, "S", "hecke");
    h.b = detail::integer_field(j, "L", "hecke");
    const json& pts = detail::field(j, "points", "hecke");
    if (!pts.is_array()) throw ParseError("hecke: 'points' must be an array");
    for (const json& p : pts)
        h.points.push_back({rational_from_json(detail::field(p, "x", "hecke point"), "hecke point x"),
                            rational_from_json(detail::field(p, "lambda", "hecke point"), "hecke point lambda")});
    return h;
}

inline json bundle_to_json(const SplitBundle& e) { return {{"twists", e.twists()}}; }

inline SplitBundle bundle_from_json(const json& j) {
    const json& t = detail::field(j, "twists", "E");
    if (!t.is_array()) throw ParseError("E: 'twists' must be an array");
    std::vector<int> tw;
    for (const json& v : t) {
        if (!v.is_number_integer()) throw ParseError("E: twists must be integers");
        tw.push_back(v.get<int>());
    }
    return SplitBundle(std::move(tw));
}

inline json endo_to_json(const TwistedEndo& t) { return {{"twist", t.twist}, {"entries", matrix_to_json(t.entries)}}; }

inline TwistedEndo endo_from_json(const json& j, const SplitBundle& e, const std::string& where) {
    const int twist = detail::integer_field(j, "twist", where);
    const json& rows = detail::field(j, "entries", where);
    const std::size_t r = e.rank();
    if (!rows.is_array() || rows.size() != r) throw ParseError(where + ": entries must be an r x r array");
    Matrix<UniPoly> m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != r) throw ParseError(where + ": entries must be an r x r array");
        for (std::size_t k = 0; k < r; ++k) m(i, k) = parse_unipoly(detail::text_of(rows[i][k], where), 'x');
    }
    return TwistedEndo(e, twist, std::move(m));
}

inline json curve_to_json(const SpectralCurve& s) { return {{"chi", to_string(s.chi())}, {"a", s.a()}, {"r", s.r()}}; }

inline json spectral_to_json(const SpectralData& s) {
    json j = curve_to_json(s.curve());
    j["psi"] = to_string(s.psi());
    j["psi_denominator"] = to_string(s.psi_denominator());
    j["b"] = s.b();
    return j;
}

inline SpectralCurve curve_from_json(const json& j) {
    const BiPoly chi = parse_bipoly(detail::text_of(detail::field(j, "chi", "spectral"), "spectral chi"));
    const int a = detail::integer_field(j, "a", "spectral");
    if (j.contains("r") && detail::integer_field(j, "r", "spectral") != chi.degree())
        throw ValidationError("spectral: r does not match the t-degree of chi");
    return SpectralCurve(chi, a);
}

inline SpectralData spectral_from_json(const json& j) {
    const SpectralCurve curve = curve_from_json(j);
    const BiPoly psi = parse_bipoly(detail::text_of(detail::field(j, "psi", "spectral"), "spectral psi"));
    UniPoly den(1);
    if (j.contains("psi_denominator")) den = parse_unipoly(detail::text_of(j["psi_denominator"], "psi_denominator"));
    return SpectralData(curve, psi, den, detail::integer_field(j, "b", "spectral"));
}

inline json certificate_to_json(const FieldCertificate& c) {
    json fiber = json::array();
    for (const auto& [x, ok] : c.fiber) fiber.push_back({{"x", to_string(x)}, {"ok", ok}});
    return {{"commutation", c.commutation}, {"fiber", fiber}, {"unique", c.unique}};
}

inline json integrality_to_json(const IntegralityCertificate& c) {
    json j = {{"integral", c.integral},
              {"squarefree", c.squarefree},
              {"irreducible", c.irreducible},
              {"witness", c.witness}};
    if (c.factor) j["factor"] = to_string(*c.factor);
    if (c.geometric_warning) j["geometric_warning"] = *c.geometric_warning;
    return j;
}

/// Hecke data, an optional pair on E, and optional spectral data.
struct InstanceDocument {
    HeckeData hecke;
    std::optional<HiggsPair> pair;
    std::optional<SpectralData> spectral;

    const HiggsPair& require_pair() const {
        if (!pair) throw ValidationError("document has no E/Theta/ThetaPrime");
        return *pair;
    }
};

inline json instance_to_json(const HeckeData& h, const std::optional<HiggsPair>& p,
                             const std::optional<SpectralData>& s) {
    json j;
    j["hecke"] = hecke_to_json(h);
    if (p) {
        j["E"] = bundle_to_json(p->bundle());
        j["Theta"] = endo_to_json(p->theta());
        j["ThetaPrime"] = endo_to_json(p->theta_prime());
    }
    if (s) j["spectral"] = spectral_to_json(*s);
    return j;
}

inline json instance_to_json(const InstanceDocument& d) { return instance_to_json(d.hecke, d.pair, d.spectral); }

inline json instance_to_json(const VTwistedHiggsField& f) { return instance_to_json(f.hecke(), f.pair(), std::nullopt); }

inline InstanceDocument instance_from_json(const json& j) {
    try {
        InstanceDocument d;
        d.hecke = hecke_from_json(detail::field(j, "hecke", "document"));
        const bool has_e = j.contains("E"), has_t = j.contains("Theta"), has_tp = j.contains("ThetaPrime");
        if (has_e || has_t || has_tp) {
            if (!(has_e && has_t && has_tp)) throw ParseError("document: E, Theta and ThetaPrime must appear together");
            const SplitBundle e = bundle_from_json(j["E"]);
            TwistedEndo theta = endo_from_json(j["Theta"], e, "Theta");
            TwistedEndo theta_prime = endo_from_json(j["ThetaPrime"], e, "ThetaPrime");
            if (theta.twist != d.hecke.a || theta_prime.twist != d.hecke.b)
                throw ValidationError("document: Theta/ThetaPrime twists do not match hecke S/L");
            d.pair.emplace(std::move(theta), std::move(theta_prime));
        }
        if (j.contains("spectral")) d.spectral = spectral_from_json(j["spectral"]);
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
}

}  // namespace vtwist

#endif  // VTWIST_JSON_IO_HPP
