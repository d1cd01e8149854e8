#ifndef VTWIST_TEXT_HPP
#define VTWIST_TEXT_HPP

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "vtwist/number_field.hpp"
#include "vtwist/poly.hpp"

// Polynomial text grammar shared by every file format and report:
//
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | ('x' | 't') ['^' integer]
//
// Whitespace is ignored. Printing is canonical: terms by descending t-degree,
// then descending x-degree, written as coeff*x^i*t^j.

namespace vtwist {

namespace detail {

class PolyParser {
   public:
    explicit PolyParser(std::string_view text) : text_(text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    // (x-degree, t-degree) -> coefficient
    std::map<std::pair<int, int>, Rational> parse() {
        if (s_.empty()) fail("empty polynomial");
        std::map<std::pair<int, int>, Rational> terms;
        bool first = true;
        while (pos_ < s_.size() || first) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [key, coeff] = term();
            terms[key] += sign * coeff;
        }
        return terms;
    }

   private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("malformed polynomial '" + std::string(text_) + "': " + why + " at offset " +
                         std::to_string(pos_));
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Integer(s_.substr(start, pos_ - start));
    }

    int exponent() {
        Integer e = integer();
        if (e > 1000) fail("exponent too large");
        return static_cast<int>(e.get_si());
    }

    std::pair<std::pair<int, int>, Rational> term() {
        Rational coeff = 1;
        int xdeg = 0, tdeg = 0;
        for (;;) {
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Integer num = integer();
                Integer den = 1;
                if (peek() == '/') {
                    ++pos_;
                    den = integer();
                    if (den == 0) fail("zero denominator");
                }
                coeff *= make_rational(num, den);
            } else if (c == 'x' || c == 't') {
                ++pos_;
                int e = 1;
                if (peek() == '^') {
                    ++pos_;
                    e = exponent();
                }
                (c == 'x' ? xdeg : tdeg) += e;
            } else {
                fail("expected a coefficient or a variable");
            }
            if (peek() != '*') break;
            ++pos_;
        }
        return {{xdeg, tdeg}, coeff};
    }

    std::string_view text_;
    std::string s_;
    std::size_t pos_ = 0;
};

inline std::string monomial_text(const Rational& c, int xdeg, int tdeg, bool leading) {
    std::string out;
    const bool negative = sgn(c) < 0;
    if (leading) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string vars;
    auto append_var = [&](char v, int e) {
        if (e == 0) return;
        if (!vars.empty()) vars += "*";
        vars += v;
        if (e > 1) vars += "^" + std::to_string(e);
    };
    append_var('x', xdeg);
    append_var('t', tdeg);
    if (vars.empty()) return out + mag.get_str();
    if (mag == 1) return out + vars;
    return out + mag.get_str() + "*" + vars;
}

}  // namespace detail

inline BiPoly parse_bipoly(std::string_view text) {
    const auto terms = detail::PolyParser(text).parse();
    int tmax = 0;
    for (const auto& [key, c] : terms) tmax = std::max(tmax, key.second);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(tmax) + 1);
    for (const auto& [key, c] : terms) {
        auto& row = rows[static_cast<std::size_t>(key.second)];
        if (row.size() <= static_cast<std::size_t>(key.first)) row.resize(static_cast<std::size_t>(key.first) + 1);
        row[static_cast<std::size_t>(key.first)] += c;
    }
    std::vector<UniPoly> coeffs;
    for (auto& row : rows) coeffs.emplace_back(std::move(row));
    return BiPoly(std::move(coeffs));
}

/// Parses a polynomial in the single variable `var` ('x' or 't').
inline UniPoly parse_unipoly(std::string_view text, char var = 'x') {
    const BiPoly p = parse_bipoly(text);
    if (var == 'x') {
        if (p.degree() > 0) throw ParseError("unexpected variable t in '" + std::string(text) + "'");
        return p.coeff(0);
    }
    std::vector<Rational> c;
    for (const UniPoly& k : p.coeffs()) {
        if (k.degree() > 0) throw ParseError("unexpected variable x in '" + std::string(text) + "'");
        c.push_back(k.coeff(0));
    }
    return UniPoly(std::move(c));
}

inline std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (int j = p.degree(); j >= 0; --j) {
        const UniPoly& c = p.coeffs()[static_cast<std::size_t>(j)];
        for (int i = c.degree(); i >= 0; --i) {
            const Rational& a = c.coeffs()[static_cast<std::size_t>(i)];
            if (sgn(a) == 0) continue;
            out += detail::monomial_text(a, i, j, leading);
            leading = false;
        }
    }
    return out;
}

inline std::string to_string(const UniPoly& p, char var = 'x') {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& a = p.coeffs()[static_cast<std::size_t>(i)];
        if (sgn(a) == 0) continue;
        out += detail::monomial_text(a, var == 'x' ? i : 0, var == 'x' ? 0 : i, leading);
        leading = false;
    }
    return out;
}

/// Number field element as its representative polynomial in t.
inline std::string to_string(const NumberFieldElement& e) { return to_string(e.representative(), 't'); }

}  // namespace vtwist

#endif  // VTWIST_TEXT_HPP
