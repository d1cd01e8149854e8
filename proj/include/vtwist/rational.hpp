#ifndef VTWIST_RATIONAL_HPP
#define VTWIST_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "vtwist/errors.hpp"

namespace vtwist {

using Integer = mpz_class;
/// Exact rational, always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational invert_unit(const Rational& q) {
    if (sgn(q) == 0) throw DivisionByZero("division by zero rational");
    return Rational(1) / q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses `[+-]digits` or `[+-]digits/digits`, ignoring surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto bad = [&]() { return ParseError("malformed rational '" + std::string(text) + "'"); };
    if (s.empty()) throw bad();
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw bad();
    if (pos < s.size()) {
        if (s[pos] != '/') throw bad();
        std::size_t den_start = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start || pos != s.size()) throw bad();
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

inline Integer integer_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer integer_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// n/d in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw DivisionByZero("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// floor(q) as an Integer.
inline Integer floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

}  // namespace vtwist

#endif  // VTWIST_RATIONAL_HPP
