#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "alexinv/error.hpp"

namespace alexinv {

using Integer = mpz_class;
/// Canonical (reduced, positive denominator) rational. mpq_class keeps that
/// invariant as long as values are built through the helpers below.
using Rational = mpq_class;

inline Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0) fail(ErrorKind::ZeroInput, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

inline Integer floor_of(const Rational &q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational &q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Representative of q modulo 1 in [0, 1).
inline Rational frac_of(const Rational &q) {
    Rational r = q - Rational(floor_of(q));
    return r;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline Integer gcd_of(const Integer &a, const Integer &b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm_of(const Integer &a, const Integer &b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long to_long(const Integer &z) {
    if (!z.fits_slong_p()) fail(ErrorKind::Unsupported, "integer does not fit a machine word: " + z.get_str());
    return z.get_si();
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

/// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::Parse, "empty rational");
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return make_rational(n, d);
}

} // namespace alexinv
