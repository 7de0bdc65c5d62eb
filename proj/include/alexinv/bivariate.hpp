#pragma once

#include <vector>

#include "alexinv/laurent.hpp"
#include "alexinv/upoly.hpp"

namespace alexinv {

/// d/dt_i of a Laurent polynomial.
inline LaurentPolynomial derivative(const LaurentPolynomial &p, std::size_t i) {
    LaurentPolynomial r(p.var_count());
    for (const auto &[e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponent f = e;
        f[i] -= 1;
        r.add_term(f, c * e[i]);
    }
    return r;
}

namespace detail {

/// Polynomial in y with coefficients in Q[x]; index j is the y^j coefficient.
using BiPoly = std::vector<UPoly>;

inline void trim(BiPoly &a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline BiPoly to_bipoly(const LaurentPolynomial &p) {
    if (p.var_count() != 2 || !p.is_polynomial()) fail(ErrorKind::Validation, "expected a polynomial in x, y");
    BiPoly out;
    for (const auto &[e, c] : p.terms()) {
        auto j = static_cast<std::size_t>(e[1]);
        if (out.size() <= j) out.resize(j + 1);
        out[j] = out[j] + UPoly::monomial(static_cast<std::size_t>(e[0]), c);
    }
    trim(out);
    return out;
}

inline LaurentPolynomial from_bipoly(const BiPoly &a) {
    LaurentPolynomial p(2);
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < a[j].coeffs().size(); ++i)
            p.add_term({static_cast<long>(i), static_cast<long>(j)}, a[j].coeffs()[i]);
    return p;
}

inline UPoly content(const BiPoly &a) {
    UPoly g;
    for (const auto &c : a) g = gcd(g, c);
    return g;
}

inline BiPoly primitive(const BiPoly &a) {
    UPoly c = content(a);
    if (c.is_zero()) return {};
    BiPoly out;
    for (const auto &x : a) {
        UPoly q;
        divides(c, x, &q);
        out.push_back(q);
    }
    return out;
}

/// lc(b)^k * a mod b in Q[x][y].
inline BiPoly pseudo_remainder(BiPoly a, const BiPoly &b) {
    const std::size_t n = b.size() - 1;
    const UPoly &lc = b.back();
    while (!a.empty() && a.size() - 1 >= n) {
        const std::size_t shift = a.size() - 1 - n;
        const UPoly la = a.back();
        for (auto &x : a) x = lc * x;
        for (std::size_t j = 0; j <= n; ++j) a[j + shift] = a[j + shift] - la * b[j];
        trim(a);
    }
    return a;
}

} // namespace detail

/// Greatest common divisor in Q[x, y], normalized to content 1 in Q[x][y]
/// times a monic gcd of the Q[x]-contents.
inline LaurentPolynomial bivariate_gcd(const LaurentPolynomial &p, const LaurentPolynomial &q) {
    using namespace detail;
    BiPoly a = to_bipoly(p), b = to_bipoly(q);
    if (a.empty()) return q;
    if (b.empty()) return p;
    UPoly c = gcd(content(a), content(b));
    a = primitive(a);
    b = primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) {
            a = {UPoly::constant(1)};
            break;
        }
        BiPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    a = primitive(a);
    for (auto &x : a) x = c * x;
    return from_bipoly(a);
}

inline bool is_constant(const LaurentPolynomial &p) {
    for (const auto &[e, c] : p.terms())
        for (long x : e)
            if (x != 0) return false;
    return true;
}

/// Squarefree in Q[x, y]: gcd(f, f_x, f_y) is constant.
inline bool is_squarefree(const LaurentPolynomial &f) {
    if (f.is_zero()) return false;
    LaurentPolynomial g = bivariate_gcd(f, derivative(f, 0));
    g = bivariate_gcd(g, derivative(f, 1));
    return is_constant(g);
}

} // namespace alexinv
