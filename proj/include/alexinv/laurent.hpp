#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alexinv/rational.hpp"
#include "alexinv/upoly.hpp"

namespace alexinv {

using Exponent = std::vector<long>;

/// Graded lexicographic order; the last variable is the most significant in
/// the lexicographic tie-break (t1 < ... < tr).
struct GradedLexLess {
    bool operator()(const Exponent &a, const Exponent &b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline long total_degree(const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0L); }

/// Element of Q[t1^±1, ..., tr^±1]. No zero coefficient is ever stored.
class LaurentPolynomial {
  public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    explicit LaurentPolynomial(std::size_t vars = 1) : vars_(vars) {}

    static LaurentPolynomial constant(std::size_t vars, const Rational &c) {
        return monomial(Exponent(vars, 0), c);
    }
    static LaurentPolynomial monomial(Exponent e, const Rational &c = 1) {
        LaurentPolynomial p(e.size());
        if (c != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }
    static LaurentPolynomial variable(std::size_t vars, std::size_t i) {
        Exponent e(vars, 0);
        e[i] = 1;
        return monomial(std::move(e));
    }
    /// Univariate polynomial from dense coefficients, times t^shift.
    static LaurentPolynomial from_upoly(const UPoly &p, long shift = 0) {
        LaurentPolynomial r(1);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            if (p.coeffs()[i] != 0) r.terms_.emplace(Exponent{static_cast<long>(i) + shift}, p.coeffs()[i]);
        return r;
    }
    /// Univariate polynomial from integer coefficients c0 + c1 t + ...
    static LaurentPolynomial univariate(std::initializer_list<long> coeffs) {
        std::vector<Rational> c;
        for (long x : coeffs) c.emplace_back(x);
        return from_upoly(UPoly(std::move(c)));
    }

    std::size_t var_count() const { return vars_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponent &e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponent &e, const Rational &c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r = *this;
        for (auto &[e, c] : r.terms_) c = -c;
        return r;
    }
    LaurentPolynomial &operator+=(const LaurentPolynomial &o) {
        check_vars(o);
        for (const auto &[e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPolynomial &operator-=(const LaurentPolynomial &o) {
        check_vars(o);
        for (const auto &[e, c] : o.terms_) add_term(e, Rational(-c));
        return *this;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b) {
        a.check_vars(b);
        LaurentPolynomial r(a.vars_);
        Exponent e(a.vars_);
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend LaurentPolynomial operator*(const Rational &s, LaurentPolynomial a) {
        if (s == 0) return LaurentPolynomial(a.vars_);
        for (auto &[e, c] : a.terms_) c *= s;
        return a;
    }
    LaurentPolynomial &operator*=(const LaurentPolynomial &o) { return *this = *this * o; }
    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    LaurentPolynomial pow(unsigned n) const {
        LaurentPolynomial r = constant(vars_, 1), base = *this;
        while (n) {
            if (n & 1U) r *= base;
            n >>= 1U;
            if (n) base *= base;
        }
        return r;
    }

    /// Multiply by the monomial t^shift.
    LaurentPolynomial shifted(const Exponent &shift) const {
        LaurentPolynomial r(vars_);
        for (const auto &[e, c] : terms_) {
            Exponent f = e;
            for (std::size_t i = 0; i < vars_; ++i) f[i] += shift[i];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Componentwise minimum exponent (zero polynomial: all zeros).
    Exponent min_exponent() const {
        if (terms_.empty()) return Exponent(vars_, 0);
        Exponent m = terms_.begin()->first;
        for (const auto &[e, c] : terms_)
            for (std::size_t i = 0; i < vars_; ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }
    Exponent max_exponent() const {
        if (terms_.empty()) return Exponent(vars_, 0);
        Exponent m = terms_.begin()->first;
        for (const auto &[e, c] : terms_)
            for (std::size_t i = 0; i < vars_; ++i) m[i] = std::max(m[i], e[i]);
        return m;
    }

    bool is_polynomial() const {
        for (const auto &[e, c] : terms_)
            for (long x : e)
                if (x < 0) return false;
        return true;
    }

    /// Smallest total degree of a term (order of vanishing at the origin).
    /// The zero polynomial has no order; callers handle it.
    long order() const {
        long best = 0;
        bool first = true;
        for (const auto &[e, c] : terms_) {
            long d = total_degree(e);
            if (first || d < best) best = d;
            first = false;
        }
        return best;
    }

    /// Homogeneous component of lowest total degree.
    LaurentPolynomial lowest_form() const {
        LaurentPolynomial r(vars_);
        if (terms_.empty()) return r;
        long ord = order();
        for (const auto &[e, c] : terms_)
            if (total_degree(e) == ord) r.terms_.emplace(e, c);
        return r;
    }

    /// Drop every term of total degree > max_degree.
    LaurentPolynomial truncated(long max_degree) const {
        LaurentPolynomial r(vars_);
        for (const auto &[e, c] : terms_)
            if (total_degree(e) <= max_degree) r.terms_.emplace(e, c);
        return r;
    }

    Rational constant_term() const { return coefficient(Exponent(vars_, 0)); }

    /// Substitute t_i -> images[i] for a polynomial (nonnegative exponents).
    /// When max_degree >= 0 all intermediate products are truncated at that
    /// total degree, which is exact for images without constant terms.
    LaurentPolynomial compose(const std::vector<LaurentPolynomial> &images, long max_degree = -1) const {
        if (images.size() != vars_) fail(ErrorKind::Validation, "compose: wrong number of images");
        if (!is_polynomial()) fail(ErrorKind::NotPolynomial, "compose requires nonnegative exponents");
        const std::size_t out_vars = images.empty() ? 1 : images.front().var_count();
        auto trunc = [&](LaurentPolynomial p) { return max_degree >= 0 ? p.truncated(max_degree) : p; };
        std::vector<std::vector<LaurentPolynomial>> powers(vars_);
        LaurentPolynomial result(out_vars);
        for (const auto &[e, c] : terms_) {
            LaurentPolynomial term = constant(out_vars, c);
            for (std::size_t i = 0; i < vars_ && !term.is_zero(); ++i) {
                if (e[i] == 0) continue;
                auto &pw = powers[i];
                if (pw.empty()) pw.push_back(constant(out_vars, 1));
                while (static_cast<long>(pw.size()) <= e[i]) pw.push_back(trunc(pw.back() * images[i]));
                term = trunc(term * pw[static_cast<std::size_t>(e[i])]);
            }
            result += term;
        }
        return result;
    }

    std::string to_string(const std::vector<std::string> &names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto &[e, c] = *it;
            bool is_const = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
            Rational a = c;
            if (first) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            a = abs(a);
            bool unit_coeff = a == 1 && !is_const;
            if (!unit_coeff) os << a.get_str();
            bool need_star = !unit_coeff;
            for (std::size_t i = 0; i < vars_; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                need_star = true;
                os << var_name(names, i);
                if (e[i] != 1) os << "^" << e[i];
            }
            first = false;
        }
        return os.str();
    }

  private:
    std::string var_name(const std::vector<std::string> &names, std::size_t i) const {
        if (i < names.size()) return names[i];
        if (vars_ == 1) return "t";
        return "t" + std::to_string(i + 1);
    }
    void check_vars(const LaurentPolynomial &o) const {
        if (o.vars_ != vars_) fail(ErrorKind::Validation, "Laurent polynomials over different rings");
    }

    std::size_t vars_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// One-variable operations. Results are canonical under the unit group {±t^a}.

/// Dense form p = t^shift * u(t) with u(0) != 0.
inline UPoly to_upoly(const LaurentPolynomial &p, long *shift = nullptr) {
    if (p.var_count() != 1) fail(ErrorKind::Validation, "expected a one-variable Laurent polynomial");
    if (p.is_zero()) {
        if (shift) *shift = 0;
        return {};
    }
    long low = p.min_exponent()[0];
    long high = p.max_exponent()[0];
    std::vector<Rational> c(static_cast<std::size_t>(high - low + 1), Rational(0));
    for (const auto &[e, a] : p.terms()) c[static_cast<std::size_t>(e[0] - low)] = a;
    if (shift) *shift = low;
    return UPoly(std::move(c));
}

/// ±t^a * p with lowest term in degree 0 and positive lowest coefficient.
inline LaurentPolynomial normalize_unit(const LaurentPolynomial &p) {
    if (p.is_zero()) fail(ErrorKind::ZeroInput, "normalize_unit of the zero polynomial");
    UPoly u = to_upoly(p);
    if (u.coeff(0) < 0) u = -u;
    return LaurentPolynomial::from_upoly(u);
}

/// Canonical generator of the ideal (p, q) in Q[t, t^-1]. Content is carried by
/// the gcd of the inputs' leading data only up to units, so the result is
/// monic-normalized on the low end.
inline LaurentPolynomial univariate_gcd(const LaurentPolynomial &p, const LaurentPolynomial &q) {
    if (p.is_zero() && q.is_zero()) fail(ErrorKind::ZeroInput, "gcd(0, 0)");
    if (q.is_zero()) return normalize_unit(p);
    if (p.is_zero()) return normalize_unit(q);
    UPoly g = gcd(to_upoly(p), to_upoly(q));
    g = Rational(1 / g.coeff(0)) * g;
    return LaurentPolynomial::from_upoly(g);
}

/// True when b divides a in Q[t, t^-1]; the quotient is stored if requested.
inline bool univariate_divides(const LaurentPolynomial &b, const LaurentPolynomial &a,
                               LaurentPolynomial *quotient = nullptr) {
    if (b.is_zero()) fail(ErrorKind::ZeroInput, "division by the zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = LaurentPolynomial(1);
        return true;
    }
    long sa = 0, sb = 0;
    UPoly ua = to_upoly(a, &sa), ub = to_upoly(b, &sb);
    UPoly q;
    if (!divides(ub, ua, &q)) return false;
    if (quotient) *quotient = LaurentPolynomial::from_upoly(q, sa - sb);
    return true;
}

inline bool equal_up_to_unit(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize_unit(a) == normalize_unit(b);
}

/// deg gcd(p, t^n - 1): number of common roots (t^n - 1 is squarefree).
inline long common_root_count(const LaurentPolynomial &p, long n) {
    if (p.is_zero()) fail(ErrorKind::ZeroInput, "common_root_count of the zero polynomial");
    if (n < 1) fail(ErrorKind::Validation, "common_root_count needs n >= 1");
    UPoly tn = UPoly::monomial(static_cast<std::size_t>(n)) - UPoly::constant(1);
    return gcd(to_upoly(p), tn).degree();
}

// ---------------------------------------------------------------------------
// Multivariate exact division.

/// a / b when b divides a in the Laurent ring, nullopt otherwise.
inline std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    if (b.is_zero()) fail(ErrorKind::ZeroInput, "division by the zero polynomial");
    const std::size_t n = a.var_count();
    if (a.is_zero()) return LaurentPolynomial(n);
    // Shift both into the polynomial ring; b' is then free of monomial factors
    // and divisibility in the Laurent ring equals divisibility of polynomials.
    Exponent ma = a.min_exponent(), mb = b.min_exponent();
    Exponent neg_a(n), neg_b(n);
    for (std::size_t i = 0; i < n; ++i) {
        neg_a[i] = -ma[i];
        neg_b[i] = -mb[i];
    }
    LaurentPolynomial rem = a.shifted(neg_a);
    const LaurentPolynomial div = b.shifted(neg_b);
    const auto &[lead_e, lead_c] = *div.terms().rbegin();
    LaurentPolynomial quo(n);
    while (!rem.is_zero()) {
        const auto &[re, rc] = *rem.terms().rbegin();
        Exponent qe(n);
        for (std::size_t i = 0; i < n; ++i) {
            qe[i] = re[i] - lead_e[i];
            if (qe[i] < 0) return std::nullopt;
        }
        LaurentPolynomial qt = LaurentPolynomial::monomial(qe, rc / lead_c);
        quo += qt;
        rem -= qt * div;
    }
    Exponent back(n);
    for (std::size_t i = 0; i < n; ++i) back[i] = ma[i] - mb[i];
    return quo.shifted(back);
}

} // namespace alexinv
