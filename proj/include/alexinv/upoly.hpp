#pragma once

#include <utility>
#include <vector>

#include "alexinv/rational.hpp"

namespace alexinv {

/// Dense univariate polynomial over Q, coefficient i multiplies x^i. The zero
/// polynomial is the empty vector; otherwise the last coefficient is nonzero.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const Rational &a) { return UPoly(std::vector<Rational>{a}); }
    static UPoly monomial(std::size_t deg, const Rational &a = 1) {
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = a;
        return UPoly(std::move(c));
    }
    /// x - r
    static UPoly linear_root(const Rational &r) { return UPoly(std::vector<Rational>{Rational(-r), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational> &coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational &lead() const { return c_.back(); }

    /// Order of vanishing at 0.
    std::size_t low_degree() const {
        std::size_t i = 0;
        while (i < c_.size() && c_[i] == 0) ++i;
        return i;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto &a : r.c_) a = -a;
        return r;
    }
    friend UPoly operator+(const UPoly &a, const UPoly &b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }
    friend UPoly operator*(const UPoly &a, const UPoly &b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const Rational &s, const UPoly &a) {
        if (s == 0) return {};
        UPoly r = a;
        for (auto &x : r.c_) x *= s;
        return r;
    }
    friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }

    /// Euclidean division; divisor must be nonzero.
    friend std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b) {
        if (b.is_zero()) fail(ErrorKind::ZeroInput, "polynomial division by zero");
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
        const Rational inv = 1 / b.lead();
        for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
            const Rational q = rem[k + b.c_.size() - 1] * inv;
            quo[k] = q;
            if (q == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
        }
        rem.resize(b.c_.size() - 1);
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }

    Rational eval(const Rational &x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        return Rational(1 / lead()) * *this;
    }

    /// Substitute x -> x^k.
    UPoly inflate(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Rational> c((c_.size() - 1) * k + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
        return UPoly(std::move(c));
    }

    /// Divide by x^k (caller guarantees exactness).
    UPoly shift_down(std::size_t k) const {
        if (k >= c_.size()) return {};
        return UPoly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UPoly operator%(const UPoly &a, const UPoly &b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Exact quotient a / b, or nullopt-equivalent flag when b does not divide a.
inline bool divides(const UPoly &b, const UPoly &a, UPoly *quotient = nullptr) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = std::move(q);
    return true;
}

inline UPoly pow(const UPoly &a, unsigned e) {
    UPoly r = UPoly::constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

/// Multiplicity of the factor g in a (g nonconstant, a nonzero).
inline unsigned multiplicity(const UPoly &g, UPoly a) {
    unsigned m = 0;
    UPoly q;
    while (!a.is_zero() && divides(g, a, &q)) {
        ++m;
        a = std::move(q);
    }
    return m;
}

/// Scale to integer coefficients with content 1 and positive leading term.
inline std::vector<Integer> primitive_integer_coeffs(const UPoly &p) {
    Integer den = 1;
    for (const auto &c : p.coeffs()) den = lcm_of(den, c.get_den());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto &c : p.coeffs()) {
        Rational s = c * Rational(den);
        out.push_back(s.get_num());
        g = gcd_of(g, s.get_num());
    }
    if (g != 0) {
        if (out.back() < 0) g = -g;
        for (auto &z : out) z /= g;
    }
    return out;
}

/// Squarefree part (product of distinct irreducible factors), monic.
inline UPoly squarefree_part(const UPoly &p) {
    if (p.degree() <= 0) return UPoly::constant(1);
    UPoly g = gcd(p, p.derivative());
    UPoly q;
    divides(g, p, &q);
    return q.monic();
}

} // namespace alexinv
