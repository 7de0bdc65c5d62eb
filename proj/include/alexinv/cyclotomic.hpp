#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "alexinv/laurent.hpp"
#include "alexinv/upoly.hpp"

namespace alexinv {

inline long euler_phi(long m) {
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Phi_M over Q, obtained by dividing x^M - 1 by the Phi_d for proper divisors d.
inline const UPoly &cyclotomic_polynomial(long m) {
    if (m < 1) fail(ErrorKind::Validation, "cyclotomic_polynomial needs M >= 1");
    static std::mutex lock;
    static std::map<long, UPoly> cache;
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    UPoly p = UPoly::monomial(static_cast<std::size_t>(m)) - UPoly::constant(1);
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        UPoly q;
        divides(cyclotomic_polynomial(d), p, &q);
        p = std::move(q);
    }
    std::lock_guard<std::mutex> g(lock);
    return cache.emplace(m, std::move(p)).first->second;
}

/// Element of Q(zeta_M) = Q[x]/Phi_M(x), x standing for exp(2 pi i / M).
/// Binary operations on elements of different conductors lift both to the
/// lcm conductor.
class CyclotomicElement {
  public:
    CyclotomicElement() = default;
    CyclotomicElement(long conductor, const UPoly &rep) : m_(conductor) {
        if (m_ < 1) fail(ErrorKind::Validation, "conductor must be positive");
        p_ = rep % cyclotomic_polynomial(m_);
    }
    explicit CyclotomicElement(const Rational &a, long conductor = 1) : CyclotomicElement(conductor, UPoly::constant(a)) {}

    /// zeta_M^k.
    static CyclotomicElement root_power(long conductor, long k) {
        long e = ((k % conductor) + conductor) % conductor;
        return CyclotomicElement(conductor, UPoly::monomial(static_cast<std::size_t>(e)));
    }

    long conductor() const { return m_; }
    const UPoly &representative() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    /// Coefficients in the power basis, length phi(M).
    std::vector<Rational> coeffs() const {
        std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m_)), Rational(0));
        for (std::size_t i = 0; i < p_.coeffs().size(); ++i) c[i] = p_.coeffs()[i];
        return c;
    }

    /// Same element viewed in Q(zeta_L), M | L.
    CyclotomicElement lifted(long l) const {
        if (l % m_) fail(ErrorKind::Validation, "lift target must be a multiple of the conductor");
        if (l == m_) return *this;
        return CyclotomicElement(l, p_.inflate(static_cast<std::size_t>(l / m_)));
    }

    friend CyclotomicElement operator+(const CyclotomicElement &a, const CyclotomicElement &b) {
        long l = std::lcm(a.m_, b.m_);
        return CyclotomicElement(l, a.lifted(l).p_ + b.lifted(l).p_);
    }
    friend CyclotomicElement operator-(const CyclotomicElement &a, const CyclotomicElement &b) {
        long l = std::lcm(a.m_, b.m_);
        return CyclotomicElement(l, a.lifted(l).p_ - b.lifted(l).p_);
    }
    CyclotomicElement operator-() const { return CyclotomicElement(m_, -p_); }
    friend CyclotomicElement operator*(const CyclotomicElement &a, const CyclotomicElement &b) {
        long l = std::lcm(a.m_, b.m_);
        return CyclotomicElement(l, a.lifted(l).p_ * b.lifted(l).p_);
    }
    friend bool operator==(const CyclotomicElement &a, const CyclotomicElement &b) {
        long l = std::lcm(a.m_, b.m_);
        return a.lifted(l).p_ == b.lifted(l).p_;
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    CyclotomicElement inverse() const {
        if (is_zero()) fail(ErrorKind::ZeroInput, "inverse of zero in a cyclotomic field");
        UPoly r0 = cyclotomic_polynomial(m_), r1 = p_;
        UPoly s0, s1 = UPoly::constant(1);
        while (r1.degree() > 0) {
            auto [q, r] = divmod(r0, r1);
            UPoly s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r1 is a nonzero constant because Phi_M is irreducible.
        return CyclotomicElement(m_, Rational(1 / r1.coeff(0)) * s1);
    }
    friend CyclotomicElement operator/(const CyclotomicElement &a, const CyclotomicElement &b) { return a * b.inverse(); }

    std::string to_string() const {
        if (m_ == 1 || p_.degree() <= 0) return p_.coeff(0).get_str();
        LaurentPolynomial lp = LaurentPolynomial::from_upoly(p_);
        return lp.to_string({"z" + std::to_string(m_)});
    }

  private:
    long m_ = 1;
    UPoly p_;
};

inline bool is_zero(const CyclotomicElement &x) { return x.is_zero(); }

/// Torsion character with coordinates in [0,1).
inline std::vector<Rational> reduce_character(const std::vector<Rational> &chi) {
    std::vector<Rational> out;
    out.reserve(chi.size());
    for (const auto &c : chi) out.push_back(frac_of(c));
    return out;
}

inline long character_conductor(const std::vector<Rational> &chi) {
    Integer m = 1;
    for (const auto &c : chi) m = lcm_of(m, c.get_den());
    return to_long(m);
}

/// Substitute t_i -> exp(2 pi i chi_i).
inline CyclotomicElement evaluate_character(const LaurentPolynomial &p, const std::vector<Rational> &chi) {
    if (chi.size() != p.var_count()) fail(ErrorKind::Validation, "character length differs from the number of variables");
    const std::vector<Rational> red = reduce_character(chi);
    const long m = character_conductor(red);
    std::vector<long> steps;
    for (const auto &c : red) steps.push_back(to_long(Integer(c.get_num() * (m / c.get_den()))));
    std::vector<Rational> dense(static_cast<std::size_t>(m), Rational(0));
    for (const auto &[e, c] : p.terms()) {
        long k = 0;
        for (std::size_t i = 0; i < e.size(); ++i) k = (k + (e[i] % m) * steps[i]) % m;
        k = (k + m) % m;
        dense[static_cast<std::size_t>(k)] += c;
    }
    return CyclotomicElement(m, UPoly(std::move(dense)));
}

} // namespace alexinv
