#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "alexinv/laurent.hpp"

namespace alexinv {

/// Formal product  sign * t^shift * prod_v (1 - t^v)^{e_v}. Only identical
/// exponent vectors are merged; no other cancellation is attempted.
class FormalCycloProduct {
  public:
    explicit FormalCycloProduct(std::size_t vars = 1) : vars_(vars), shift_(vars, 0) {}

    /// (1 - t^v)^e
    static FormalCycloProduct factor(const Exponent &v, long e = 1) {
        FormalCycloProduct f(v.size());
        f.multiply_factor(v, e);
        return f;
    }

    std::size_t var_count() const { return vars_; }
    const std::map<Exponent, long> &factors() const { return factors_; }
    int sign() const { return sign_; }
    const Exponent &shift() const { return shift_; }
    bool is_unit() const { return factors_.empty(); }

    long exponent_of(const Exponent &v) const {
        auto it = factors_.find(v);
        return it == factors_.end() ? 0 : it->second;
    }

    void multiply_factor(const Exponent &v, long e) {
        if (v.size() != vars_) fail(ErrorKind::Validation, "factor vector has the wrong length");
        if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
            fail(ErrorKind::ZeroInput, "factor (1 - t^0) vanishes identically");
        if (e == 0) return;
        auto [it, inserted] = factors_.emplace(v, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
    }

    void multiply_unit(int sign, const Exponent &shift) {
        sign_ *= sign;
        for (std::size_t i = 0; i < vars_; ++i) shift_[i] += shift[i];
    }

    friend FormalCycloProduct operator*(FormalCycloProduct a, const FormalCycloProduct &b) {
        if (a.vars_ != b.vars_) fail(ErrorKind::Validation, "products over different rings");
        for (const auto &[v, e] : b.factors_) a.multiply_factor(v, e);
        a.multiply_unit(b.sign_, b.shift_);
        return a;
    }

    FormalCycloProduct inverse() const {
        FormalCycloProduct r(vars_);
        for (const auto &[v, e] : factors_) r.factors_.emplace(v, -e);
        r.sign_ = sign_;
        for (std::size_t i = 0; i < vars_; ++i) r.shift_[i] = -shift_[i];
        return r;
    }

    /// Equality of the formal data.
    friend bool operator==(const FormalCycloProduct &a, const FormalCycloProduct &b) {
        return a.vars_ == b.vars_ && a.factors_ == b.factors_ && a.sign_ == b.sign_ && a.shift_ == b.shift_;
    }
    /// Equality ignoring the unit tag.
    bool same_factors(const FormalCycloProduct &o) const { return vars_ == o.vars_ && factors_ == o.factors_; }

    /// t_i -> t for every i; v maps to the sum of its entries.
    FormalCycloProduct diagonal_specialize() const {
        FormalCycloProduct r(1);
        for (const auto &[v, e] : factors_) {
            long s = total_degree(v);
            if (s == 0) fail(ErrorKind::ZeroInput, "diagonal specialization produces the factor (1 - 1)");
            r.multiply_factor({s}, e);
        }
        r.sign_ = sign_;
        r.shift_ = {total_degree(shift_)};
        return r;
    }

    /// Multiply out; throws NotPolynomial when the denominator does not divide.
    LaurentPolynomial expand() const {
        LaurentPolynomial num = LaurentPolynomial::monomial(shift_, sign_);
        LaurentPolynomial den = LaurentPolynomial::constant(vars_, 1);
        for (const auto &[v, e] : factors_) {
            LaurentPolynomial f = LaurentPolynomial::constant(vars_, 1) - LaurentPolynomial::monomial(v);
            if (e > 0)
                num *= f.pow(static_cast<unsigned>(e));
            else
                den *= f.pow(static_cast<unsigned>(-e));
        }
        auto q = exact_divide(num, den);
        if (!q) fail(ErrorKind::NotPolynomial, "formal product " + to_string() + " is not a Laurent polynomial");
        return *q;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool any_shift = std::any_of(shift_.begin(), shift_.end(), [](long x) { return x != 0; });
        if (sign_ < 0) os << "-";
        if (any_shift) os << LaurentPolynomial::monomial(shift_).to_string();
        if (factors_.empty()) {
            if (!any_shift) os << "1";
            return os.str();
        }
        bool first = !any_shift;
        for (auto it = factors_.begin(); it != factors_.end(); ++it) {
            if (!first) os << " * ";
            first = false;
            os << "(1 - " << LaurentPolynomial::monomial(it->first).to_string() << ")";
            if (it->second != 1) os << "^" << it->second;
        }
        return os.str();
    }

  private:
    std::size_t vars_;
    std::map<Exponent, long> factors_;
    int sign_ = 1;
    Exponent shift_;
};

} // namespace alexinv
