// Independent reference computations used by the test suites. Nothing here
// calls into the library's algorithms beyond its value types.
#pragma once

#include <complex>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "alexinv/laurent.hpp"
#include "alexinv/matrix.hpp"

namespace oracle {

using alexinv::Integer;
using alexinv::LaurentPolynomial;
using alexinv::Rational;

inline std::complex<double> eval_numeric(const LaurentPolynomial &p, const std::vector<double> &angles) {
    std::complex<double> acc = 0;
    for (const auto &[e, c] : p.terms()) {
        double arg = 0;
        for (std::size_t i = 0; i < e.size(); ++i) arg += static_cast<double>(e[i]) * angles[i];
        acc += c.get_d() * std::polar(1.0, 2 * M_PI * arg);
    }
    return acc;
}

/// Determinant by Leibniz expansion along the first row (small sizes only).
inline Rational laplace_det(const std::vector<std::vector<Rational>> &m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(row);
        }
        Rational term = m[0][j] * laplace_det(sub);
        det += (j % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t> &)> &fn) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(std::min(k, n)), true);
    if (k > n) return;
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) idx.push_back(i);
        fn(idx);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

/// Rank as the largest size of a nonvanishing minor.
inline std::size_t minor_rank(const std::vector<std::vector<Rational>> &m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        bool found = false;
        for_each_subset(rows, k, [&](const std::vector<std::size_t> &ri) {
            if (found) return;
            for_each_subset(cols, k, [&](const std::vector<std::size_t> &ci) {
                if (found) return;
                std::vector<std::vector<Rational>> sub;
                for (auto i : ri) {
                    std::vector<Rational> row;
                    for (auto j : ci) row.push_back(m[i][j]);
                    sub.push_back(row);
                }
                if (laplace_det(sub) != 0) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t gauss_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Row space of a contained in the row space of b.
inline bool row_space_within(const std::vector<std::vector<Rational>> &a, const std::vector<std::vector<Rational>> &b) {
    auto both = b;
    both.insert(both.end(), a.begin(), a.end());
    return gauss_rank(both) == gauss_rank(b);
}

/// k-th determinantal divisor: gcd of all k x k minors.
inline Integer determinantal_divisor(const std::vector<std::vector<Integer>> &m, std::size_t k) {
    Integer g = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t> &ri) {
        for_each_subset(cols, k, [&](const std::vector<std::size_t> &ci) {
            std::vector<std::vector<Rational>> sub;
            for (auto i : ri) {
                std::vector<Rational> row;
                for (auto j : ci) row.emplace_back(m[i][j]);
                sub.push_back(row);
            }
            Rational d = laplace_det(sub);
            g = alexinv::gcd_of(g, d.get_num());
        });
    });
    return g;
}

inline LaurentPolynomial random_univariate(std::mt19937 &rng, int max_deg, int coeff = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-coeff, coeff);
    std::vector<Rational> cs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(c(rng));
    if (cs.back() == 0) cs.back() = 1;
    return LaurentPolynomial::from_upoly(alexinv::UPoly(cs));
}

inline LaurentPolynomial random_laurent(std::mt19937 &rng, std::size_t vars, int terms, int span = 3) {
    std::uniform_int_distribution<int> e(-span, span), c(-5, 5);
    LaurentPolynomial p(vars);
    for (int k = 0; k < terms; ++k) {
        alexinv::Exponent ex(vars);
        for (auto &x : ex) x = e(rng);
        p.add_term(ex, Rational(c(rng)));
    }
    return p;
}

} // namespace oracle
