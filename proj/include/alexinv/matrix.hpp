#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alexinv/rational.hpp"

namespace alexinv {

template <class T> using Matrix = std::vector<std::vector<T>>;
using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline bool is_zero(const Rational &x) { return x == 0; }
inline bool is_zero(const Integer &x) { return x == 0; }

namespace detail {
template <class T> std::size_t column_count(const Matrix<T> &a, std::size_t cols) {
    if (a.empty()) return cols;
    for (const auto &row : a)
        if (row.size() != a.front().size()) fail(ErrorKind::Validation, "ragged matrix");
    return a.front().size();
}
} // namespace detail

// ---------------------------------------------------------------------------
// Smith normal form over Z.

/// Nonzero invariant factors d1 | d2 | ... (all positive).
inline std::vector<Integer> smith_invariants(IntegerMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = detail::column_count(a, 0);
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: nonzero entry of smallest absolute value in the trailing block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto &row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto &row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

struct AbelianGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion; // each > 1, in divisibility order

    friend bool operator==(const AbelianGroupInvariants &, const AbelianGroupInvariants &) = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
        for (const auto &d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
        return s.empty() ? "0" : s;
    }
};

/// Z^cols modulo the row space of a.
inline AbelianGroupInvariants cokernel(const IntegerMatrix &a, std::size_t cols) {
    if (!a.empty() && a.front().size() != cols) fail(ErrorKind::Validation, "column count mismatch");
    AbelianGroupInvariants g;
    auto d = smith_invariants(a);
    g.free_rank = cols - d.size();
    for (const auto &x : d)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

// ---------------------------------------------------------------------------
// Linear algebra over fields.

/// Rank over Q: rows are cleared of denominators, then fraction-free
/// (Bareiss) elimination runs over Z.
inline std::size_t rational_rank(const RationalMatrix &a) {
    const std::size_t cols = detail::column_count(a, 0);
    IntegerMatrix m;
    for (const auto &row : a) {
        Integer den = 1;
        for (const auto &x : row) den = lcm_of(den, x.get_den());
        std::vector<Integer> r;
        for (const auto &x : row) r.emplace_back(Integer(x.get_num() * (den / x.get_den())));
        m.push_back(std::move(r));
    }
    const std::size_t rows = m.size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Rank over any field type with +, -, *, / and an is_zero overload.
template <class F> std::size_t field_rank(Matrix<F> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = detail::column_count(a, 0);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        const F inv = F(1) / a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (is_zero(a[i][c])) continue;
            const F f = a[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix &a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

/// Basis of {v : a v = 0}; cols is needed when a has no rows.
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t cols) {
    if (!a.empty() && a.front().size() != cols) fail(ErrorKind::Validation, "column count mismatch");
    auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank over Q of an integer matrix.
inline std::size_t integer_rank(const IntegerMatrix &a) { return smith_invariants(a).size(); }

/// Determinant over Q by elimination.
inline Rational determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

} // namespace alexinv
