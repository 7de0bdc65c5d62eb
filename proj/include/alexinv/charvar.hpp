#pragma once

#include <functional>
#include <map>
#include <vector>

#include "alexinv/cyclotomic.hpp"
#include "alexinv/group.hpp"

namespace alexinv {

/// Torsion point of (C*)^r given by exponents in Q/Z.
struct CharacterPoint {
    std::vector<Rational> coords;

    CharacterPoint() = default;
    explicit CharacterPoint(std::vector<Rational> c) : coords(reduce_character(c)) {}

    bool is_trivial() const {
        for (const auto &c : coords)
            if (c != 0) return false;
        return true;
    }
};

inline Matrix<CyclotomicElement> evaluate_matrix(const AlexanderMatrix &a, const std::vector<Rational> &chi) {
    Matrix<CyclotomicElement> out;
    for (const auto &row : a.entries) {
        std::vector<CyclotomicElement> r;
        for (const auto &e : row) r.push_back(evaluate_character(e, chi));
        out.push_back(std::move(r));
    }
    return out;
}

/// dim H1 of the rank-one local system given by chi != 1.
inline long local_system_h1_dim(const AlexanderMatrix &a, const CharacterPoint &chi) {
    if (chi.is_trivial()) fail(ErrorKind::TrivialCharacterUnsupported, "character is trivial");
    if (chi.coords.size() != a.vars)
        fail(ErrorKind::Validation, "character has " + std::to_string(chi.coords.size()) + " coordinates, expected " +
                                        std::to_string(a.vars));
    if (a.cols == 0) return 0;
    const std::size_t rank = a.rows() ? field_rank(evaluate_matrix(a, chi.coords)) : 0;
    return static_cast<long>(a.cols) - 1 - static_cast<long>(rank);
}

inline long local_system_h1_dim(const GroupPresentation &p, const CharacterPoint &chi) {
    return local_system_h1_dim(fox_jacobian(p), chi);
}

/// Largest k with chi in V_k (0 when chi lies in no V_k).
inline long depth(const GroupPresentation &p, const CharacterPoint &chi) {
    return std::max(0L, local_system_h1_dim(p, chi));
}

inline bool charvar_membership(const GroupPresentation &p, long k, const CharacterPoint &chi) {
    if (k < 1) fail(ErrorKind::Validation, "V_k membership needs k >= 1");
    return local_system_h1_dim(p, chi) >= k;
}

/// Calls fn for every character of Z/n_1 x ... x Z/n_r (trivial one included).
inline void for_each_torsion_character(const std::vector<long> &n, const std::function<void(const CharacterPoint &)> &fn) {
    for (long x : n)
        if (x < 1) fail(ErrorKind::Validation, "cover orders must be >= 1");
    std::vector<long> k(n.size(), 0);
    while (true) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < n.size(); ++i) c.push_back(make_rational(k[i], n[i]));
        fn(CharacterPoint(c));
        std::size_t i = 0;
        while (i < n.size() && ++k[i] == n[i]) k[i++] = 0;
        if (i == n.size()) return;
    }
}

/// First Betti number of the unbranched abelian cover with deck group
/// Z/n_1 x ... x Z/n_r.
inline long unbranched_cover_betti(const GroupPresentation &p, const std::vector<long> &n) {
    if (n.size() != p.rank) fail(ErrorKind::Validation, "need one cover order per coordinate of phi");
    const AlexanderMatrix a = fox_jacobian(p);
    long total = static_cast<long>(p.rank);
    for_each_torsion_character(n, [&](const CharacterPoint &chi) {
        if (!chi.is_trivial()) total += std::max(0L, local_system_h1_dim(a, chi));
    });
    return total;
}

/// Presentations of sublinks keyed by sorted 0-based component subsets.
using SublinkData = std::map<std::vector<std::size_t>, GroupPresentation>;

/// First Betti number of the branched abelian cover with orders m_i.
inline long branched_cover_betti(const SublinkData &data, const std::vector<long> &m) {
    std::map<std::vector<std::size_t>, AlexanderMatrix> cache;
    long total = 0;
    for_each_torsion_character(m, [&](const CharacterPoint &chi) {
        std::vector<std::size_t> support;
        std::vector<Rational> reduced;
        for (std::size_t i = 0; i < chi.coords.size(); ++i)
            if (chi.coords[i] != 0) {
                support.push_back(i);
                reduced.push_back(chi.coords[i]);
            }
        if (support.empty()) return;
        auto it = cache.find(support);
        if (it == cache.end()) {
            auto d = data.find(support);
            if (d == data.end()) {
                std::string s;
                for (auto i : support) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
                fail(ErrorKind::MissingSublinkData, "no presentation for components {" + s + "}");
            }
            it = cache.emplace(support, fox_jacobian(d->second)).first;
        }
        total += std::max(0L, local_system_h1_dim(it->second, CharacterPoint(reduced)));
    });
    return total;
}

/// Depth at the diagonal character (omega, ..., omega).
inline long diagonal_multiplicity(const GroupPresentation &p, const Rational &omega) {
    Rational w = frac_of(omega);
    if (w == 0) fail(ErrorKind::TrivialCharacterUnsupported, "omega must be a nontrivial root of unity");
    return depth(p, CharacterPoint(std::vector<Rational>(p.rank, w)));
}

// ---------------------------------------------------------------------------
// Koszul model for generic arrangements.

/// Presentation matrix of coker(Lambda^{n+1} -> Lambda^n) over
/// Q[Z^r]/(t_1...t_r - 1), lifted to Q[Z^r] by appending (prod t - 1) e_I.
/// Columns are indexed by the n-subsets in lexicographic order.
inline AlexanderMatrix koszul_presentation(std::size_t r, std::size_t n) {
    if (n < 2 || n + 1 > r) fail(ErrorKind::Validation, "Koszul model needs 2 <= n <= r - 1");
    std::vector<std::vector<std::size_t>> basis_n, basis_n1;
    auto subsets = [&](std::size_t k, std::vector<std::vector<std::size_t>> &out) {
        std::vector<bool> mask(r, false);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
        do {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < r; ++i)
                if (mask[i]) s.push_back(i);
            out.push_back(s);
        } while (std::prev_permutation(mask.begin(), mask.end()));
    };
    subsets(n, basis_n);
    subsets(n + 1, basis_n1);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis_n.size(); ++i) index[basis_n[i]] = i;
    const LaurentPolynomial one = LaurentPolynomial::constant(r, 1);
    AlexanderMatrix a;
    a.vars = r;
    a.cols = basis_n.size();
    for (const auto &j : basis_n1) {
        std::vector<LaurentPolynomial> row(a.cols, LaurentPolynomial(r));
        for (std::size_t k = 0; k < j.size(); ++k) {
            std::vector<std::size_t> rest = j;
            rest.erase(rest.begin() + static_cast<long>(k));
            LaurentPolynomial c = LaurentPolynomial::variable(r, j[k]) - one;
            row[index[rest]] += (k % 2 == 0) ? c : -c;
        }
        a.entries.push_back(std::move(row));
    }
    LaurentPolynomial prod = LaurentPolynomial::monomial(Exponent(r, 1)) - one;
    for (std::size_t i = 0; i < a.cols; ++i) {
        std::vector<LaurentPolynomial> row(a.cols, LaurentPolynomial(r));
        row[i] = prod;
        a.entries.push_back(std::move(row));
    }
    return a;
}

/// Whether chi lies in the support of the Koszul module for (r, n).
inline bool koszul_support_membership(std::size_t r, std::size_t n, const CharacterPoint &chi) {
    if (chi.coords.size() != r) fail(ErrorKind::Validation, "character length must equal r");
    Rational sum = 0;
    for (const auto &c : chi.coords) sum += c;
    if (!is_integer(sum)) return false;
    const AlexanderMatrix a = koszul_presentation(r, n);
    return field_rank(evaluate_matrix(a, chi.coords)) < a.cols;
}

} // namespace alexinv
