#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alexinv/laurent.hpp"
#include "alexinv/matrix.hpp"

namespace alexinv {

struct Letter {
    std::size_t gen = 0; // 0-based generator index
    int exp = 1;         // +1 or -1
    friend bool operator==(const Letter &, const Letter &) = default;
};

/// Word in a free group. Stored as given; free_reduce gives the normal form.
using GroupWord = std::vector<Letter>;

inline GroupWord free_reduce(const GroupWord &w) {
    GroupWord out;
    for (const auto &l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline GroupWord inverse(const GroupWord &w) {
    GroupWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

inline GroupWord concat(GroupWord a, const GroupWord &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline GroupWord commutator(const GroupWord &a, const GroupWord &b) {
    return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

/// "x1 x2^-1 ..." with 1-based indices; the empty word prints as "1".
inline std::string to_string(const GroupWord &w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto &l : w) {
        if (!s.empty()) s += " ";
        s += "x" + std::to_string(l.gen + 1);
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

/// Finite presentation with a homomorphism phi onto Z^rank.
struct GroupPresentation {
    std::size_t generators = 0;
    std::vector<GroupWord> relators;
    std::vector<std::vector<long>> phi; // one vector of length rank per generator
    std::size_t rank = 1;

    std::vector<long> phi_of(const GroupWord &w) const {
        std::vector<long> v(rank, 0);
        for (const auto &l : w)
            for (std::size_t i = 0; i < rank; ++i) v[i] += l.exp * phi[l.gen][i];
        return v;
    }

    /// Checks indices, phi(relator) = 0 and surjectivity of phi.
    void validate() const {
        if (phi.size() != generators)
            fail(ErrorKind::Validation, "phi must list one image per generator");
        for (const auto &v : phi)
            if (v.size() != rank) fail(ErrorKind::Validation, "phi images must have length " + std::to_string(rank));
        for (std::size_t r = 0; r < relators.size(); ++r)
            for (std::size_t k = 0; k < relators[r].size(); ++k) {
                const auto &l = relators[r][k];
                if (l.gen >= generators || (l.exp != 1 && l.exp != -1))
                    fail(ErrorKind::BadWord, "relator " + std::to_string(r + 1) + " letter " + std::to_string(k + 1) +
                                                 " is out of range");
            }
        for (std::size_t r = 0; r < relators.size(); ++r) {
            auto v = phi_of(relators[r]);
            for (long x : v)
                if (x != 0)
                    fail(ErrorKind::InvalidAbelianization,
                         "phi does not kill relator " + std::to_string(r + 1) + " (" + to_string(relators[r]) + ")");
        }
        if (rank > 0) {
            IntegerMatrix m;
            for (const auto &v : phi) {
                std::vector<Integer> row;
                for (long x : v) row.emplace_back(x);
                m.push_back(std::move(row));
            }
            auto g = cokernel(m, rank);
            if (g.free_rank != 0 || !g.torsion.empty())
                fail(ErrorKind::InvalidAbelianization, "phi is not surjective: cokernel " + g.to_string());
        }
    }
};

/// Presentation with every generator sent to 1 in Z.
inline GroupPresentation uniform_presentation(std::size_t generators, std::vector<GroupWord> relators) {
    GroupPresentation p;
    p.generators = generators;
    p.relators = std::move(relators);
    p.rank = 1;
    p.phi.assign(generators, std::vector<long>{1});
    return p;
}

/// Abelianization of the group itself (ignores phi): Z^s / exponent-sum rows.
inline AbelianGroupInvariants abelianization(const GroupPresentation &p) {
    IntegerMatrix m;
    for (const auto &r : p.relators) {
        std::vector<Integer> row(p.generators, Integer(0));
        for (const auto &l : r) row[l.gen] += l.exp;
        m.push_back(std::move(row));
    }
    return cokernel(m, p.generators);
}

// ---------------------------------------------------------------------------
// Fox calculus.

struct AlexanderMatrix {
    std::size_t vars = 1;
    std::size_t cols = 0;
    Matrix<LaurentPolynomial> entries;

    std::size_t rows() const { return entries.size(); }
};

inline bool is_zero(const LaurentPolynomial &p) { return p.is_zero(); }

/// Abelianized Fox Jacobian; verifies the fundamental identity on every row.
inline AlexanderMatrix fox_jacobian(const GroupPresentation &p) {
    p.validate();
    const std::size_t r = p.rank;
    const std::size_t vars = r == 0 ? 1 : r;
    AlexanderMatrix a;
    a.vars = vars;
    a.cols = p.generators;
    auto mono = [&](const std::vector<long> &e) {
        Exponent ex(vars, 0);
        for (std::size_t i = 0; i < r; ++i) ex[i] = e[i];
        return LaurentPolynomial::monomial(ex);
    };
    for (const auto &rel : p.relators) {
        std::vector<LaurentPolynomial> row(p.generators, LaurentPolynomial(vars));
        std::vector<long> acc(r, 0);
        for (const auto &l : rel) {
            if (l.exp == 1) {
                row[l.gen] += mono(acc);
                for (std::size_t i = 0; i < r; ++i) acc[i] += p.phi[l.gen][i];
            } else {
                for (std::size_t i = 0; i < r; ++i) acc[i] -= p.phi[l.gen][i];
                row[l.gen] -= mono(acc);
            }
        }
        LaurentPolynomial check(vars);
        for (std::size_t j = 0; j < p.generators; ++j)
            check += row[j] * (mono(p.phi[j]) - LaurentPolynomial::constant(vars, 1));
        if (!check.is_zero()) fail(ErrorKind::InvalidAbelianization, "Fox identity fails on a relator");
        a.entries.push_back(std::move(row));
    }
    return a;
}

// ---------------------------------------------------------------------------
// Smith form over the PID Q[t].

/// Monic nonzero invariant factors of a polynomial matrix over Q[t].
inline std::vector<UPoly> smith_invariants(Matrix<UPoly> a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<UPoly> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (!a[i][j].is_zero() && (pr == rows || a[i][j].degree() < a[pr][pc].degree())) {
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
                if (a[i][t].is_zero()) continue;
                UPoly q = divmod(a[i][t], a[t][t]).first;
                for (std::size_t j = t; j < cols; ++j) a[i][j] = a[i][j] - q * a[t][j];
                if (!a[i][t].is_zero()) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                UPoly q = divmod(a[t][j], a[t][t]).first;
                for (std::size_t i = t; i < rows; ++i) a[i][j] = a[i][j] - q * a[i][t];
                if (!a[t][j].is_zero()) {
                    for (auto &row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!(a[i][j] % a[t][t]).is_zero()) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] = a[t][k] + a[i][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(a[t][t].monic());
        ++t;
    }
    return diag;
}

/// Cyclic decomposition of the torsion of the module presented by a
/// one-variable Alexander matrix: factors delta_i (nonunits, normalized) with
/// delta_i | delta_{i+1}.
struct AlexanderModule {
    std::size_t generic_rank = 0; // rank of the matrix over Q(t)
    std::vector<LaurentPolynomial> cyclic_factors;
    LaurentPolynomial order = LaurentPolynomial::constant(1, 1);
};

inline AlexanderModule alexander_module(const AlexanderMatrix &a) {
    if (a.vars != 1) fail(ErrorKind::Validation, "one-variable Alexander matrix expected");
    Matrix<UPoly> m;
    for (const auto &row : a.entries) {
        // Multiply each row by a unit so all entries are polynomials.
        long low = 0;
        bool any = false;
        for (const auto &e : row)
            if (!e.is_zero()) {
                long s = e.min_exponent()[0];
                low = any ? std::min(low, s) : s;
                any = true;
            }
        std::vector<UPoly> r;
        for (const auto &e : row) {
            long s = 0;
            UPoly u = to_upoly(e, &s);
            if (!u.is_zero()) u = u * UPoly::monomial(static_cast<std::size_t>(s - low));
            r.push_back(std::move(u));
        }
        m.push_back(std::move(r));
    }
    AlexanderModule out;
    auto d = smith_invariants(std::move(m), a.cols);
    out.generic_rank = d.size();
    LaurentPolynomial prod = LaurentPolynomial::constant(1, 1);
    for (const auto &f : d) {
        LaurentPolynomial lf = normalize_unit(LaurentPolynomial::from_upoly(f));
        prod *= lf;
        if (lf.size() > 1 || lf.terms().begin()->first[0] != 0 || lf.terms().begin()->second != 1)
            out.cyclic_factors.push_back(lf);
    }
    out.order = normalize_unit(prod);
    return out;
}

/// Order of the torsion of the Alexander module for phi onto Z.
inline LaurentPolynomial one_variable_alexander(const GroupPresentation &p) {
    if (p.rank != 1) fail(ErrorKind::Validation, "one_variable_alexander needs phi onto Z");
    if (p.generators < 1) fail(ErrorKind::Validation, "presentation has no generators");
    auto mod = alexander_module(fox_jacobian(p));
    if (mod.generic_rank + 1 < p.generators)
        fail(ErrorKind::NonTorsion, "Alexander module has positive rank " +
                                        std::to_string(p.generators - 1 - mod.generic_rank) + " (order is 0)");
    return mod.order;
}

/// Determinant over the Laurent ring by cofactor expansion (small sizes).
inline LaurentPolynomial laurent_determinant(const Matrix<LaurentPolynomial> &m, std::size_t vars) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPolynomial::constant(vars, 1);
    if (n == 1) return m[0][0];
    LaurentPolynomial det(vars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        Matrix<LaurentPolynomial> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPolynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        LaurentPolynomial term = m[0][j] * laurent_determinant(sub, vars);
        if (j % 2) det -= term;
        else det += term;
    }
    return det;
}

/// All k x k minors of the Alexander matrix (nonzero ones only); these
/// generate the corresponding Fitting ideal.
inline std::vector<LaurentPolynomial> fitting_minors(const AlexanderMatrix &a, std::size_t k) {
    std::vector<LaurentPolynomial> out;
    const std::size_t rows = a.rows(), cols = a.cols;
    if (k == 0) return {LaurentPolynomial::constant(a.vars, 1)};
    if (k > rows || k > cols) return out;
    std::vector<bool> rmask(rows, false), cmask(cols, false);
    std::fill(rmask.begin(), rmask.begin() + static_cast<long>(k), true);
    do {
        std::fill(cmask.begin(), cmask.end(), false);
        std::fill(cmask.begin(), cmask.begin() + static_cast<long>(k), true);
        do {
            Matrix<LaurentPolynomial> sub;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!rmask[i]) continue;
                std::vector<LaurentPolynomial> row;
                for (std::size_t j = 0; j < cols; ++j)
                    if (cmask[j]) row.push_back(a.entries[i][j]);
                sub.push_back(std::move(row));
            }
            auto d = laurent_determinant(sub, a.vars);
            if (!d.is_zero()) out.push_back(std::move(d));
        } while (std::prev_permutation(cmask.begin(), cmask.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Standard presentations.

/// Free group on s generators, phi = identity (rank s).
inline GroupPresentation free_group(std::size_t s) {
    GroupPresentation p;
    p.generators = s;
    p.rank = s;
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<long> v(s, 0);
        v[i] = 1;
        p.phi.push_back(v);
    }
    return p;
}

/// <x, y | x y x y^-1 x^-1 y^-1>, phi = (1, 1).
inline GroupPresentation trefoil_presentation() {
    return uniform_presentation(2, {{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}});
}

/// <x, y | [x, y]> with phi = identity onto Z^2.
inline GroupPresentation hopf_presentation() {
    GroupPresentation p = free_group(2);
    p.relators.push_back(commutator({{0, 1}}, {{1, 1}}));
    return p;
}

/// Braid relations on sigma_1..sigma_{d-1} plus commutators of every
/// generator with S = s1 ... s_{d-1} s_{d-1} ... s1, every sigma_i sent to 1.
/// S is central in the quotient, and the quotient by S itself is the sphere
/// braid group; the extension by the central Z does not change the
/// commutator subgroup, hence not the Alexander module.
inline GroupPresentation sphere_braid_presentation(std::size_t d) {
    if (d < 2) fail(ErrorKind::Validation, "sphere braid group needs d >= 2");
    const std::size_t n = d - 1;
    std::vector<GroupWord> rels;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        GroupWord lhs{{i, 1}, {i + 1, 1}, {i, 1}}, rhs{{i + 1, 1}, {i, 1}, {i + 1, 1}};
        rels.push_back(concat(lhs, inverse(rhs)));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) rels.push_back(commutator({{i, 1}}, {{j, 1}}));
    GroupWord s;
    for (std::size_t i = 0; i < n; ++i) s.push_back({i, 1});
    for (std::size_t i = n; i-- > 0;) s.push_back({i, 1});
    for (std::size_t i = 0; i < n; ++i) rels.push_back(commutator(s, {{i, 1}}));
    return uniform_presentation(n, std::move(rels));
}

} // namespace alexinv
