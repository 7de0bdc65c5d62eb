#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "alexinv/matrix.hpp"
#include "alexinv/polytope.hpp"
#include "alexinv/resolution.hpp"

namespace alexinv {

// ---------------------------------------------------------------------------
// Closed formulas for z^n = x^a + y^b.

/// max(1 - (i+1)/a - (j+1)/b, 0).
inline Rational kappa_constant(long a, long b, long i, long j) {
    if (a < 1 || b < 1 || i < 0 || j < 0) fail(ErrorKind::Validation, "kappa_constant needs a, b >= 1 and i, j >= 0");
    Rational k = Rational(1) - make_rational(i + 1, a) - make_rational(j + 1, b);
    return k > 0 ? k : Rational(0);
}

/// Least k such that z^k x^i y^j is adjoint for z^n = x^a + y^b.
inline long xi_steps(long a, long b, long i, long j, long n) {
    if (n < 1) fail(ErrorKind::Validation, "xi_steps needs n >= 1");
    Rational k = Rational(1) - make_rational(i + 1, a) - make_rational(j + 1, b);
    Integer f = floor_of(Rational(k * n));
    return f > 0 ? to_long(f) : 0;
}

/// (i+1) b n + (j+1) a n + (k+1) a b > a b n.
inline bool newton_adjoint_membership(long a, long b, long n, long i, long j, long k) {
    if (a < 1 || b < 1 || n < 1) fail(ErrorKind::Validation, "Newton data needs a, b, n >= 1");
    Integer lhs = Integer(i + 1) * b * n + Integer(j + 1) * a * n + Integer(k + 1) * a * b;
    return lhs > Integer(a) * b * n;
}

// ---------------------------------------------------------------------------
// Ideals of quasiadjunction as subspaces of the jet space O / m^B.

enum class IdealVariant { Strict, WeightOne, Log };

inline std::string to_string(IdealVariant v) {
    switch (v) {
    case IdealVariant::Strict: return "A";
    case IdealVariant::WeightOne: return "A'";
    case IdealVariant::Log: return "A''";
    }
    return "?";
}

struct LocalIdealDescription {
    IdealVariant variant = IdealVariant::Strict;
    std::vector<Rational> xi;
    long jet_bound = 0;
    std::vector<std::vector<Rational>> basis; // reduced echelon rows over the jet monomials
    std::vector<Exponent> members;            // monomials in the ideal (below the jet bound)
    std::vector<Exponent> non_members;
    long colength = 0;
    std::size_t dim() const { return basis.size(); }
};

class QuasiAdjunction {
  public:
    /// jet_bound <= 0 selects max_k sum_i a_{k,i}.
    explicit QuasiAdjunction(const ResolutionTree &t, long jet_bound = 0) : tree_(t) {
        t.validate();
        if (!t.has_centers())
            fail(ErrorKind::Unsupported, "ideals of quasiadjunction need chart data on every node (resolve the germ "
                                         "or supply centers in the tree file)");
        bound_ = 1;
        for (const auto &n : t.nodes) bound_ = std::max(bound_, n.multiplicity());
        if (jet_bound > 0) bound_ = jet_bound;
        for (long d = 0; d < bound_; ++d)
            for (long i = d; i >= 0; --i) {
                index_[Exponent{i, d - i}] = monos_.size();
                monos_.push_back({i, d - i});
            }
        // Pullbacks of all jet monomials, truncated below the jet bound.
        pullbacks_.resize(t.nodes.size());
        mono_orders_.resize(t.nodes.size());
        for (std::size_t k = 0; k < t.nodes.size(); ++k) {
            const auto &c = *t.nodes[k].center;
            std::vector<LaurentPolynomial> xp{LaurentPolynomial::constant(2, 1)}, yp{LaurentPolynomial::constant(2, 1)};
            for (long d = 1; d <= bound_; ++d) {
                xp.push_back(xp.back().truncated(bound_ - 1) * c.x);
                xp.back() = xp.back().truncated(bound_ - 1);
                yp.push_back(yp.back() * c.y);
                yp.back() = yp.back().truncated(bound_ - 1);
            }
            for (const auto &m : monos_) {
                LaurentPolynomial pb = (xp[static_cast<std::size_t>(m[0])] * yp[static_cast<std::size_t>(m[1])]).truncated(bound_ - 1);
                mono_orders_[k].push_back(pb.is_zero() ? bound_ : std::min(pb.order(), bound_));
                pullbacks_[k].push_back(std::move(pb));
            }
        }
    }

    const ResolutionTree &tree() const { return tree_; }
    long jet_bound() const { return bound_; }
    const std::vector<Exponent> &monomials() const { return monos_; }
    std::size_t r() const { return tree_.r; }

    /// sum a_k - c_k - 1 - a_k . xi
    Rational slack(std::size_t k, const std::vector<Rational> &xi) const {
        const auto &n = tree_.nodes[k];
        Rational s = n.multiplicity() - n.c - 1;
        for (std::size_t i = 0; i < xi.size(); ++i) s -= n.a[i] * xi[i];
        return s;
    }

    /// Minimal e_k for membership at node k.
    long threshold(std::size_t k, const std::vector<Rational> &xi, bool log) const {
        Rational s = slack(k, xi);
        Integer n = log ? ceil_of(s) : Integer(floor_of(s) + 1);
        return n > 0 ? to_long(n) : 0;
    }

    std::vector<long> thresholds(const std::vector<Rational> &xi, bool log) const {
        std::vector<long> out;
        for (std::size_t k = 0; k < tree_.nodes.size(); ++k) out.push_back(threshold(k, xi, log));
        return out;
    }

    /// Jet coordinates of a polynomial (terms of degree >= B dropped).
    std::vector<Rational> jet(const LaurentPolynomial &phi) const {
        if (phi.var_count() != 2 || !phi.is_polynomial()) fail(ErrorKind::BadGerm, "germ must be a polynomial in x, y");
        std::vector<Rational> v(monos_.size(), Rational(0));
        for (const auto &[e, c] : phi.terms()) {
            auto it = index_.find(e);
            if (it != index_.end()) v[it->second] = c;
        }
        return v;
    }

    LaurentPolynomial polynomial(const std::vector<Rational> &v) const {
        LaurentPolynomial p(2);
        for (std::size_t i = 0; i < v.size(); ++i) p.add_term(monos_[i], v[i]);
        return p;
    }

    /// e_k of a jet vector, capped at the jet bound.
    long order_at(std::size_t k, const std::vector<Rational> &v) const {
        LaurentPolynomial pb(2);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) pb += v[i] * pullbacks_[k][i];
        return pb.is_zero() ? bound_ : std::min(pb.order(), bound_);
    }

    /// e_k of a polynomial; exact (not capped) by growing the truncation.
    long exact_order(std::size_t k, const LaurentPolynomial &phi) const {
        if (phi.is_zero()) fail(ErrorKind::ZeroInput, "the zero germ has no order");
        for (long cap = std::max(bound_, 8L);; cap *= 2) {
            long e = pullback_order(tree_, k, phi, cap);
            if (e < cap) return e;
            if (cap > 4096) fail(ErrorKind::Unsupported, "pullback order exceeds 4096");
        }
    }

    /// Subspace {phi : e_k(phi) >= n_k for all k} of the jet space.
    std::vector<std::vector<Rational>> subspace(const std::vector<long> &n) const {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = cache_.find(n);
            if (it != cache_.end()) return it->second;
        }
        RationalMatrix rows;
        for (std::size_t k = 0; k < n.size(); ++k) {
            if (n[k] <= 0) continue;
            // One row per coefficient u^p v^q with p + q < n_k.
            for (long d = 0; d < n[k]; ++d)
                for (long p = 0; p <= d; ++p) {
                    Exponent target{p, d - p};
                    std::vector<Rational> row(monos_.size(), Rational(0));
                    bool any = false;
                    for (std::size_t i = 0; i < monos_.size(); ++i) {
                        Rational c = pullbacks_[k][i].coefficient(target);
                        if (c != 0) {
                            row[i] = c;
                            any = true;
                        }
                    }
                    if (any) rows.push_back(std::move(row));
                }
        }
        auto basis = canonical(nullspace(rows, monos_.size()));
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.emplace(n, basis);
        return basis;
    }

    /// Reduced row echelon form of a spanning set.
    std::vector<std::vector<Rational>> canonical(std::vector<std::vector<Rational>> span) const {
        rref(span, monos_.size());
        return span;
    }

    std::vector<std::vector<Rational>> ideal_basis(const std::vector<Rational> &xi, IdealVariant variant) const {
        check_xi(xi);
        switch (variant) {
        case IdealVariant::Strict: return subspace(thresholds(xi, false));
        case IdealVariant::Log: return subspace(thresholds(xi, true));
        case IdealVariant::WeightOne: break;
        }
        // Sum over sets S of pairwise non-adjacent nodes of the subspaces with
        // log thresholds on S and strict thresholds elsewhere.
        const auto strict = thresholds(xi, false), log = thresholds(xi, true);
        std::vector<std::size_t> tight;
        for (std::size_t k = 0; k < strict.size(); ++k)
            if (strict[k] != log[k]) tight.push_back(k);
        if (tight.size() > 20) fail(ErrorKind::Unsupported, "too many nodes on the boundary");
        std::vector<std::vector<Rational>> span;
        for (unsigned long mask = 0; mask < (1UL << tight.size()); ++mask) {
            bool independent = true;
            for (std::size_t a = 0; a < tight.size() && independent; ++a)
                for (std::size_t b = a + 1; b < tight.size() && independent; ++b)
                    if ((mask >> a & 1UL) && (mask >> b & 1UL) && tree_.nodes[tight[a]].adj.count(tight[b]))
                        independent = false;
            if (!independent) continue;
            auto n = strict;
            for (std::size_t a = 0; a < tight.size(); ++a)
                if (mask >> a & 1UL) n[tight[a]] = log[tight[a]];
            auto part = subspace(n);
            span.insert(span.end(), part.begin(), part.end());
        }
        return canonical(std::move(span));
    }

    LocalIdealDescription ideal(const std::vector<Rational> &xi, IdealVariant variant) const {
        LocalIdealDescription d;
        d.variant = variant;
        d.xi = xi;
        d.jet_bound = bound_;
        d.basis = ideal_basis(xi, variant);
        d.colength = static_cast<long>(monos_.size()) - static_cast<long>(d.basis.size());
        for (std::size_t i = 0; i < monos_.size(); ++i) {
            std::vector<Rational> e(monos_.size(), Rational(0));
            e[i] = 1;
            (in_span(d.basis, e) ? d.members : d.non_members).push_back(monos_[i]);
        }
        return d;
    }

    long colength(const std::vector<Rational> &xi, IdealVariant variant) const {
        return static_cast<long>(monos_.size()) - static_cast<long>(ideal_basis(xi, variant).size());
    }

    bool member(const LaurentPolynomial &phi, const std::vector<Rational> &xi, IdealVariant variant) const {
        check_xi(xi);
        if (variant == IdealVariant::WeightOne) return in_span(ideal_basis(xi, variant), jet(phi));
        const bool log = variant == IdealVariant::Log;
        const auto v = jet(phi);
        for (std::size_t k = 0; k < tree_.nodes.size(); ++k)
            if (order_at(k, v) < threshold(k, xi, log)) return false;
        return true;
    }

    /// Inequality test at a single node, with e_k given.
    bool node_inequality(std::size_t k, long e, const std::vector<Rational> &xi, bool log) const {
        Rational lhs = 0;
        for (std::size_t i = 0; i < xi.size(); ++i) lhs += tree_.nodes[k].a[i] * xi[i];
        const auto &n = tree_.nodes[k];
        Rational rhs = n.multiplicity() - e - n.c - 1;
        return log ? lhs >= rhs : lhs > rhs;
    }

    /// Membership in the span of a reduced echelon basis.
    bool in_span(const std::vector<std::vector<Rational>> &basis, std::vector<Rational> v) const {
        for (const auto &row : basis) {
            std::size_t p = 0;
            while (p < row.size() && row[p] == 0) ++p;
            if (p == row.size() || v[p] == 0) continue;
            Rational f = v[p];
            for (std::size_t i = p; i < v.size(); ++i)
                if (row[i] != 0) v[i] -= f * row[i];
        }
        return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x == 0; });
    }

    void check_xi(const std::vector<Rational> &xi) const {
        if (xi.size() != tree_.r) fail(ErrorKind::Validation, "xi must have one entry per component");
        for (const auto &x : xi)
            if (x <= 0 || x > 1) fail(ErrorKind::Validation, "xi entries must lie in (0, 1]");
    }

  private:
    const ResolutionTree &tree_;
    long bound_ = 1;
    std::vector<Exponent> monos_;
    std::map<Exponent, std::size_t> index_;
    std::vector<std::vector<LaurentPolynomial>> pullbacks_;
    std::vector<std::vector<long>> mono_orders_;
    mutable std::map<std::vector<long>, std::vector<std::vector<Rational>>> cache_;
    mutable std::mutex cache_mutex_;
};

/// Values of xi in (0, 1) where the ideal of quasiadjunction jumps (r = 1).
inline std::vector<Rational> constants_of_quasiadjunction(const QuasiAdjunction &q) {
    const auto &t = q.tree();
    if (t.r != 1) fail(ErrorKind::UseFacesForMultiComponent, "constants are defined for one component; use the faces");
    std::set<Rational> cand;
    for (const auto &n : t.nodes) {
        const long top = n.multiplicity() - n.c - 1;
        for (long e = 0; e <= top; ++e) {
            Rational x = make_rational(top - e, n.a[0]);
            if (x > 0 && x < 1) cand.insert(x);
        }
    }
    std::vector<Rational> c(cand.begin(), cand.end()), out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational next = i + 1 < c.size() ? c[i + 1] : Rational(1);
        Rational mid = (c[i] + next) / 2;
        if (q.colength({c[i]}, IdealVariant::Strict) != q.colength({mid}, IdealVariant::Strict)) out.push_back(c[i]);
    }
    return out;
}

/// Order of vanishing along E_k of the form attached to phi on the abelian
/// cover of type (j | m). The factor in front of the bracket is the
/// ramification index of the cover along E_k.
inline Rational order_of_zero(const QuasiAdjunction &q, std::size_t k, const std::vector<long> &j,
                              const std::vector<long> &m, const LaurentPolynomial &phi) {
    const auto &t = q.tree();
    if (k >= t.nodes.size()) fail(ErrorKind::Validation, "node index out of range");
    if (j.size() != t.r || m.size() != t.r) fail(ErrorKind::Validation, "j and m need one entry per component");
    const auto &n = t.nodes[k];
    Integer ram = 1;
    Rational x = -(n.multiplicity() - q.exact_order(k, phi) - n.c - 1);
    for (std::size_t i = 0; i < t.r; ++i) {
        if (m[i] < 1 || j[i] < 0 || j[i] >= m[i]) fail(ErrorKind::Validation, "need 0 <= j_i < m_i");
        long g = std::gcd(m[i], n.a[i]);
        ram = lcm_of(ram, Integer(m[i] / g));
        x += n.a[i] * make_rational(j[i] + 1, m[i]);
    }
    return Rational(ram) * x - 1;
}

// ---------------------------------------------------------------------------
// Log-canonical thresholds.

/// (1 - gamma) satisfies a_k . x >= sum a_k - c_k - 1 for every k.
inline bool lct_region(const ResolutionTree &t, const std::vector<Rational> &gamma) {
    if (gamma.size() != t.r) fail(ErrorKind::Validation, "gamma needs one entry per component");
    for (const auto &g : gamma)
        if (g < 0 || g > 1) fail(ErrorKind::Validation, "gamma entries must lie in [0, 1]");
    for (const auto &n : t.nodes) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < t.r; ++i) lhs += n.a[i] * (1 - gamma[i]);
        if (lhs < n.multiplicity() - n.c - 1) return false;
    }
    return true;
}

/// Largest s with s * w in the log-canonical region.
inline Rational lct_threshold(const ResolutionTree &t, const std::vector<Rational> &w) {
    if (w.size() != t.r) fail(ErrorKind::Validation, "direction needs one entry per component");
    bool positive = false;
    for (const auto &x : w) {
        if (x < 0) fail(ErrorKind::Validation, "direction must lie in the positive orthant");
        positive = positive || x > 0;
    }
    if (!positive) fail(ErrorKind::Validation, "direction must be nonzero");
    std::optional<Rational> best;
    auto take = [&](const Rational &v) {
        if (!best || v < *best) best = v;
    };
    for (const auto &x : w)
        if (x > 0) take(1 / x);
    for (const auto &n : t.nodes) {
        Rational aw = 0;
        for (std::size_t i = 0; i < t.r; ++i) aw += n.a[i] * w[i];
        if (aw > 0) take(Rational(n.c + 1) / aw);
    }
    return *best;
}

// ---------------------------------------------------------------------------
// Polytopes and faces of quasiadjunction.

struct QuasiFace {
    std::vector<RationalVector> vertices;
    std::size_t dimension = 0;
    std::vector<Halfspace> supporting; // resolution halfspaces tight on the face
    RationalVector point;                   // generic point of the relative interior
    long dim_a = 0, dim_a1 = 0, dim_a2 = 0; // dimensions in the jet space
    long dim_quotient = 0;                  // dim A'' / A at the point
    long dim_quotient_weight_one = 0;       // dim A'' / A'
    std::vector<Exponent> staircase;        // monomials outside A at the point
};

struct QuasiPolytope {
    std::vector<std::vector<Rational>> ideal; // basis of the log ideal A''
    long colength = 0;
    RationalPolytope polytope;
    FaceLattice lattice;
    std::vector<QuasiFace> faces; // faces with dim A''/A > 0 and relative interior in the open cube
};

namespace detail {

struct Hyperplane {
    RationalVector normal;
    Rational level;
    friend bool operator<(const Hyperplane &a, const Hyperplane &b) {
        return std::tie(a.normal, a.level) < std::tie(b.normal, b.level);
    }
};

inline Hyperplane normalized(RationalVector n, Rational level) {
    for (const auto &x : n)
        if (x != 0) {
            Rational s = x;
            for (auto &y : n) y /= s;
            level /= s;
            break;
        }
    return {n, level};
}

/// One point in the relative interior of every face of the arrangement
/// inside the closed cube.
inline std::vector<RationalVector> arrangement_samples(const std::vector<Hyperplane> &hs, std::size_t r) {
    struct Flat {
        RationalMatrix eqs; // rref of [normal | level]
        std::size_t dim;
    };
    std::map<RationalMatrix, Flat> flats;
    flats[RationalMatrix{}] = {RationalMatrix{}, r};
    std::vector<RationalMatrix> frontier{RationalMatrix{}};
    for (std::size_t codim = 1; codim <= r; ++codim) {
        std::vector<RationalMatrix> next;
        for (const auto &base : frontier)
            for (const auto &h : hs) {
                RationalMatrix m = base;
                RationalVector row = h.normal;
                row.push_back(h.level);
                m.push_back(row);
                auto piv = rref(m, r + 1);
                if (!piv.empty() && piv.back() == r) continue; // inconsistent
                if (m.size() != codim) continue;
                if (flats.emplace(m, Flat{m, r - codim}).second) next.push_back(m);
            }
        frontier = std::move(next);
    }
    auto in_cube = [&](const RationalVector &p) {
        return std::all_of(p.begin(), p.end(), [](const Rational &x) { return x >= 0 && x <= 1; });
    };
    std::map<RationalMatrix, std::vector<RationalVector>> samples;
    for (const auto &[key, f] : flats) {
        if (f.dim != 0) continue;
        RationalVector p(r);
        for (std::size_t i = 0; i < r; ++i) p[i] = f.eqs[i][r];
        if (in_cube(p)) samples[key].push_back(p);
    }
    for (std::size_t d = 1; d <= r; ++d) {
        for (const auto &[key, f] : flats) {
            if (f.dim != d) continue;
            RationalMatrix normals;
            for (const auto &row : f.eqs) normals.emplace_back(row.begin(), row.begin() + static_cast<long>(r));
            auto dir = nullspace(normals, r);
            std::set<RationalVector> out;
            for (const auto &h : hs) {
                RationalMatrix m = f.eqs;
                RationalVector row = h.normal;
                row.push_back(h.level);
                m.push_back(row);
                auto piv = rref(m, r + 1);
                if ((!piv.empty() && piv.back() == r) || m.size() != f.eqs.size() + 1) continue;
                auto it = samples.find(m);
                if (it == samples.end()) continue;
                const RationalVector *w = nullptr;
                for (const auto &b : dir) {
                    Rational s = 0;
                    for (std::size_t i = 0; i < r; ++i) s += h.normal[i] * b[i];
                    if (s != 0) {
                        w = &b;
                        break;
                    }
                }
                if (!w) continue;
                for (const auto &p : it->second) {
                    std::optional<Rational> tmin;
                    for (const auto &g : hs) {
                        Rational s = 0, at = 0;
                        for (std::size_t i = 0; i < r; ++i) {
                            s += g.normal[i] * (*w)[i];
                            at += g.normal[i] * p[i];
                        }
                        if (s == 0 || at == g.level) continue;
                        Rational dist = abs(Rational((g.level - at) / s));
                        if (!tmin || dist < *tmin) tmin = dist;
                    }
                    if (!tmin) continue;
                    Rational eps = *tmin / 2;
                    for (int sign : {1, -1}) {
                        RationalVector q(r);
                        for (std::size_t i = 0; i < r; ++i) q[i] = p[i] + sign * eps * (*w)[i];
                        if (in_cube(q)) out.insert(q);
                    }
                }
            }
            samples[key].assign(out.begin(), out.end());
        }
    }
    std::set<RationalVector> all;
    for (const auto &[k, v] : samples) all.insert(v.begin(), v.end());
    return {all.begin(), all.end()};
}

/// Hyperplanes where some ideal of quasiadjunction can jump, plus the cube facets.
inline std::vector<Hyperplane> jump_hyperplanes(const ResolutionTree &t) {
    const std::size_t r = t.r;
    std::set<Hyperplane> hset;
    for (const auto &n : t.nodes) {
        const long top = n.multiplicity() - n.c - 1;
        RationalVector normal(n.a.begin(), n.a.end());
        for (long e = 0; e <= top; ++e) hset.insert(normalized(normal, Rational(top - e)));
    }
    for (std::size_t i = 0; i < r; ++i) {
        RationalVector e(r, Rational(0));
        e[i] = 1;
        hset.insert({e, 0});
        hset.insert({e, 1});
    }
    return {hset.begin(), hset.end()};
}

/// A point of the relative interior of f off every arrangement hyperplane
/// that does not contain f.
inline RationalVector generic_point(const std::vector<RationalVector> &verts, const std::vector<Hyperplane> &hs) {
    const std::size_t r = verts.front().size();
    auto on = [&](const Hyperplane &h, const RationalVector &p) {
        Rational v = 0;
        for (std::size_t i = 0; i < r; ++i) v += h.normal[i] * p[i];
        return v == h.level;
    };
    std::vector<const Hyperplane *> avoid;
    for (const auto &h : hs)
        if (!std::all_of(verts.begin(), verts.end(), [&](const RationalVector &v) { return on(h, v); }))
            avoid.push_back(&h);
    RationalVector p(r, Rational(0));
    for (const auto &v : verts)
        for (std::size_t j = 0; j < r; ++j) p[j] += v[j] / static_cast<long>(verts.size());
    for (long shift = 0; shift < 64; ++shift) {
        if (std::none_of(avoid.begin(), avoid.end(), [&](const Hyperplane *h) { return on(*h, p); })) return p;
        // Distinct positive weights on the vertices.
        std::vector<Rational> w;
        Rational total = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            w.push_back(make_rational(1, static_cast<long>(i) + 2 + shift * static_cast<long>(verts.size())));
            total += w.back();
        }
        p.assign(r, Rational(0));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < r; ++j) p[j] += w[i] / total * verts[i][j];
    }
    fail(ErrorKind::Unsupported, "no generic point found on a face");
}

} // namespace detail

inline std::vector<QuasiPolytope> polytopes_and_faces(const QuasiAdjunction &q) {
    const auto &t = q.tree();
    const std::size_t r = t.r;
    if (r == 0 || r > 3) fail(ErrorKind::UnsupportedDimension, "polytopes of quasiadjunction need 1 <= r <= 3");
    const auto hs = detail::jump_hyperplanes(t);
    auto samples = detail::arrangement_samples(hs, r);

    std::map<std::vector<long>, bool> seen_thresholds;
    std::vector<std::vector<std::vector<Rational>>> ideals;
    for (const auto &xi : samples) {
        if (std::any_of(xi.begin(), xi.end(), [](const Rational &x) { return x <= 0; })) continue;
        auto th = q.thresholds(xi, true);
        if (!seen_thresholds.emplace(th, true).second) continue;
        auto basis = q.subspace(th);
        if (std::find(ideals.begin(), ideals.end(), basis) == ideals.end()) ideals.push_back(std::move(basis));
    }

    std::vector<QuasiPolytope> out;
    for (auto &basis : ideals) {
        QuasiPolytope qp;
        qp.ideal = basis;
        qp.colength = static_cast<long>(q.monomials().size()) - static_cast<long>(basis.size());
        qp.polytope.dim = r;
        for (std::size_t k = 0; k < t.nodes.size(); ++k) {
            const auto &n = t.nodes[k];
            // Smallest order along E_k over the ideal, m^B included.
            long e = q.jet_bound();
            for (const auto &v : basis) e = std::min(e, q.order_at(k, v));
            RationalVector normal(n.a.begin(), n.a.end());
            qp.polytope.halfspaces.push_back({normal, Rational(n.multiplicity() - n.c - 1 - e), false});
        }
        qp.lattice = polytope_faces(qp.polytope);
        for (const auto &f : qp.lattice.faces) {
            QuasiFace qf;
            for (auto v : f.vertices) qf.vertices.push_back(qp.lattice.vertices[v]);
            qf.point = detail::generic_point(qf.vertices, hs);
            if (std::any_of(qf.point.begin(), qf.point.end(), [](const Rational &x) { return x <= 0; })) continue;
            qf.dimension = f.dimension;
            for (auto k : f.saturated)
                if (k < qp.polytope.halfspaces.size()) qf.supporting.push_back(qp.polytope.halfspaces[k]);
            auto a = q.ideal(qf.point, IdealVariant::Strict);
            qf.dim_a = static_cast<long>(a.dim());
            qf.dim_a1 = static_cast<long>(q.ideal_basis(qf.point, IdealVariant::WeightOne).size());
            qf.dim_a2 = static_cast<long>(q.ideal_basis(qf.point, IdealVariant::Log).size());
            qf.dim_quotient = qf.dim_a2 - qf.dim_a;
            qf.dim_quotient_weight_one = qf.dim_a2 - qf.dim_a1;
            qf.staircase = a.non_members;
            if (qf.dim_quotient > 0) qp.faces.push_back(std::move(qf));
        }
        out.push_back(std::move(qp));
    }
    return out;
}

/// Faces of quasiadjunction from all polytopes, deduplicated by vertex set.
inline std::vector<QuasiFace> faces_of_quasiadjunction(const std::vector<QuasiPolytope> &ps) {
    std::vector<QuasiFace> out;
    std::set<std::vector<RationalVector>> seen;
    for (const auto &p : ps)
        for (const auto &f : p.faces) {
            auto key = f.vertices;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) out.push_back(f);
        }
    std::sort(out.begin(), out.end(), [](const QuasiFace &a, const QuasiFace &b) {
        return std::tie(a.dimension, a.point) < std::tie(b.dimension, b.point);
    });
    return out;
}

} // namespace alexinv
