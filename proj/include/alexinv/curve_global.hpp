#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alexinv/cyclotomic.hpp"
#include "alexinv/local_invariants.hpp"
#include "alexinv/matrix.hpp"
#include "alexinv/quasiadjunction.hpp"

namespace alexinv {

struct ComponentSpec {
    std::string label;
    long degree = 1;
};

/// A singular point in the affine chart. Either a named type or explicit
/// branches in local coordinates centered at the point.
struct SingularitySpec {
    Rational x, y;
    std::string type;                  // "node", "cusp", "torus" or "germ"
    long p = 0, q = 0;                 // torus type x^p - y^q
    std::vector<std::string> branches; // explicit germ, one entry per branch
    std::vector<std::string> incidence; // component label per branch, or a single label
};

struct ProjectiveCurveSpec {
    long degree = 0;
    std::vector<ComponentSpec> components;
    std::vector<SingularitySpec> singularities;

    std::size_t r() const { return components.size(); }

    std::size_t component_index(const std::string &label) const {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].label == label) return i;
        fail(ErrorKind::Validation, "unknown component '" + label + "'");
    }

    /// Every problem found, not just the first.
    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        if (degree < 1) out.push_back("degree must be positive");
        if (components.empty()) out.push_back("at least one component is required");
        long sum = 0;
        std::set<std::string> labels;
        for (const auto &c : components) {
            if (c.degree < 1) out.push_back("component '" + c.label + "' has nonpositive degree");
            if (!labels.insert(c.label).second) out.push_back("duplicate component label '" + c.label + "'");
            sum += c.degree;
        }
        if (!components.empty() && sum != degree) out.push_back("component degrees do not sum to total");
        std::set<std::pair<Rational, Rational>> seen;
        for (std::size_t i = 0; i < singularities.size(); ++i) {
            const auto &s = singularities[i];
            const std::string at = "singularity " + std::to_string(i + 1);
            if (!seen.insert({s.x, s.y}).second) out.push_back(at + " repeats a position");
            if (s.type == "torus" && (s.p < 1 || s.q < 1)) out.push_back(at + ": torus type needs p, q >= 1");
            if (s.type == "germ" && s.branches.empty()) out.push_back(at + ": germ has no branches");
            if (s.type != "node" && s.type != "cusp" && s.type != "torus" && s.type != "germ")
                out.push_back(at + ": unknown type '" + s.type + "'");
            for (const auto &l : s.incidence)
                if (!labels.count(l)) out.push_back(at + ": unknown component '" + l + "'");
            const std::size_t nb = s.type == "node" ? 2 : s.type == "germ" ? s.branches.size() : 1;
            if (s.incidence.size() > 1 && s.incidence.size() != nb)
                out.push_back(at + ": incidence must name one component or one per branch");
            if (s.incidence.empty() && components.size() > 1)
                out.push_back(at + ": incidence is required when the curve has several components");
        }
        return out;
    }

    void validate() const {
        auto v = violations();
        if (v.empty()) return;
        std::string msg;
        for (const auto &x : v) msg += (msg.empty() ? "" : "; ") + x;
        fail(ErrorKind::Validation, msg);
    }

    /// Plucker-type sanity check for nodal-cuspidal specs (warning only).
    std::vector<std::string> warnings() const {
        std::vector<std::string> out;
        long delta = 0, kappa = 0;
        for (const auto &s : singularities) {
            if (s.type == "node") ++delta;
            else if (s.type == "cusp") ++kappa;
            else return out;
        }
        if (2 * (delta + kappa) > (degree - 1) * (degree - 2))
            out.push_back("more nodes and cusps than the genus bound allows for an irreducible curve");
        return out;
    }
};

/// (X : Y : Z) to the affine chart Z = 1; points at infinity are rejected.
inline std::pair<Rational, Rational> to_affine_chart(const Rational &x, const Rational &y, const Rational &z) {
    if (z == 0) fail(ErrorKind::Validation, "singular point at infinity; choose a chart where all points are affine");
    return {x / z, y / z};
}

/// Branch polynomials of a singular point in local coordinates.
inline std::vector<std::string> branch_texts(const SingularitySpec &s) {
    if (s.type == "node") return {"x", "y"};
    if (s.type == "cusp") return {"y^2 - x^3"};
    if (s.type == "torus") return {"x^" + std::to_string(s.p) + " - y^" + std::to_string(s.q)};
    if (s.type == "germ") return s.branches;
    fail(ErrorKind::Validation, "unknown singularity type '" + s.type + "'");
}

/// Local germ with branches grouped by global component, in the order of
/// the global component indices; `comps` receives those indices.
inline PlaneCurveGerm grouped_germ(const ProjectiveCurveSpec &spec, const SingularitySpec &s,
                                   std::vector<std::size_t> *comps = nullptr) {
    auto texts = branch_texts(s);
    std::map<std::size_t, LaurentPolynomial> groups;
    for (std::size_t b = 0; b < texts.size(); ++b) {
        std::size_t c = 0;
        if (!s.incidence.empty()) c = spec.component_index(s.incidence.size() == 1 ? s.incidence[0] : s.incidence[b]);
        auto f = parse_polynomial(texts[b]);
        auto it = groups.find(c);
        if (it == groups.end()) groups.emplace(c, f);
        else it->second *= f;
    }
    PlaneCurveGerm g;
    if (comps) comps->clear();
    for (auto &[c, f] : groups) {
        g.components.push_back(f);
        if (comps) comps->push_back(c);
    }
    return g;
}

/// The same germ with all branches merged into one component.
inline PlaneCurveGerm collapsed_germ(const SingularitySpec &s) {
    PlaneCurveGerm g;
    LaurentPolynomial f = LaurentPolynomial::constant(2, 1);
    for (const auto &t : branch_texts(s)) f *= parse_polynomial(t);
    g.components.push_back(f);
    return g;
}

// ---------------------------------------------------------------------------

/// Z^r modulo the vector of component degrees.
inline AbelianGroupInvariants h1_complement(const std::vector<long> &degrees) {
    if (degrees.empty()) fail(ErrorKind::Validation, "need at least one component degree");
    IntegerMatrix m(1);
    for (long d : degrees) {
        if (d < 1) fail(ErrorKind::Validation, "component degrees must be positive");
        m[0].push_back(Integer(d));
    }
    return cokernel(m, degrees.size());
}

/// (t^d - 1)^{d-2} (t - 1).
inline LaurentPolynomial infinity_alexander(long d) {
    if (d < 1) fail(ErrorKind::Validation, "degree must be positive");
    FormalCycloProduct f = FormalCycloProduct::factor({d}, d - 2) * FormalCycloProduct::factor({1});
    return normalize_unit(f.expand());
}

/// Product of the one-variable local Alexander polynomials.
inline LaurentPolynomial local_alexander_product(const ProjectiveCurveSpec &spec) {
    LaurentPolynomial p = LaurentPolynomial::constant(1, 1);
    for (const auto &s : spec.singularities) p *= local_alexander(resolve(collapsed_germ(s)));
    return normalize_unit(p);
}

// ---------------------------------------------------------------------------
// Superabundance of linear systems defined by local ideals.

namespace detail {

/// Degree-m monomials x^i y^j, i + j <= m.
inline std::vector<Exponent> plane_monomials(long m) {
    std::vector<Exponent> out;
    for (long d = 0; d <= m; ++d)
        for (long i = d; i >= 0; --i) out.push_back({i, d - i});
    return out;
}

/// Linear conditions cutting out an ideal of the jet space.
inline RationalMatrix ideal_conditions(const std::vector<std::vector<Rational>> &basis, std::size_t n) {
    return nullspace(basis, n);
}

} // namespace detail

/// One local ideal imposed at an affine point.
struct PointCondition {
    Rational x, y;
    const QuasiAdjunction *local = nullptr;
    std::vector<std::vector<Rational>> ideal; // basis in the local jet space
};

struct SuperabundanceResult {
    long h1 = 0;
    long h0 = 0;
    long chi = 0;
    long degree = 0;
    bool contributing = true;
};

/// h^1 of the sheaf of degree-m forms with the given local conditions.
inline SuperabundanceResult superabundance_of(long m, const std::vector<PointCondition> &points) {
    SuperabundanceResult res;
    res.degree = m;
    if (m < 0) {
        res.contributing = false;
        return res;
    }
    const auto monos = detail::plane_monomials(m);
    RationalMatrix rows;
    long colength = 0;
    for (const auto &pt : points) {
        const auto &jets = pt.local->monomials();
        auto cond = detail::ideal_conditions(pt.ideal, jets.size());
        colength += static_cast<long>(cond.size());
        if (cond.empty()) continue;
        // Jets of each global monomial at the point.
        const LaurentPolynomial sx = LaurentPolynomial::variable(2, 0) + LaurentPolynomial::constant(2, pt.x);
        const LaurentPolynomial sy = LaurentPolynomial::variable(2, 1) + LaurentPolynomial::constant(2, pt.y);
        std::vector<std::vector<Rational>> jet_of;
        for (const auto &e : monos)
            jet_of.push_back(pt.local->jet(LaurentPolynomial::monomial(e, 1).compose({sx, sy}, pt.local->jet_bound() - 1)));
        for (const auto &c : cond) {
            std::vector<Rational> row(monos.size(), Rational(0));
            for (std::size_t j = 0; j < monos.size(); ++j)
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (c[i] != 0 && jet_of[j][i] != 0) row[j] += c[i] * jet_of[j][i];
            rows.push_back(std::move(row));
        }
    }
    const long n = static_cast<long>(monos.size());
    const long rank = static_cast<long>(rational_rank(rows));
    res.h0 = n - rank;
    res.chi = n - colength;
    res.h1 = colength - rank;
    if (res.h1 < 0) fail(ErrorKind::TheoremViolation, "negative superabundance");
    return res;
}

/// Resolved local data of every singular point, computed once per spec.
class CurveContext {
  public:
    explicit CurveContext(const ProjectiveCurveSpec &spec, long jet_bound = 0) : spec_(spec) {
        spec.validate();
        for (const auto &s : spec.singularities) {
            collapsed_trees_.push_back(resolve(collapsed_germ(s)));
            std::vector<std::size_t> comps;
            grouped_trees_.push_back(resolve(grouped_germ(spec, s, &comps)));
            comps_.push_back(comps);
        }
        for (std::size_t i = 0; i < spec.singularities.size(); ++i) {
            collapsed_.push_back(std::make_unique<QuasiAdjunction>(collapsed_trees_[i], jet_bound));
            grouped_.push_back(std::make_unique<QuasiAdjunction>(grouped_trees_[i], jet_bound));
        }
    }

    const ProjectiveCurveSpec &spec() const { return spec_; }
    std::size_t size() const { return spec_.singularities.size(); }
    const ResolutionTree &collapsed_tree(std::size_t i) const { return collapsed_trees_[i]; }
    const QuasiAdjunction &collapsed(std::size_t i) const { return *collapsed_[i]; }
    const QuasiAdjunction &grouped(std::size_t i) const { return *grouped_[i]; }
    /// Global component index of each local coordinate of grouped(i).
    const std::vector<std::size_t> &local_components(std::size_t i) const { return comps_[i]; }

    std::vector<Rational> project(std::size_t i, const std::vector<Rational> &xi) const {
        std::vector<Rational> out;
        for (auto c : comps_[i]) out.push_back(xi[c]);
        return out;
    }

  private:
    const ProjectiveCurveSpec &spec_;
    std::vector<ResolutionTree> collapsed_trees_, grouped_trees_;
    std::vector<std::vector<std::size_t>> comps_;
    std::vector<std::unique_ptr<QuasiAdjunction>> collapsed_, grouped_;
};

/// h^1 for the ideals A_P(kappa) in degree d - 3 - d kappa.
inline SuperabundanceResult superabundance(const CurveContext &ctx, const Rational &kappa) {
    const long d = ctx.spec().degree;
    Rational dk = kappa * d;
    if (!is_integer(dk)) {
        SuperabundanceResult r;
        r.contributing = false;
        return r;
    }
    const long m = d - 3 - to_long(floor_of(dk));
    if (m < 0) {
        SuperabundanceResult r;
        r.degree = m;
        r.contributing = false;
        return r;
    }
    std::vector<PointCondition> pts;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const auto &s = ctx.spec().singularities[i];
        pts.push_back({s.x, s.y, &ctx.collapsed(i), ctx.collapsed(i).ideal_basis({kappa}, IdealVariant::Strict)});
    }
    return superabundance_of(m, pts);
}

inline SuperabundanceResult superabundance(const ProjectiveCurveSpec &spec, const Rational &kappa) {
    return superabundance(CurveContext(spec), kappa);
}

// ---------------------------------------------------------------------------

struct AlexanderFactorization {
    std::vector<std::pair<Rational, long>> factors; // (kappa, s)
    std::optional<LaurentPolynomial> assembled;     // includes (t - 1)^{r-1}
    long t_minus_one_exponent = 0;
    std::vector<std::string> warnings;

    std::string to_string() const {
        if (assembled) return assembled->to_string();
        std::string s;
        for (const auto &[k, e] : factors)
            s += (s.empty() ? "" : " * ") + std::string("((t - e(") + alexinv::to_string(k) + "))(t - e(-" +
                 alexinv::to_string(k) + ")))^" + std::to_string(e);
        if (t_minus_one_exponent > 0) s += (s.empty() ? "" : " * ") + std::string("(t - 1)^") + std::to_string(t_minus_one_exponent);
        return s.empty() ? "1" : s;
    }
};

/// Constants of quasiadjunction kappa of the singular points with d kappa integral.
inline std::vector<Rational> contributing_constants(const CurveContext &ctx) {
    std::set<Rational> ks;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        for (const auto &k : constants_of_quasiadjunction(ctx.collapsed(i)))
            if (is_integer(Rational(k * ctx.spec().degree))) ks.insert(k);
    return {ks.begin(), ks.end()};
}

/// Assemble prod ((t - e(k))(t - e(-k)))^s over Q when every Galois class is complete.
inline AlexanderFactorization assemble_factors(std::vector<std::pair<Rational, long>> factors, long r) {
    AlexanderFactorization out;
    out.factors = std::move(factors);
    out.t_minus_one_exponent = r - 1;
    // Exponent per class {k, 1 - k}, grouped by denominator.
    std::map<long, std::map<Rational, long>> by_den;
    for (const auto &[k, s] : out.factors) {
        Rational rep = k <= make_rational(1, 2) ? k : Rational(1 - k);
        by_den[to_long(Integer(k.get_den()))][rep] += s;
    }
    LaurentPolynomial total = LaurentPolynomial::constant(1, 1);
    for (const auto &[n, classes] : by_den) {
        std::optional<long> common;
        bool complete = true;
        for (long j = 1; 2 * j <= n; ++j) {
            if (std::gcd(j, n) != 1) continue;
            auto it = classes.find(make_rational(j, n));
            long s = it == classes.end() ? 0 : it->second;
            if (!common) common = s;
            else if (*common != s) complete = false;
        }
        if (!complete) {
            out.warnings.push_back("conjugate constants of denominator " + std::to_string(n) +
                                   " carry different exponents; no rational polynomial assembled");
            return out;
        }
        LaurentPolynomial phi = LaurentPolynomial::from_upoly(cyclotomic_polynomial(n));
        total *= phi.pow(static_cast<unsigned>(n == 2 ? 2 * *common : *common));
    }
    if (r > 1) total *= LaurentPolynomial::univariate({-1, 1}).pow(static_cast<unsigned>(r - 1));
    out.assembled = normalize_unit(total);
    return out;
}

inline AlexanderFactorization global_alexander(const CurveContext &ctx) {
    std::vector<std::pair<Rational, long>> factors;
    for (const auto &k : contributing_constants(ctx)) {
        auto s = superabundance(ctx, k);
        if (s.h1 > 0) factors.push_back({k, s.h1});
    }
    auto out = assemble_factors(std::move(factors), static_cast<long>(ctx.spec().r()));
    for (auto &w : ctx.spec().warnings()) out.warnings.push_back(w);
    return out;
}

inline AlexanderFactorization global_alexander(const ProjectiveCurveSpec &spec) {
    return global_alexander(CurveContext(spec));
}

struct DivisibilityReport {
    LaurentPolynomial delta{1}, local_product{1}, infinity{1};
    LaurentPolynomial local_quotient{1}, infinity_quotient{1};
};

inline DivisibilityReport divisibility_check(const CurveContext &ctx) {
    auto f = global_alexander(ctx);
    if (!f.assembled) fail(ErrorKind::Unsupported, "Alexander polynomial did not assemble over Q");
    DivisibilityReport rep;
    rep.delta = *f.assembled;
    rep.local_product = local_alexander_product(ctx.spec());
    rep.infinity = infinity_alexander(ctx.spec().degree);
    auto q1 = exact_divide(rep.local_product, rep.delta);
    if (!q1) fail(ErrorKind::TheoremViolation, rep.delta.to_string() + " does not divide the product of local polynomials");
    auto q2 = exact_divide(rep.infinity, rep.delta);
    if (!q2) fail(ErrorKind::TheoremViolation, rep.delta.to_string() + " does not divide the polynomial at infinity");
    rep.local_quotient = normalize_unit(*q1);
    rep.infinity_quotient = normalize_unit(*q2);
    return rep;
}

inline DivisibilityReport divisibility_check(const ProjectiveCurveSpec &spec) { return divisibility_check(CurveContext(spec)); }

// ---------------------------------------------------------------------------

struct CoverHomology {
    long rank = 0;
    std::vector<std::pair<Rational, long>> eigenvalues; // (k/n, multiplicity) for exp(2 pi i k/n)
};

/// First Betti number of the n-fold cyclic cover from the Alexander module.
/// `factors` is the cyclic decomposition; a bare polynomial is one factor.
inline CoverHomology cyclic_cover_h1(const std::vector<LaurentPolynomial> &factors, long n, bool semisimple) {
    if (n < 1) fail(ErrorKind::Validation, "cover degree must be positive");
    CoverHomology out;
    LaurentPolynomial delta = LaurentPolynomial::constant(1, 1);
    for (const auto &f : factors) {
        out.rank += common_root_count(f, n);
        delta *= f;
    }
    if (!semisimple) return out;
    long shift = 0;
    UPoly d = to_upoly(normalize_unit(delta), &shift);
    for (long k = 0; k < n; ++k) {
        long order = n / std::gcd(k, n);
        long mult = static_cast<long>(multiplicity(d, cyclotomic_polynomial(order)));
        if (mult > 0) out.eigenvalues.push_back({make_rational(k, n), mult});
    }
    return out;
}

inline CoverHomology cyclic_cover_h1(const LaurentPolynomial &delta, long n, bool semisimple) {
    return cyclic_cover_h1(std::vector<LaurentPolynomial>{delta}, n, semisimple);
}

/// d^2 > 6 kappa + 4 delta certifies an abelian fundamental group.
inline bool nori_abelian_certificate(long d, long nodes, long cusps) {
    if (d < 1 || nodes < 0 || cusps < 0) fail(ErrorKind::Validation, "need d >= 1 and nonnegative counts");
    return d * d > 6 * cusps + 4 * nodes;
}

// ---------------------------------------------------------------------------
// Global faces of quasiadjunction.

struct GlobalFace {
    std::vector<RationalVector> vertices;
    std::size_t dimension = 0;
    RationalVector point;                      // generic point of the relative interior
    std::vector<RationalVector> conjugate_vertices; // the reflected face, xi -> 1 - xi
    std::optional<Rational> level;              // sum d_i xi_i when constant on the face
    std::map<std::size_t, LocalIdealDescription> ideals; // per singular point, at `point`
    long twist_degree = 0;                      // d - 3 - l
    long h1 = 0;
    long predicted_depth = 0;
};

inline std::vector<GlobalFace> global_faces_and_components(const CurveContext &ctx) {
    const auto &spec = ctx.spec();
    const std::size_t r = spec.r();
    if (r == 0 || r > 3) fail(ErrorKind::UnsupportedDimension, "global faces need 1 <= r <= 3");

    // Arrangement in the global cube: lifted local jump hyperplanes.
    std::set<detail::Hyperplane> hset;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const auto &comps = ctx.local_components(i);
        for (const auto &h : detail::jump_hyperplanes(ctx.grouped(i).tree())) {
            RationalVector n(r, Rational(0));
            for (std::size_t j = 0; j < comps.size(); ++j) n[comps[j]] += h.normal[j];
            if (std::all_of(n.begin(), n.end(), [](const Rational &x) { return x == 0; })) continue;
            hset.insert(detail::normalized(n, h.level));
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        RationalVector e(r, Rational(0));
        e[i] = 1;
        hset.insert({e, 0});
        hset.insert({e, 1});
    }
    const std::vector<detail::Hyperplane> hs(hset.begin(), hset.end());

    // Local faces lifted through the coordinate projection.
    std::set<std::vector<RationalVector>> seen;
    std::vector<GlobalFace> out;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const auto &comps = ctx.local_components(i);
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < r; ++c)
            if (std::find(comps.begin(), comps.end(), c) == comps.end()) free.push_back(c);
        for (const auto &lf : faces_of_quasiadjunction(polytopes_and_faces(ctx.grouped(i)))) {
            std::vector<RationalVector> verts;
            for (const auto &v : lf.vertices)
                for (unsigned long mask = 0; mask < (1UL << free.size()); ++mask) {
                    RationalVector g(r, Rational(0));
                    for (std::size_t j = 0; j < comps.size(); ++j) g[comps[j]] = v[j];
                    for (std::size_t j = 0; j < free.size(); ++j) g[free[j]] = (mask >> j & 1UL) ? 1 : 0;
                    verts.push_back(g);
                }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            if (!seen.insert(verts).second) continue;
            GlobalFace f;
            f.vertices = verts;
            f.dimension = affine_dimension(verts);
            f.point = detail::generic_point(verts, hs);
            for (const auto &v : verts) {
                RationalVector c;
                for (const auto &x : v) c.push_back(1 - x);
                f.conjugate_vertices.push_back(c);
            }
            std::set<Rational> levels;
            for (const auto &v : verts) {
                Rational l = 0;
                for (std::size_t c = 0; c < r; ++c) l += spec.components[c].degree * v[c];
                levels.insert(l);
            }
            if (levels.size() == 1) f.level = *levels.begin();
            if (f.level && is_integer(*f.level)) {
                f.twist_degree = spec.degree - 3 - to_long(floor_of(*f.level));
                std::vector<PointCondition> pts;
                for (std::size_t k = 0; k < ctx.size(); ++k) {
                    const auto &q = ctx.grouped(k);
                    auto local_xi = ctx.project(k, f.point);
                    auto desc = q.ideal(local_xi, IdealVariant::Strict);
                    pts.push_back({spec.singularities[k].x, spec.singularities[k].y, &q, desc.basis});
                    f.ideals.emplace(k, std::move(desc));
                }
                f.h1 = superabundance_of(f.twist_degree, pts).h1;
                f.predicted_depth = f.h1;
            }
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(), [](const GlobalFace &a, const GlobalFace &b) {
        return std::tie(a.dimension, a.vertices) < std::tie(b.dimension, b.vertices);
    });
    return out;
}

inline std::vector<GlobalFace> global_faces_and_components(const ProjectiveCurveSpec &spec) {
    return global_faces_and_components(CurveContext(spec));
}

} // namespace alexinv
