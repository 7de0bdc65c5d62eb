#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alexinv/bivariate.hpp"
#include "alexinv/laurent.hpp"
#include "alexinv/poly_parse.hpp"

namespace alexinv {

/// Germ at the origin of a reduced plane curve, one polynomial per component.
struct PlaneCurveGerm {
    std::vector<LaurentPolynomial> components;

    static PlaneCurveGerm parse(const std::vector<std::string> &texts) {
        PlaneCurveGerm g;
        for (const auto &t : texts) g.components.push_back(parse_polynomial(t));
        return g;
    }

    std::size_t r() const { return components.size(); }

    LaurentPolynomial product() const {
        LaurentPolynomial p = LaurentPolynomial::constant(2, 1);
        for (const auto &f : components) p *= f;
        return p;
    }

    void validate() const {
        if (components.empty()) fail(ErrorKind::BadGerm, "germ has no components");
        for (std::size_t i = 0; i < components.size(); ++i) {
            const auto &f = components[i];
            const std::string name = "component " + std::to_string(i + 1);
            if (f.var_count() != 2 || !f.is_polynomial()) fail(ErrorKind::BadGerm, name + " is not a polynomial in x, y");
            if (f.is_zero()) fail(ErrorKind::BadGerm, name + " is zero");
            if (f.constant_term() != 0) fail(ErrorKind::BadGerm, name + " does not vanish at the origin");
            if (!is_squarefree(f)) fail(ErrorKind::NotReduced, name + " is not squarefree");
        }
        for (std::size_t i = 0; i < components.size(); ++i)
            for (std::size_t j = i + 1; j < components.size(); ++j)
                if (!is_constant(bivariate_gcd(components[i], components[j])))
                    fail(ErrorKind::NotReduced, "components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                    " share a factor");
    }
};

/// Original coordinates (x, y) as polynomials in the local chart (u, v)
/// whose origin is the blown-up point.
struct CenterMap {
    LaurentPolynomial x{2}, y{2};
};

struct ResolutionNode {
    std::vector<long> a;                 // order of each component along the node
    long c = 0;                          // order of dx ^ dy
    std::set<std::size_t> adj;           // 0-based node indices
    std::map<std::size_t, long> strict;  // component -> number of strict-transform points
    std::optional<CenterMap> center;     // chart at the blown-up point, when known

    long multiplicity() const {
        long s = 0;
        for (long x : a) s += x;
        return s;
    }
    long strict_points() const {
        long s = 0;
        for (const auto &[i, n] : strict) s += n;
        return s;
    }
    /// Euler characteristic of E minus its intersections with the rest of
    /// the total transform.
    long euler_open() const { return 2 - static_cast<long>(adj.size()) - strict_points(); }
};

struct ResolutionTree {
    std::size_t r = 1;
    std::vector<ResolutionNode> nodes; // creation order

    bool empty() const { return nodes.empty(); }
    bool has_centers() const {
        for (const auto &n : nodes)
            if (!n.center) return false;
        return true;
    }

    void validate() const {
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const auto &n = nodes[k];
            const std::string name = "node " + std::to_string(k + 1);
            if (n.a.size() != r) fail(ErrorKind::Validation, name + ": multiplicity vector must have length " + std::to_string(r));
            bool positive = false;
            for (long x : n.a) {
                if (x < 0) fail(ErrorKind::Validation, name + ": negative multiplicity");
                positive = positive || x > 0;
            }
            if (!positive) fail(ErrorKind::Validation, name + ": all multiplicities are zero");
            if (n.c < 1) fail(ErrorKind::Validation, name + ": canonical multiplicity must be positive");
            for (auto j : n.adj) {
                if (j >= nodes.size() || j == k) fail(ErrorKind::Validation, name + ": bad adjacency entry");
                if (!nodes[j].adj.count(k)) fail(ErrorKind::Validation, name + ": adjacency is not symmetric");
            }
            for (const auto &[i, cnt] : n.strict)
                if (i >= r || cnt < 0) fail(ErrorKind::Validation, name + ": bad strict incidence");
        }
        if (nodes.empty()) return;
        std::set<std::size_t> seen{0};
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            auto k = stack.back();
            stack.pop_back();
            for (auto j : nodes[k].adj)
                if (seen.insert(j).second) stack.push_back(j);
        }
        if (seen.size() != nodes.size()) fail(ErrorKind::Validation, "resolution tree is not connected");
    }
};

namespace detail {

inline Exponent ex2(long a, long b) { return Exponent{a, b}; }

/// Substitutes (u, v) -> (X, Y) in p, both bivariate.
inline LaurentPolynomial substitute(const LaurentPolynomial &p, const LaurentPolynomial &x, const LaurentPolynomial &y) {
    return p.compose({x, y});
}

/// Distinct rational roots of a nonzero polynomial, ascending.
inline std::vector<Rational> rational_roots(const UPoly &h) {
    std::vector<Rational> roots;
    if (h.degree() <= 0) return roots;
    UPoly p = h;
    if (p.coeff(0) == 0) {
        roots.emplace_back(0);
        p = p.shift_down(p.low_degree());
    }
    auto z = primitive_integer_coeffs(p);
    Integer a0 = abs(z.front()), an = abs(z.back());
    const Integer limit("1000000000000");
    if (a0 > limit || an > limit) fail(ErrorKind::Unsupported, "tangent directions with very large coefficients");
    auto divisors = [](const Integer &n) {
        std::vector<Integer> d;
        for (Integer i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                Integer other = n / i;
                if (other != i) d.push_back(other);
            }
        return d;
    };
    std::set<Rational> found;
    for (const auto &pp : divisors(a0))
        for (const auto &qq : divisors(an))
            for (int s : {1, -1}) {
                Rational cand = make_rational(Integer(s * pp), qq);
                if (p.degree() > 0 && p.eval(cand) == 0) found.insert(cand);
            }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Dehomogenize a form of degree m in (u, v): coefficient of u^{m-j} v^j -> lambda^j.
inline UPoly dehomogenize(const LaurentPolynomial &form) {
    std::vector<Rational> c;
    for (const auto &[e, a] : form.terms()) {
        auto j = static_cast<std::size_t>(e[1]);
        if (c.size() <= j) c.resize(j + 1, Rational(0));
        c[j] += a;
    }
    return UPoly(std::move(c));
}

struct BlowupPoint {
    std::vector<std::optional<LaurentPolynomial>> g; // strict transforms; nullopt when not through the point
    std::optional<std::size_t> exc_u, exc_v;          // exceptional nodes {u = 0}, {v = 0}
    CenterMap map;
};

class Resolver {
  public:
    explicit Resolver(std::size_t r, std::size_t max_nodes) : max_nodes_(max_nodes) { tree_.r = r; }

    ResolutionTree run(const PlaneCurveGerm &germ) {
        BlowupPoint root;
        for (const auto &f : germ.components) root.g.emplace_back(f);
        root.map.x = LaurentPolynomial::variable(2, 0);
        root.map.y = LaurentPolynomial::variable(2, 1);
        visit(root, true);
        return tree_;
    }

  private:
    void add_strict(std::size_t node, std::size_t comp, long count) {
        if (count > 0) tree_.nodes[node].strict[comp] += count;
    }

    void visit(const BlowupPoint &pt, bool is_root) {
        const std::size_t r = tree_.r;
        std::vector<long> ord(r, 0);
        long m = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (!pt.g[i] || pt.g[i]->constant_term() != 0) continue;
            ord[i] = pt.g[i]->order();
            m += ord[i];
        }
        const long exc_count = (pt.exc_u ? 1 : 0) + (pt.exc_v ? 1 : 0);
        if (is_root) {
            if (m <= 1) return;
        } else {
            const long mult = m + exc_count;
            bool nc = mult <= 1;
            if (mult == 2) {
                LaurentPolynomial cone = LaurentPolynomial::constant(2, 1);
                if (pt.exc_u) cone *= LaurentPolynomial::variable(2, 0);
                if (pt.exc_v) cone *= LaurentPolynomial::variable(2, 1);
                for (std::size_t i = 0; i < r; ++i)
                    if (ord[i] > 0) cone *= pt.g[i]->lowest_form();
                Rational A = cone.coefficient(ex2(2, 0)), B = cone.coefficient(ex2(1, 1)), C = cone.coefficient(ex2(0, 2));
                nc = B * B - 4 * A * C != 0;
            }
            if (nc) {
                std::optional<std::size_t> host = pt.exc_u ? pt.exc_u : pt.exc_v;
                for (std::size_t i = 0; i < r; ++i)
                    if (ord[i] > 0 && host) add_strict(*host, i, 1);
                return;
            }
        }
        if (tree_.nodes.size() >= max_nodes_)
            fail(ErrorKind::Unsupported, "resolution exceeded " + std::to_string(max_nodes_) + " blow-ups");

        // New exceptional curve.
        const std::size_t k = tree_.nodes.size();
        ResolutionNode node;
        node.a = ord;
        node.c = 1;
        for (auto e : {pt.exc_u, pt.exc_v}) {
            if (!e) continue;
            for (std::size_t i = 0; i < r; ++i) node.a[i] += tree_.nodes[*e].a[i];
            node.c += tree_.nodes[*e].c;
            node.adj.insert(*e);
        }
        node.center = pt.map;
        tree_.nodes.push_back(node);
        for (auto e : {pt.exc_u, pt.exc_v})
            if (e) tree_.nodes[*e].adj.insert(k);
        if (pt.exc_u && pt.exc_v) {
            tree_.nodes[*pt.exc_u].adj.erase(*pt.exc_v);
            tree_.nodes[*pt.exc_v].adj.erase(*pt.exc_u);
        }

        // Tangent directions.
        LaurentPolynomial cone = LaurentPolynomial::constant(2, 1);
        for (std::size_t i = 0; i < r; ++i)
            if (ord[i] > 0) cone *= pt.g[i]->lowest_form();
        const UPoly h = dehomogenize(cone);
        const auto roots = rational_roots(h);
        UPoly rest = h;
        for (const auto &l : roots) {
            UPoly lin = UPoly::linear_root(l), q;
            while (divides(lin, rest, &q)) rest = q;
        }
        if (rest.degree() > 0) {
            if (gcd(rest, rest.derivative()).degree() > 0)
                fail(ErrorKind::NonRationalInfinitelyNearPoint,
                     "tangent directions satisfy " + LaurentPolynomial::from_upoly(rest.monic()).to_string({"lambda"}) +
                         " with repeated irrational roots; supply an explicit resolution tree file instead");
            for (std::size_t i = 0; i < r; ++i)
                if (ord[i] > 0) add_strict(k, i, gcd(rest, dehomogenize(pt.g[i]->lowest_form())).degree());
        }

        const LaurentPolynomial u = LaurentPolynomial::variable(2, 0), v = LaurentPolynomial::variable(2, 1);
        for (const auto &l : roots) {
            // (u, v) -> (u, u (v + lambda)); the new curve is {u = 0}.
            const LaurentPolynomial nx = u, ny = u * (v + LaurentPolynomial::constant(2, l));
            BlowupPoint child;
            child.exc_u = k;
            if (l == 0) child.exc_v = pt.exc_v;
            child.map = {substitute(pt.map.x, nx, ny), substitute(pt.map.y, nx, ny)};
            for (std::size_t i = 0; i < r; ++i) {
                if (ord[i] == 0) {
                    child.g.emplace_back(std::nullopt);
                    continue;
                }
                child.g.emplace_back(substitute(*pt.g[i], nx, ny).shifted(ex2(-ord[i], 0)));
            }
            visit(child, false);
        }
        if (h.degree() < m) {
            // Direction {u = 0}: (u, v) -> (u v, v); the new curve is {v = 0}.
            const LaurentPolynomial nx = u * v, ny = v;
            BlowupPoint child;
            child.exc_u = pt.exc_u;
            child.exc_v = k;
            child.map = {substitute(pt.map.x, nx, ny), substitute(pt.map.y, nx, ny)};
            for (std::size_t i = 0; i < r; ++i) {
                if (ord[i] == 0) {
                    child.g.emplace_back(std::nullopt);
                    continue;
                }
                child.g.emplace_back(substitute(*pt.g[i], nx, ny).shifted(ex2(0, -ord[i])));
            }
            visit(child, false);
        }
    }

    ResolutionTree tree_;
    std::size_t max_nodes_;
};

} // namespace detail

/// Embedded resolution by point blow-ups at rational infinitely near points.
inline ResolutionTree resolve(const PlaneCurveGerm &germ, std::size_t max_nodes = 400) {
    germ.validate();
    return detail::Resolver(germ.r(), max_nodes).run(germ);
}

/// ord along node k of the pullback of phi, capped at cap.
inline long pullback_order(const ResolutionTree &t, std::size_t k, const LaurentPolynomial &phi, long cap) {
    const auto &node = t.nodes.at(k);
    if (!node.center)
        fail(ErrorKind::Unsupported, "node " + std::to_string(k + 1) + " carries no chart data; pullback orders need it");
    if (phi.var_count() != 2 || !phi.is_polynomial()) fail(ErrorKind::BadGerm, "germ must be a polynomial in x, y");
    LaurentPolynomial pb = phi.truncated(cap).compose({node.center->x, node.center->y}, cap);
    if (pb.is_zero()) return cap;
    return std::min(pb.order(), cap);
}

} // namespace alexinv
