#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alexinv/matrix.hpp"

namespace alexinv {

using RationalVector = std::vector<Rational>;

/// normal . x >= bound, or > bound when strict.
struct Halfspace {
    RationalVector normal;
    Rational bound;
    bool strict = false;

    bool contains(const RationalVector &x) const {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += normal[i] * x[i];
        return strict ? s > bound : s >= bound;
    }
    bool contains_closure(const RationalVector &x) const { return value(x) >= bound; }
    bool tight(const RationalVector &x) const { return value(x) == bound; }
    Rational value(const RationalVector &x) const {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += normal[i] * x[i];
        return s;
    }
};

/// Intersection of halfspaces with the closed unit cube [0,1]^dim, dim <= 3.
struct RationalPolytope {
    std::size_t dim = 1;
    std::vector<Halfspace> halfspaces;

    bool contains(const RationalVector &x) const {
        for (const auto &c : x)
            if (c < 0 || c > 1) return false;
        return std::all_of(halfspaces.begin(), halfspaces.end(), [&](const Halfspace &h) { return h.contains(x); });
    }
};

struct PolytopeFace {
    std::vector<std::size_t> vertices;  // indices into FaceLattice::vertices
    std::size_t dimension = 0;
    std::vector<std::size_t> saturated; // constraint indices tight on the whole face
    bool realized = true;               // relative interior lies in the (strict) polytope
};

/// Constraint indices: user halfspaces first, then x_i >= 0 and -x_i >= -1
/// for each coordinate.
struct FaceLattice {
    bool empty = true;
    std::vector<RationalVector> vertices;
    std::vector<PolytopeFace> faces;     // sorted by dimension, then vertex list
    std::vector<Halfspace> constraints;  // user halfspaces followed by cube facets

    std::vector<const PolytopeFace *> of_dimension(std::size_t d) const {
        std::vector<const PolytopeFace *> out;
        for (const auto &f : faces)
            if (f.dimension == d) out.push_back(&f);
        return out;
    }

    RationalVector centroid(const PolytopeFace &f) const {
        RationalVector c(vertices.empty() ? 0 : vertices.front().size(), Rational(0));
        for (auto v : f.vertices)
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += vertices[v][i];
        for (auto &x : c) x /= static_cast<long>(f.vertices.size());
        return c;
    }
};

inline std::size_t affine_dimension(const std::vector<RationalVector> &pts) {
    if (pts.size() <= 1) return 0;
    RationalMatrix diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        RationalVector d(pts[0].size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = pts[k][i] - pts[0][i];
        diffs.push_back(std::move(d));
    }
    return rational_rank(diffs);
}

namespace detail {
/// Unique solution of normal_k . x = bound_k for the chosen constraints.
inline std::optional<RationalVector> solve_square(const std::vector<const Halfspace *> &rows, std::size_t dim) {
    RationalMatrix aug;
    for (const auto *h : rows) {
        RationalVector r = h->normal;
        r.push_back(h->bound);
        aug.push_back(std::move(r));
    }
    auto piv = rref(aug, dim + 1);
    if (piv.size() != dim || piv.back() == dim) return std::nullopt;
    RationalVector x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = aug[i][dim];
    return x;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t> &)> &fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}
} // namespace detail

/// Exact vertex and face enumeration of the closure; strictness is tracked
/// through PolytopeFace::realized.
inline FaceLattice polytope_faces(const RationalPolytope &p) {
    const std::size_t r = p.dim;
    if (r == 0 || r > 3) fail(ErrorKind::UnsupportedDimension, "polytope engine supports dimension 1..3, got " + std::to_string(r));
    FaceLattice out;
    out.constraints = p.halfspaces;
    for (const auto &h : p.halfspaces)
        if (h.normal.size() != r) fail(ErrorKind::Validation, "halfspace normal has the wrong length");
    for (std::size_t i = 0; i < r; ++i) {
        RationalVector e(r, Rational(0));
        e[i] = 1;
        out.constraints.push_back({e, 0, false});
        e[i] = -1;
        out.constraints.push_back({e, -1, false});
    }
    const auto &cons = out.constraints;
    // Skip constraints with zero normal: they are either vacuous or empty the set.
    std::vector<std::size_t> usable;
    for (std::size_t k = 0; k < cons.size(); ++k) {
        bool zero = std::all_of(cons[k].normal.begin(), cons[k].normal.end(), [](const Rational &x) { return x == 0; });
        if (!zero) {
            usable.push_back(k);
        } else if (!(0 >= cons[k].bound)) {
            return out;
        }
    }
    std::set<RationalVector> seen;
    detail::for_each_subset(usable.size(), r, [&](const std::vector<std::size_t> &pick) {
        std::vector<const Halfspace *> rows;
        for (auto k : pick) rows.push_back(&cons[usable[k]]);
        auto x = detail::solve_square(rows, r);
        if (!x) return;
        for (const auto &h : cons)
            if (!h.contains_closure(*x)) return;
        if (seen.insert(*x).second) out.vertices.push_back(*x);
    });
    if (out.vertices.empty()) return out;
    out.empty = false;
    std::sort(out.vertices.begin(), out.vertices.end());

    std::vector<std::set<std::size_t>> tight(out.vertices.size());
    for (std::size_t v = 0; v < out.vertices.size(); ++v)
        for (std::size_t k = 0; k < cons.size(); ++k)
            if (cons[k].tight(out.vertices[v])) tight[v].insert(k);

    // Constraint sets closed under intersection generate all faces.
    std::set<std::set<std::size_t>> family(tight.begin(), tight.end());
    family.insert({});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::set<std::size_t>> cur(family.begin(), family.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::set<std::size_t> meet;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                                      std::inserter(meet, meet.begin()));
                if (family.insert(meet).second) grew = true;
            }
    }
    std::map<std::vector<std::size_t>, PolytopeFace> by_vertices;
    for (const auto &t : family) {
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < out.vertices.size(); ++v)
            if (std::includes(tight[v].begin(), tight[v].end(), t.begin(), t.end())) verts.push_back(v);
        if (verts.empty() || by_vertices.count(verts)) continue;
        PolytopeFace f;
        f.vertices = verts;
        std::vector<RationalVector> pts;
        for (auto v : verts) pts.push_back(out.vertices[v]);
        f.dimension = affine_dimension(pts);
        for (std::size_t k = 0; k < cons.size(); ++k) {
            bool all = std::all_of(verts.begin(), verts.end(), [&](std::size_t v) { return tight[v].count(k) > 0; });
            if (all) f.saturated.push_back(k);
        }
        // The centroid lies in the relative interior.
        f.realized = p.contains(out.centroid(f));
        by_vertices.emplace(verts, std::move(f));
    }
    for (auto &[k, f] : by_vertices) out.faces.push_back(std::move(f));
    std::stable_sort(out.faces.begin(), out.faces.end(),
                     [](const PolytopeFace &a, const PolytopeFace &b) { return a.dimension < b.dimension; });
    return out;
}

} // namespace alexinv
