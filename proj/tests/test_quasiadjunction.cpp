#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "alexinv/poly_parse.hpp"
#include "alexinv/quasiadjunction.hpp"
#include "alexinv/resolution.hpp"
#include "oracles.hpp"

using namespace alexinv;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
LaurentPolynomial P(const std::string &s) { return parse_polynomial(s); }

// The trees must outlive the QuasiAdjunction objects that refer to them.
struct Local {
    ResolutionTree tree;
    std::unique_ptr<QuasiAdjunction> q;
    explicit Local(std::vector<std::string> germ, long jet = 0) : tree(resolve(PlaneCurveGerm::parse(germ))) {
        q = std::make_unique<QuasiAdjunction>(tree, jet);
    }
};

std::vector<Rational> grid(long max_den) {
    std::set<Rational> s;
    for (long d = 1; d <= max_den; ++d)
        for (long n = 1; n <= d; ++n) s.insert(make_rational(n, d));
    return {s.begin(), s.end()};
}

void for_each_point(std::size_t r, const std::vector<Rational> &g, const std::function<void(const std::vector<Rational> &)> &fn) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
        std::vector<Rational> xi;
        for (auto i : idx) xi.push_back(g[i]);
        fn(xi);
        std::size_t k = 0;
        while (k < r && ++idx[k] == g.size()) idx[k++] = 0;
        if (k == r) return;
    }
}

const std::vector<std::vector<std::string>> &fixture_germs() {
    static const std::vector<std::vector<std::string>> g{
        {"x^2 + y^3"}, {"x^2 + y^5"}, {"x^3 + y^4"}, {"x^3 + y^3"}, {"x", "y"},
        {"x^2 - y^3", "x^3 - y^2"}, {"x^2 - y^3", "y"}, {"y - x", "y - 2*x", "y - 3*x"},
    };
    return g;
}

// Brieskorn constants from the monomial formula.
std::set<Rational> monomial_constants(long a, long b) {
    std::set<Rational> s;
    for (long i = 0; i < a; ++i)
        for (long j = 0; j < b; ++j) {
            Rational k = kappa_constant(a, b, i, j);
            if (k > 0) s.insert(k);
        }
    return s;
}

} // namespace

TEST(ClosedFormulas, Kappa) {
    EXPECT_EQ(kappa_constant(2, 3, 0, 0), q(1, 6));
    EXPECT_EQ(kappa_constant(2, 3, 1, 0), q(0));
    EXPECT_EQ(kappa_constant(2, 5, 0, 0), q(3, 10));
    EXPECT_EQ(kappa_constant(2, 5, 0, 1), q(1, 10));
    EXPECT_EQ(kappa_constant(3, 3, 0, 0), q(1, 3));
    EXPECT_THROW(kappa_constant(0, 3, 0, 0), Error);
}

TEST(ClosedFormulas, NewtonMembership) {
    EXPECT_TRUE(newton_adjoint_membership(2, 3, 6, 0, 0, 1));
    EXPECT_FALSE(newton_adjoint_membership(2, 3, 6, 0, 0, 0));
    EXPECT_TRUE(newton_adjoint_membership(2, 3, 6, 1, 0, 0));
}

TEST(ClosedFormulas, XiStepsIsLeastAdjointPower) {
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long i = 0; i <= 4; ++i)
                for (long j = 0; j <= 4; ++j)
                    for (long n = 1; n <= 12; ++n) {
                        long k = 0;
                        while (!newton_adjoint_membership(a, b, n, i, j, k)) ++k;
                        EXPECT_EQ(xi_steps(a, b, i, j, n), k) << a << b << i << j << n;
                    }
}

TEST(Ideals, Cusp) {
    Local cusp({"x^2 + y^3"});
    auto strict = cusp.q->ideal({q(1, 6)}, IdealVariant::Strict);
    EXPECT_EQ(strict.colength, 1);
    EXPECT_EQ(strict.non_members, (std::vector<Exponent>{{0, 0}}));
    EXPECT_TRUE(cusp.q->member(P("x"), {q(1, 6)}, IdealVariant::Strict));
    EXPECT_TRUE(cusp.q->member(P("y"), {q(1, 6)}, IdealVariant::Strict));
    EXPECT_FALSE(cusp.q->member(P("1 + x"), {q(1, 6)}, IdealVariant::Strict));
    EXPECT_EQ(cusp.q->colength({q(1, 6)}, IdealVariant::Log), 0);
    EXPECT_EQ(cusp.q->colength({q(1, 2)}, IdealVariant::Strict), 0);
    EXPECT_EQ(cusp.q->colength({q(1, 12)}, IdealVariant::Log), 1);
    EXPECT_THROW(cusp.q->member(P("x^-1"), {q(1, 2)}, IdealVariant::Strict), Error);
    EXPECT_THROW(cusp.q->ideal({q(0)}, IdealVariant::Strict), Error);
}

TEST(Constants, CuspAndOthers) {
    Local cusp({"x^2 + y^3"});
    EXPECT_EQ(constants_of_quasiadjunction(*cusp.q), (std::vector<Rational>{q(1, 6)}));
    Local a25({"x^2 + y^5"});
    EXPECT_EQ(constants_of_quasiadjunction(*a25.q), (std::vector<Rational>{q(1, 10), q(3, 10)}));
    Local a33({"x^3 + y^3"});
    EXPECT_EQ(constants_of_quasiadjunction(*a33.q), (std::vector<Rational>{q(1, 3)}));
    Local node({"x", "y"});
    try {
        constants_of_quasiadjunction(*node.q);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UseFacesForMultiComponent);
    }
}

TEST(Constants, BrieskornMatchesMonomialFormula) {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 3}, {2, 4}, {4, 5}}) {
        std::string g = "x^" + std::to_string(a) + " + y^" + std::to_string(b);
        Local l({g});
        auto c = constants_of_quasiadjunction(*l.q);
        auto expected = monomial_constants(a, b);
        EXPECT_EQ(std::set<Rational>(c.begin(), c.end()), expected) << g;
    }
}

TEST(Lct, Examples) {
    Local cusp({"x^2 + y^3"}), node({"x", "y"}), a25({"x^2 + y^5"});
    EXPECT_TRUE(lct_region(cusp.tree, {q(5, 6)}));
    EXPECT_FALSE(lct_region(cusp.tree, {q(9, 10)}));
    EXPECT_EQ(lct_threshold(cusp.tree, {q(1)}), q(5, 6));
    for (const auto &g1 : grid(4))
        for (const auto &g2 : grid(4)) EXPECT_TRUE(lct_region(node.tree, {g1, g2}));
    EXPECT_EQ(lct_threshold(node.tree, {q(1), q(1)}), q(1));
    EXPECT_EQ(lct_threshold(a25.tree, {q(1)}), q(7, 10));
}

TEST(Lct, NewtonPolygonOracle) {
    for (long a = 2; a <= 5; ++a)
        for (long b = a; b <= 7; ++b) {
            std::string g = "x^" + std::to_string(a) + " + y^" + std::to_string(b);
            if (a == b && a > 3) continue;
            auto t = resolve(PlaneCurveGerm::parse({g}));
            Rational expected = std::min(Rational(1), Rational(q(1, a) + q(1, b)));
            EXPECT_EQ(lct_threshold(t, {q(1)}), expected) << g;
        }
}

TEST(Lct, RegionMatchesLogIdeal) {
    Local cusp({"x^2 + y^3"});
    for (const auto &xi : grid(12)) EXPECT_EQ(lct_region(cusp.tree, {1 - xi}), cusp.q->member(P("1"), {xi}, IdealVariant::Log));
}

TEST(IdealsProperty, InclusionChainOnGrid) {
    for (const auto &germ : fixture_germs()) {
        Local l(germ);
        const auto g = grid(12);
        // The ideals only depend on the per-node thresholds; test each
        // threshold pattern once.
        std::set<std::pair<std::vector<long>, std::vector<long>>> checked;
        for_each_point(l.tree.r, g, [&](const std::vector<Rational> &xi) {
            if (!checked.insert({l.q->thresholds(xi, false), l.q->thresholds(xi, true)}).second) return;
            std::vector<std::vector<std::vector<Rational>>> triple{l.q->ideal_basis(xi, IdealVariant::Strict),
                                                                  l.q->ideal_basis(xi, IdealVariant::WeightOne),
                                                                  l.q->ideal_basis(xi, IdealVariant::Log)};
            EXPECT_TRUE(oracle::row_space_within(triple[0], triple[1])) << germ[0];
            EXPECT_TRUE(oracle::row_space_within(triple[1], triple[2])) << germ[0];
        });
        EXPECT_GT(checked.size(), 0u);
    }
}

TEST(IdealsProperty, Monotone) {
    for (const auto &germ : fixture_germs()) {
        Local l(germ);
        if (l.tree.r > 2) continue;
        const auto g = grid(12);
        std::set<std::pair<std::vector<long>, std::vector<long>>> checked;
        for_each_point(l.tree.r, g, [&](const std::vector<Rational> &xi) {
            auto a = l.q->ideal_basis(xi, IdealVariant::Strict);
            for (std::size_t i = 0; i < xi.size(); ++i)
                for (const auto &bigger : g) {
                    if (bigger <= xi[i]) continue;
                    auto next = xi;
                    next[i] = bigger;
                    if (!checked.insert({l.q->thresholds(xi, false), l.q->thresholds(next, false)}).second) continue;
                    EXPECT_TRUE(oracle::row_space_within(a, l.q->ideal_basis(next, IdealVariant::Strict))) << germ[0];
                }
        });
    }
}

TEST(IdealsProperty, JetBoundIsSound) {
    for (const auto &germ : fixture_germs()) {
        Local base(germ);
        const long B = base.q->jet_bound();
        Local wide(germ, B + 3);
        for_each_point(wide.tree.r, grid(wide.tree.r == 1 ? 12 : 4), [&](const std::vector<Rational> &xi) {
            for (long d = B; d < B + 3; ++d)
                for (long i = 0; i <= d; ++i) {
                    auto m = LaurentPolynomial::monomial({i, d - i});
                    EXPECT_TRUE(wide.q->member(m, xi, IdealVariant::Strict)) << germ[0] << " degree " << d;
                }
        });
    }
}

TEST(IdealsProperty, OrderOfZeroConsistency) {
    EXPECT_EQ(order_of_zero(*Local({"x^2 + y^3"}).q, 2, {0}, {6}, P("1")), q(-1));
    Local cusp({"x^2 + y^3"}), node({"x", "y"});
    EXPECT_EQ(order_of_zero(*cusp.q, 2, {0}, {6}, P("1")), q(-1));
    EXPECT_EQ(order_of_zero(*cusp.q, 2, {1}, {6}, P("1")), q(0));
    EXPECT_EQ(order_of_zero(*cusp.q, 2, {0}, {2}, P("1")), q(1));
    std::vector<LaurentPolynomial> germs{P("1"), P("x"), P("y"), P("x^2"), P("x*y"), P("y^2"), P("x + y"), P("1 + y")};
    for (Local *l : {&cusp, &node}) {
        const std::size_t r = l->tree.r;
        std::vector<long> j(r), m(r);
        std::function<void(std::size_t)> loop = [&](std::size_t i) {
            if (i == r) {
                std::vector<Rational> xi;
                for (std::size_t c = 0; c < r; ++c) xi.push_back(make_rational(j[c] + 1, m[c]));
                for (const auto &phi : germs) {
                    bool all0 = true, all1 = true;
                    for (std::size_t k = 0; k < l->tree.nodes.size(); ++k) {
                        Rational o = order_of_zero(*l->q, k, j, m, phi);
                        all0 = all0 && o >= 0;
                        all1 = all1 && o >= -1;
                    }
                    EXPECT_EQ(l->q->member(phi, xi, IdealVariant::Strict), all0);
                    EXPECT_EQ(l->q->member(phi, xi, IdealVariant::Log), all1);
                }
                return;
            }
            for (m[i] = 1; m[i] <= 6; ++m[i])
                for (j[i] = 0; j[i] < m[i]; ++j[i]) loop(i + 1);
        };
        loop(0);
    }
}

TEST(Faces, Cusp) {
    Local cusp({"x^2 + y^3"});
    auto faces = faces_of_quasiadjunction(polytopes_and_faces(*cusp.q));
    ASSERT_EQ(faces.size(), 1u);
    EXPECT_EQ(faces[0].dimension, 0u);
    EXPECT_EQ(faces[0].point, (RationalVector{q(1, 6)}));
    EXPECT_EQ(faces[0].dim_quotient, 1);
}

TEST(Faces, NodeHasNone) {
    Local node({"x", "y"});
    EXPECT_TRUE(faces_of_quasiadjunction(polytopes_and_faces(*node.q)).empty());
}

TEST(Faces, TooManyComponents) {
    Local four({"y - x", "y - 2*x", "y - 3*x", "y - 4*x"});
    try {
        polytopes_and_faces(*four.q);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
    }
}

TEST(Faces, TwoCuspSegmentMatchesVertexEnumeration) {
    Local l({"x^2 - y^3", "x^3 - y^2"});
    // Oracle: the region where 1 lies in A'' is cut out by
    // a_k . xi >= sum a_k - c_k - 1 inside the unit square. Enumerate its
    // vertices by intersecting boundary lines pairwise.
    std::vector<std::pair<RationalVector, Rational>> lines{{{q(1), q(0)}, q(0)}, {{q(1), q(0)}, q(1)},
                                                          {{q(0), q(1)}, q(0)}, {{q(0), q(1)}, q(1)}};
    std::vector<std::pair<RationalVector, Rational>> halfspaces;
    for (const auto &n : l.tree.nodes) {
        RationalVector a{q(n.a[0]), q(n.a[1])};
        halfspaces.push_back({a, q(n.multiplicity() - n.c - 1)});
        lines.push_back(halfspaces.back());
    }
    auto inside = [&](const RationalVector &p) {
        if (p[0] < 0 || p[0] > 1 || p[1] < 0 || p[1] > 1) return false;
        for (const auto &[a, b] : halfspaces)
            if (a[0] * p[0] + a[1] * p[1] < b) return false;
        return true;
    };
    std::set<RationalVector> on_segment;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t k = i + 1; k < lines.size(); ++k) {
            const auto &[a, b] = lines[i];
            const auto &[c, d] = lines[k];
            Rational det = a[0] * c[1] - a[1] * c[0];
            if (det == 0) continue;
            RationalVector p{(b * c[1] - a[1] * d) / det, (a[0] * d - b * c[0]) / det};
            if (inside(p) && 6 * p[0] + 4 * p[1] == 5) on_segment.insert(p);
        }
    ASSERT_EQ(on_segment.size(), 2u);

    auto faces = faces_of_quasiadjunction(polytopes_and_faces(*l.q));
    bool found = false;
    for (const auto &f : faces) {
        if (f.dimension != 1) continue;
        std::set<RationalVector> vs(f.vertices.begin(), f.vertices.end());
        if (vs == on_segment) {
            found = true;
            EXPECT_GT(f.dim_quotient, 0);
        }
    }
    EXPECT_TRUE(found);
}

TEST(FacesProperty, IdealsConstantOnFaceInteriors) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> weight(1, 9);
    for (const auto &germ : std::vector<std::vector<std::string>>{{"x^2 + y^3"}, {"x^2 + y^5"}, {"x^2 - y^3", "x^3 - y^2"},
                                                                   {"x^2 - y^3", "y"}}) {
        Local l(germ);
        for (const auto &f : faces_of_quasiadjunction(polytopes_and_faces(*l.q))) {
            if (f.dimension == 0) continue;
            const auto ref_a = l.q->ideal_basis(f.point, IdealVariant::Strict);
            const auto ref_log = l.q->ideal_basis(f.point, IdealVariant::Log);
            for (int s = 0; s < 5; ++s) {
                // Pull the generic point slightly towards a random convex
                // combination of the vertices.
                RationalVector target(f.point.size(), Rational(0));
                Rational total = 0;
                for (const auto &v : f.vertices) {
                    Rational w = weight(rng);
                    total += w;
                    for (std::size_t i = 0; i < v.size(); ++i) target[i] += w * v[i];
                }
                RationalVector p = f.point;
                for (std::size_t i = 0; i < p.size(); ++i) p[i] += (target[i] / total - p[i]) / 1000;
                EXPECT_EQ(l.q->ideal_basis(p, IdealVariant::Strict), ref_a) << germ[0];
                EXPECT_EQ(l.q->ideal_basis(p, IdealVariant::Log), ref_log) << germ[0];
            }
        }
    }
}
