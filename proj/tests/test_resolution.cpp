#include <gtest/gtest.h>

#include <numeric>

#include "alexinv/group.hpp"
#include "alexinv/io.hpp"
#include "alexinv/local_invariants.hpp"
#include "alexinv/resolution.hpp"

using namespace alexinv;

namespace {

LaurentPolynomial U(std::initializer_list<long> c) { return LaurentPolynomial::univariate(c); }

ResolutionTree tree_of(std::vector<std::string> germ) { return resolve(PlaneCurveGerm::parse(germ)); }

std::string brieskorn(long a, long b) { return "x^" + std::to_string(a) + " + y^" + std::to_string(b); }

std::vector<std::string> lines(long r) {
    std::vector<std::string> out;
    for (long i = 1; i <= r; ++i) out.push_back("y - " + std::to_string(i) + "*x");
    return out;
}

// <x, y | x^p = y^q>, the torus knot group, with x -> q and y -> p.
GroupPresentation torus_knot_group(long p, long q) {
    GroupWord rel;
    for (long i = 0; i < p; ++i) rel.push_back({0, 1});
    for (long i = 0; i < q; ++i) rel.push_back({1, -1});
    GroupPresentation g = uniform_presentation(2, {rel});
    g.phi = {{q}, {p}};
    return g;
}

// f(t1, ..., t_{r-1}, 1).
LaurentPolynomial set_last_to_one(const LaurentPolynomial &f) {
    const std::size_t n = f.var_count();
    LaurentPolynomial out(n - 1);
    for (const auto &[e, c] : f.terms()) out.add_term(Exponent(e.begin(), e.end() - 1), c);
    return out;
}

struct Germ {
    std::vector<std::string> components;
    long milnor;
};

// Milnor numbers from (a-1)(b-1) for x^a + y^b and
// mu(fg) = mu(f) + mu(g) + 2 (f.g) - 1.
const std::vector<Germ> &fixtures() {
    static const std::vector<Germ> g{
        {{"x^2 + y^3"}, 2},          {{"x^2 + y^5"}, 4},        {{"x^3 + y^4"}, 6},
        {{"x^2 - y^3", "x^3 - y^2"}, 11}, {{"x", "y"}, 1},       {lines(3), 4},
        {lines(4), 9},               {{"x^3 + y^3"}, 4},        {{"x^2 + y^4"}, 3},
        {{"x^2 - y^3", "y"}, 2 + 0 + 2 * 2 - 1},
    };
    return g;
}

} // namespace

TEST(Resolution, CuspChain) {
    auto t = tree_of({"x^2 + y^3"});
    ASSERT_EQ(t.nodes.size(), 3u);
    std::vector<std::pair<long, long>> ac;
    for (const auto &n : t.nodes) ac.push_back({n.a[0], n.c});
    EXPECT_EQ(ac, (std::vector<std::pair<long, long>>{{2, 1}, {3, 2}, {6, 4}}));
    EXPECT_EQ(t.nodes[2].euler_open(), -1);
    EXPECT_EQ(t.nodes[2].strict_points(), 1);
}

TEST(Resolution, NodeIsOneBlowUp) {
    auto t = tree_of({"x", "y"});
    ASSERT_EQ(t.nodes.size(), 1u);
    EXPECT_EQ(t.nodes[0].a, (std::vector<long>{1, 1}));
    EXPECT_EQ(t.nodes[0].c, 1);
    EXPECT_EQ(t.nodes[0].euler_open(), 0);
}

TEST(Resolution, Errors) {
    auto kind_of = [](std::vector<std::string> g) {
        try {
            tree_of(g);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::Validation;
    };
    EXPECT_EQ(kind_of({"x^2"}), ErrorKind::NotReduced);
    EXPECT_EQ(kind_of({"x + 1"}), ErrorKind::BadGerm);
    EXPECT_EQ(kind_of({"x", "x*(1+y)"}), ErrorKind::NotReduced);
    EXPECT_THROW(PlaneCurveGerm::parse({"x^"}), Error);
}

TEST(Resolution, TreeSanity) {
    for (const auto &g : fixtures()) {
        auto t = tree_of(g.components);
        t.validate();
        long chi = 0, strict = 0;
        std::size_t edges = 0;
        for (const auto &n : t.nodes) {
            chi += n.euler_open();
            strict += n.strict_points();
            edges += n.adj.size();
            EXPECT_EQ(n.euler_open(), 2 - static_cast<long>(n.adj.size()) - n.strict_points());
        }
        EXPECT_EQ(edges, 2 * (t.nodes.size() - 1)) << g.components[0];
        // A tree of P^1's minus the marked points.
        EXPECT_EQ(chi, 2 - strict) << g.components[0];
    }
}

TEST(LocalAlexander, TorusKnotRoutesAgree) {
    EXPECT_EQ(torus_knot_alexander(2, 3), U({1, -1, 1}));
    EXPECT_EQ(torus_knot_alexander(2, 5), U({1, -1, 1, -1, 1}));
    EXPECT_EQ(torus_knot_alexander(1, 7), U({1}));
    EXPECT_THROW(torus_knot_alexander(2, 4), Error);
    for (long a = 2; a <= 5; ++a)
        for (long b = a + 1; b <= 7; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto closed = torus_knot_alexander(a, b);
            auto zeta_route = local_alexander_from_zeta(acampo_zeta(tree_of({brieskorn(a, b)})));
            auto fox_route = one_variable_alexander(torus_knot_group(a, b));
            EXPECT_TRUE(equal_up_to_unit(closed, zeta_route)) << a << "," << b;
            EXPECT_TRUE(equal_up_to_unit(closed, fox_route)) << a << "," << b;
            long shift = 0;
            EXPECT_EQ(static_cast<long>(to_upoly(zeta_route, &shift).degree()), (a - 1) * (b - 1));
        }
}

TEST(LocalAlexander, DegreeIsMilnorNumber) {
    for (const auto &g : fixtures()) {
        auto t = tree_of(g.components);
        auto delta = local_alexander(t);
        long shift = 0;
        EXPECT_EQ(static_cast<long>(to_upoly(delta, &shift).degree()), g.milnor) << g.components[0];
    }
}

TEST(LocalAlexander, ZetaTimesDeltaIsTMinusOne) {
    for (const auto &g : fixtures()) {
        auto t = tree_of(g.components);
        LaurentPolynomial num = U({1}), den = U({1});
        for (const auto &n : t.nodes) {
            LaurentPolynomial f = U({1}) - LaurentPolynomial::monomial({n.multiplicity()});
            if (n.euler_open() > 0) num *= f.pow(static_cast<unsigned>(n.euler_open()));
            if (n.euler_open() < 0) den *= f.pow(static_cast<unsigned>(-n.euler_open()));
        }
        EXPECT_TRUE(equal_up_to_unit(local_alexander(t) * num, U({-1, 1}) * den)) << g.components[0];
    }
}

TEST(LocalAlexander, SmoothBranch) {
    EXPECT_EQ(local_alexander(tree_of({"y - x^2"})), U({1}));
}

TEST(Multivariable, HopfLinks) {
    for (long r = 2; r <= 4; ++r) {
        auto t = tree_of(lines(r));
        LaurentPolynomial expected = LaurentPolynomial::constant(static_cast<std::size_t>(r), 1);
        LaurentPolynomial base =
            expected - LaurentPolynomial::monomial(Exponent(static_cast<std::size_t>(r), 1));
        expected = base.pow(static_cast<unsigned>(r - 2));
        EXPECT_EQ(multivariable_link_alexander(t).expand(), expected) << r;
    }
    EXPECT_THROW(multivariable_link_alexander(tree_of({"x^2 + y^3"})), Error);
}

TEST(Multivariable, DiagonalSpecialization) {
    for (const auto &g : fixtures()) {
        auto t = tree_of(g.components);
        if (t.r < 2) continue;
        auto multi = multivariable_link_alexander(t);
        EXPECT_TRUE(multi.diagonal_specialize().same_factors(acampo_zeta(t).inverse())) << g.components[0];
        auto diag = multi.diagonal_specialize().expand();
        EXPECT_TRUE(equal_up_to_unit(diag * U({-1, 1}), local_alexander(t))) << g.components[0];
    }
}

TEST(Multivariable, TwoCuspsSatisfyTorres) {
    auto t = tree_of({"x^2 - y^3", "x^3 - y^2"});
    EXPECT_EQ(t.nodes.size(), 5u);
    auto delta = multivariable_link_alexander(t).expand();
    const auto t1 = LaurentPolynomial::variable(2, 0), t2 = LaurentPolynomial::variable(2, 1);
    const auto one = LaurentPolynomial::constant(2, 1);
    EXPECT_EQ(delta, (one + t1 * t1 * t2 * t2 * t2) * (one + t1 * t1 * t1 * t2 * t2));
    // Delta(t, 1) = Delta_K(t) (t^l - 1) / (t - 1) with linking number l = 4.
    EXPECT_TRUE(equal_up_to_unit(set_last_to_one(delta), U({1, -1, 1}) * U({1, 1, 1, 1})));
    auto node = multivariable_link_alexander(tree_of({"x", "y"})).expand();
    EXPECT_EQ(node, LaurentPolynomial::constant(2, 1));
}

TEST(HodgeToFitting, Examples) {
    EXPECT_EQ(fitting_exponents_from_hodge(0, 1, 0), (std::vector<long>{1}));
    EXPECT_EQ(fitting_exponents_from_hodge(1, 0, 0), (std::vector<long>{2}));
    EXPECT_EQ(fitting_exponents_from_hodge(1, 1, 1), (std::vector<long>{4, 2, 1}));
    EXPECT_TRUE(fitting_exponents_from_hodge(0, 0, 0).empty());
    try {
        fitting_exponents_from_hodge(-1, 0, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadHodgeData);
    }
}

TEST(HodgeToFitting, NonIncreasingWithExpectedLength) {
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b)
            for (long c = 0; c <= 5; ++c) {
                auto v = fitting_exponents_from_hodge(a, b, c);
                EXPECT_EQ(static_cast<long>(v.size()), a + b + c);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    EXPECT_GT(v[i], 0);
                    if (i > 0) {
                        EXPECT_LE(v[i], v[i - 1]);
                    }
                }
            }
}

TEST(TreeFiles, CuspFixtureMatchesResolution) {
    auto file = io::tree_from_json(io::read_json_file(std::string(ALEXINV_DATA_DIR) + "/cusp_tree.json"));
    auto resolved = tree_of({"x^2 + y^3"});
    EXPECT_EQ(local_alexander(file), local_alexander(resolved));
    auto back = io::tree_from_json(io::tree_json(resolved));
    ASSERT_EQ(back.nodes.size(), resolved.nodes.size());
    for (std::size_t k = 0; k < back.nodes.size(); ++k) {
        EXPECT_EQ(back.nodes[k].a, resolved.nodes[k].a);
        EXPECT_EQ(back.nodes[k].c, resolved.nodes[k].c);
        EXPECT_EQ(back.nodes[k].adj, resolved.nodes[k].adj);
        EXPECT_EQ(back.nodes[k].strict, resolved.nodes[k].strict);
    }
}

TEST(TreeFiles, RejectsAsymmetricAdjacency) {
    auto j = io::json::parse(R"({"r": 1, "nodes": [{"id": 1, "a": [2], "c": 1, "adj": [2]},
                                                  {"id": 2, "a": [3], "c": 2, "adj": []}]})");
    EXPECT_THROW(io::tree_from_json(j), Error);
}
