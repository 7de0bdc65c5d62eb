#include <gtest/gtest.h>

#include <random>

#include "alexinv/braid.hpp"
#include "alexinv/io.hpp"

using namespace alexinv;

namespace {

BraidWord braid(std::size_t d, std::vector<int> letters) { return BraidWord{d, std::move(letters)}; }

GroupWord act(const BraidWord &b, std::size_t g) { return free_reduce(artin_action(b, {{g, 1}})); }

BraidWord random_braid(std::mt19937 &rng, std::size_t d, int len) {
    std::uniform_int_distribution<int> idx(1, static_cast<int>(d) - 1), coin(0, 1);
    BraidWord b{d, {}};
    for (int i = 0; i < len; ++i) b.letters.push_back(coin(rng) ? idx(rng) : -idx(rng));
    return b;
}

MonodromyData load(const std::string &name) {
    return io::monodromy_from_json(io::read_json_file(std::string(ALEXINV_DATA_DIR) + "/" + name));
}

} // namespace

TEST(Artin, SingleLetter) {
    // sigma_1 sends x1 to x1 x2 x1^-1 and x2 to x1.
    auto s = braid(2, {1});
    EXPECT_EQ(act(s, 0), (GroupWord{{0, 1}, {1, 1}, {0, -1}}));
    EXPECT_EQ(act(s, 1), (GroupWord{{0, 1}}));
    auto inv = braid(2, {1, -1});
    for (std::size_t g = 0; g < 2; ++g) EXPECT_EQ(act(inv, g), (GroupWord{{g, 1}}));
}

TEST(Artin, BadLetterReportsPosition) {
    auto b = braid(3, {1, 2, 3});
    try {
        b.validate();
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadWord);
        EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
    }
}

TEST(ArtinProperty, BraidRelations) {
    std::mt19937 rng(11);
    for (std::size_t d = 2; d <= 5; ++d)
        for (int trial = 0; trial < 20; ++trial) {
            auto prefix = random_braid(rng, d, 4), suffix = random_braid(rng, d, 4);
            auto with = [&](std::vector<int> middle) {
                BraidWord b = prefix;
                b.letters.insert(b.letters.end(), middle.begin(), middle.end());
                b.letters.insert(b.letters.end(), suffix.letters.begin(), suffix.letters.end());
                return b;
            };
            for (int i = 1; i + 1 < static_cast<int>(d); ++i) {
                auto l = with({i, i + 1, i}), r = with({i + 1, i, i + 1});
                for (std::size_t g = 0; g < d; ++g) EXPECT_EQ(act(l, g), act(r, g));
            }
            for (int i = 1; i < static_cast<int>(d); ++i)
                for (int j = i + 2; j < static_cast<int>(d); ++j) {
                    auto l = with({i, j}), r = with({j, i});
                    for (std::size_t g = 0; g < d; ++g) EXPECT_EQ(act(l, g), act(r, g));
                }
            for (int i = 1; i < static_cast<int>(d); ++i) {
                auto l = with({i, -i}), r = with({});
                for (std::size_t g = 0; g < d; ++g) EXPECT_EQ(act(l, g), act(r, g));
            }
        }
}

TEST(ArtinProperty, FixesProductWord) {
    std::mt19937 rng(12);
    for (std::size_t d = 2; d <= 5; ++d)
        for (int trial = 0; trial < 30; ++trial) {
            auto b = random_braid(rng, d, 10);
            EXPECT_EQ(free_reduce(artin_action(b, product_word(d))), product_word(d));
        }
}

TEST(FullTwist, Examples) {
    EXPECT_TRUE(full_twist_check(MonodromyData{2, {braid(2, {1}), braid(2, {1})}, {}}));
    EXPECT_TRUE(full_twist_check(MonodromyData{3, {braid(3, {1, 2, 1, 2, 1, 2})}, {}}));
    EXPECT_FALSE(full_twist_check(MonodromyData{2, {braid(2, {1})}, {}}));
    EXPECT_FALSE(full_twist_check(MonodromyData{3, {braid(3, {1, 2, 1, 2})}, {}}));
}

TEST(VanKampen, ConicFixture) {
    auto m = load("conic_braids.json");
    EXPECT_TRUE(full_twist_check(m));
    auto proj = vankampen_presentation(m, VanKampenMode::Projective);
    EXPECT_EQ(abelianization(proj).to_string(), "Z/2");
    auto aff = vankampen_presentation(m, VanKampenMode::Affine);
    EXPECT_EQ(abelianization(aff).to_string(), "Z");
    EXPECT_EQ(aff.generators, 2u);
}

TEST(VanKampen, SingleStrandIsFree) {
    MonodromyData m{1, {}, {}};
    auto p = vankampen_presentation(m, VanKampenMode::Affine);
    EXPECT_TRUE(p.relators.empty());
    EXPECT_EQ(abelianization(p).to_string(), "Z");
}

TEST(VanKampen, CuspidalCubicFixture) {
    auto m = load("cubic_cusp_braids.json");
    EXPECT_TRUE(full_twist_check(m));
    EXPECT_EQ(abelianization(vankampen_presentation(m, VanKampenMode::Projective)).to_string(), "Z/3");
}

TEST(VanKampen, LabelsMustBeConstantOnOrbits) {
    MonodromyData m{2, {braid(2, {1}), braid(2, {1})}, {"A", "B"}};
    EXPECT_THROW(vankampen_presentation(m, VanKampenMode::Affine), Error);
    // sigma_1^2 keeps both strands in place: two lines meeting at a node.
    MonodromyData lines{2, {braid(2, {1, 1})}, {"A", "B"}};
    auto p = vankampen_presentation(lines, VanKampenMode::Affine);
    EXPECT_EQ(p.rank, 2u);
    EXPECT_EQ(abelianization(p).to_string(), "Z + Z");
}

TEST(VanKampenProperty, ProjectiveIrreducibleGivesCyclicOfOrderD) {
    // Delta^2 = (s1 ... s_{d-1})^d cut into single half-twists, then shuffled
    // by Hurwitz moves; the strands stay in one orbit.
    std::mt19937 rng(13);
    for (std::size_t d = 2; d <= 5; ++d) {
        MonodromyData m{d, {}, {}};
        for (std::size_t k = 0; k < d; ++k)
            for (int i = 1; i < static_cast<int>(d); ++i) m.braids.push_back(braid(d, {i}));
        std::uniform_int_distribution<std::size_t> pos(0, m.braids.size() - 2);
        for (int move = 0; move < 6; ++move) {
            std::size_t j = pos(rng);
            BraidWord a = m.braids[j], b = m.braids[j + 1];
            // (a, b) -> (a b a^-1, a)
            BraidWord c{d, a.letters};
            c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
            for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) c.letters.push_back(-*it);
            m.braids[j] = c;
            m.braids[j + 1] = a;
        }
        ASSERT_TRUE(full_twist_check(m));
        auto p = vankampen_presentation(m, VanKampenMode::Projective);
        EXPECT_EQ(abelianization(p).to_string(), "Z/" + std::to_string(d));
    }
}
