#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "burst/groups.hpp"

using namespace burst;

namespace {

SplittingSequence cyclic_seq(std::uint64_t m, const std::vector<std::uint32_t>& values) {
    SplittingSequence s;
    s.group = AbelianGroup::cyclic(m);
    for (std::uint32_t v : values) s.elems.push_back(GroupElement{{v}});
    return s;
}

}  // namespace

TEST_CASE("element arithmetic") {
    const auto Z7 = AbelianGroup::cyclic(7);
    CHECK(g_add(Z7, GroupElement{{3}}, GroupElement{{5}}) == GroupElement{{1}});

    const auto Z6 = AbelianGroup::cyclic(6);
    CHECK(g_scalar(Z6, -1, GroupElement{{2}}) == GroupElement{{4}});

    const auto Z3Z3 = AbelianGroup::direct_sum({3, 3});
    CHECK(g_add(Z3Z3, GroupElement{{1, 2}}, GroupElement{{2, 2}}) == GroupElement{{0, 1}});

    CHECK_THROWS_AS(g_add(Z7, GroupElement{{3, 1}}, GroupElement{{5}}), ParameterError);
    CHECK_THROWS_AS(g_add(Z7, GroupElement{{9}}, GroupElement{{5}}), ParameterError);
}

TEST_CASE("dot products") {
    const auto s7 = cyclic_seq(7, {1, 2, 4});
    CHECK(dot(s7.group, {1, 1, 0}, s7) == GroupElement{{3}});
    CHECK(dot(s7.group, {0, 0, 0}, s7) == GroupElement{{0}});
    const auto s9 = cyclic_seq(9, {1, 3, 2, 6});
    CHECK(dot(s9.group, {0, 1, 0, 1}, s9) == GroupElement{{0}});
    CHECK_THROWS_AS(dot(s7.group, {1, 1}, s7), ParameterError);
    // scalar multiples reduce mod the order, including negatives
    CHECK(dot(s7.group, {-1, 0, 9}, s7) == GroupElement{{0}});
}

TEST_CASE("splitting predicate") {
    const BallSpec cyc3{3, 2, 1, 0, true};
    CHECK(is_splitting(cyc3, cyclic_seq(7, {1, 2, 4})));
    CHECK(is_perfect_splitting(cyc3, cyclic_seq(7, {1, 2, 4})));
    CHECK_FALSE(is_splitting(cyc3, cyclic_seq(7, {1, 1, 1})));

    const BallSpec cyc4{4, 2, 1, 0, true};
    CHECK(is_perfect_splitting(cyc4, cyclic_seq(9, {1, 3, 2, 6})));

    const BallSpec nc2{2, 2, 1, 0, false};
    CHECK(is_perfect_splitting(nc2, cyclic_seq(4, {1, 2})));

    // splits but not perfectly: order 8 exceeds the 7-element ball
    CHECK(is_splitting(cyc3, cyclic_seq(8, {1, 2, 4})));
    CHECK_FALSE(is_perfect_splitting(cyc3, cyclic_seq(8, {1, 2, 4})));
}

TEST_CASE("collision reporting") {
    const BallSpec cyc3{3, 2, 1, 0, true};
    const auto s = cyclic_seq(7, {1, 1, 1});
    const auto collision = find_collision(cyc3, s);
    REQUIRE(collision.has_value());
    CHECK(collision->first.entries != collision->second.entries);
    const auto img = [&](const ErrorVector& e) {
        return dot(s.group, std::vector<long long>(e.entries.begin(), e.entries.end()), s);
    };
    CHECK(img(collision->first) == collision->value);
    CHECK(img(collision->second) == collision->value);
}

TEST_CASE("perfect splitting maps the ball onto G") {
    const BallSpec cyc3{3, 2, 1, 0, true};
    const auto s = cyclic_seq(7, {1, 2, 4});
    std::set<std::uint32_t> image;
    for (const auto& e : enumerate_ball(cyc3))
        image.insert(
            dot(s.group, std::vector<long long>(e.entries.begin(), e.entries.end()), s)
                .coords[0]);
    CHECK(image.size() == 7);
}

TEST_CASE("automorphism invariance over cyclic groups") {
    const BallSpec cyc3{3, 2, 1, 0, true};
    for (std::uint32_t u = 1; u < 7; ++u) {
        auto s = cyclic_seq(7, {1, 2, 4});
        for (auto& g : s.elems) g.coords[0] = g.coords[0] * u % 7;
        CHECK(is_splitting(cyc3, s));
    }
    // a failing sequence stays failing under every unit
    for (std::uint32_t u = 1; u < 7; ++u) {
        auto s = cyclic_seq(7, {1, 1, 1});
        for (auto& g : s.elems) g.coords[0] = g.coords[0] * u % 7;
        CHECK_FALSE(is_splitting(cyc3, s));
    }
    // randomized sequences: predicate agrees with its unit image
    std::uint64_t state = 12345;
    auto rnd = [&state](std::uint32_t bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>((state >> 33) % bound);
    };
    const BallSpec spec{5, 2, 1, 1, true};
    for (int trial = 0; trial < 200; ++trial) {
        SplittingSequence s;
        s.group = AbelianGroup::cyclic(31);
        for (int i = 0; i < 5; ++i) s.elems.push_back(GroupElement{{rnd(31)}});
        const std::uint32_t u = 1 + rnd(30);  // 31 is prime, any nonzero works
        auto mapped = s;
        for (auto& g : mapped.elems) g.coords[0] = g.coords[0] * u % 31;
        CHECK(is_splitting(spec, s) == is_splitting(spec, mapped));
    }
}

TEST_CASE("rotation invariance for cyclic balls") {
    const BallSpec spec{5, 2, 1, 1, true};
    std::uint64_t state = 999;
    auto rnd = [&state](std::uint32_t bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>((state >> 33) % bound);
    };
    for (int trial = 0; trial < 200; ++trial) {
        SplittingSequence s;
        s.group = AbelianGroup::cyclic(31);
        for (int i = 0; i < 5; ++i) s.elems.push_back(GroupElement{{rnd(31)}});
        auto rotated = s;
        std::rotate(rotated.elems.begin(), rotated.elems.begin() + 1, rotated.elems.end());
        CHECK(is_splitting(spec, s) == is_splitting(spec, rotated));
    }
}

TEST_CASE("isomorphism class enumeration") {
    auto notations = [](const std::vector<AbelianGroup>& gs) {
        std::vector<std::string> out;
        for (const auto& g : gs) out.push_back(g.notation());
        return out;
    };
    CHECK(notations(enumerate_abelian_groups(31)) == std::vector<std::string>{"Z31"});
    CHECK(notations(enumerate_abelian_groups(49)) ==
          std::vector<std::string>{"Z49", "Z7xZ7"});
    CHECK(notations(enumerate_abelian_groups(12)) ==
          std::vector<std::string>{"Z4xZ3", "Z2xZ2xZ3"});

    // class count is the product of partition counts of the exponents
    const std::uint64_t partition_count[9] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    CHECK(enumerate_abelian_groups(576).size() == partition_count[6] * partition_count[2]);
    CHECK(enumerate_abelian_groups(256).size() == partition_count[8]);

    CHECK_THROWS_AS(enumerate_abelian_groups(1), ParameterError);
    CHECK_THROWS_AS(enumerate_abelian_groups(1u << 21), ResourceError);
}

TEST_CASE("group notation and sequences") {
    CHECK(parse_group("Z15").notation() == "Z15");
    CHECK(parse_group("Z3xZ5").notation() == "Z3xZ5");
    CHECK(parse_group("GF(81)").notation() == "GF(81)");
    CHECK(parse_group("GF(81)").order() == 81);
    CHECK(parse_group("Z3xZ5").order() == 15);
    CHECK_THROWS_AS(parse_group("GF(12)"), ParseError);
    CHECK_THROWS_AS(parse_group("Q8"), ParseError);
    CHECK_THROWS_AS(parse_group(""), ParseError);

    const auto Z7 = parse_group("Z7");
    const auto seq = parse_sequence(Z7, "1,2,4");
    CHECK(format_sequence(SplittingSequence{Z7, seq}) == "1,2,4");

    const auto F9 = parse_group("GF(9)");
    const auto seq9 = parse_sequence(F9, "1,0;0,2;2,0;0,1");
    CHECK(format_sequence(SplittingSequence{F9, seq9}) == "1,0;0,2;2,0;0,1");
    CHECK_THROWS_AS(parse_sequence(F9, "1,0;7,0"), ParseError);
    CHECK_THROWS_AS(parse_sequence(Z7, "1,9"), ParseError);
    CHECK_THROWS_AS(parse_sequence(Z7, "1,x"), ParseError);
}

TEST_CASE("word arithmetic round-trips") {
    const auto G = AbelianGroup::direct_sum({4, 3, 5});
    CHECK(G.order() == 60);
    CHECK(G.rank() == 1);  // 4, 3, 5 are coprime
    CHECK(AbelianGroup::direct_sum({2, 6}).rank() == 2);
    for (AbelianGroup::Word w = 0; w < 60; ++w) {
        CHECK(G.encode(G.decode(w)) == w);
        CHECK(G.add_w(w, G.neg_w(w)) == 0);
        CHECK(G.scalar_w(7, w) ==
              G.add_w(G.scalar_w(3, w), G.add_w(G.scalar_w(3, w), w)));
    }
}
