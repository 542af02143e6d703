#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "burst/errorball.hpp"

using namespace burst;

namespace {

// Independent oracle: full product expansion of [-km, kp]^n filtered by the
// minimal-covering-window test. Kept separate from the library's
// window-subset predicate.
std::set<std::vector<int>> oracle_ball(const BallSpec& spec) {
    std::set<std::vector<int>> out;
    std::vector<int> v(spec.n, -spec.k_minus);
    while (true) {
        std::vector<int> support;
        for (int i = 0; i < spec.n; ++i)
            if (v[i] != 0) support.push_back(i);

        bool member = false;
        if (support.empty()) {
            member = true;
        } else if (!spec.cyclic) {
            member = support.back() - support.front() + 1 <= spec.b;
        } else {
            // minimal circular span: n minus the largest gap between
            // consecutive support positions
            int largest_gap = support.front() + spec.n - support.back();
            for (size_t t = 1; t < support.size(); ++t)
                largest_gap = std::max(largest_gap, support[t] - support[t - 1]);
            member = spec.n - largest_gap + 1 <= spec.b || support.size() == 1;
        }
        if (member) out.insert(v);

        int i = spec.n;
        bool done = true;
        while (i-- > 0) {
            if (v[i] < spec.k_plus) {
                ++v[i];
                std::fill(v.begin() + i + 1, v.end(), -spec.k_minus);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<ErrorVector>& ball) {
    std::set<std::vector<int>> out;
    for (const auto& e : ball) out.insert(e.entries);
    return out;
}

}  // namespace

TEST_CASE("e parameter") {
    CHECK(e_param(2, 1, 0) == 2);
    CHECK(e_param(2, 1, 1) == 6);
    CHECK(e_param(3, 1, 1) == 18);
    CHECK(e_param(3, 1, 0) == 4);
    CHECK(e_param(2, 2, 0) == 6);
    CHECK_THROWS_AS(e_param(0, 1, 0), ParameterError);
    CHECK_THROWS_AS(e_param(2, 0, 0), ParameterError);
}

TEST_CASE("small balls against frozen expansions") {
    const BallSpec cyc3{3, 2, 1, 0, true};
    const std::set<std::vector<int>> expected{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                              {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    CHECK(as_set(enumerate_ball(cyc3)) == expected);
    CHECK(ball_size(cyc3) == 7);

    const BallSpec nc2{2, 2, 1, 0, false};
    const std::set<std::vector<int>> expected2{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(as_set(enumerate_ball(nc2)) == expected2);
    CHECK(ball_size(nc2) == 4);

    const BallSpec single{1, 1, 1, 0, false};
    const std::set<std::vector<int>> expected3{{0}, {1}};
    CHECK(as_set(enumerate_ball(single)) == expected3);
}

TEST_CASE("sizes quoted from the table captions") {
    CHECK(ball_size(BallSpec{4, 2, 1, 1, true}) == 25);
    CHECK(ball_size(BallSpec{3, 2, 1, 1, false}) == 15);
    CHECK(ball_size(BallSpec{3, 2, 2, 0, true}) == 19);
}

TEST_CASE("enumeration matches the product-expansion oracle") {
    for (const BallSpec spec : {
             BallSpec{3, 2, 1, 0, true}, BallSpec{3, 2, 1, 0, false},
             BallSpec{5, 2, 1, 1, true}, BallSpec{5, 2, 2, 0, false},
             BallSpec{6, 3, 1, 1, true}, BallSpec{6, 3, 1, 0, false},
             BallSpec{2, 2, 1, 1, true},  // n < 2b-1: windows overlap
             BallSpec{3, 3, 1, 1, true}, BallSpec{4, 3, 2, 1, true},
             BallSpec{4, 4, 1, 1, false},
         }) {
        INFO("ball ", format_ball_spec(spec));
        const auto ball = enumerate_ball(spec);
        CHECK(as_set(ball) == oracle_ball(spec));
        CHECK(ball.size() == as_set(ball).size());  // duplicate-free
        for (const auto& e : ball) CHECK(contains(spec, e.entries));
    }
}

TEST_CASE("closed formula in the cyclic regime") {
    for (int b = 1; b <= 3; ++b)
        for (int kp = 0; kp <= 2; ++kp)
            for (int km = 0; km <= 1; ++km) {
                if (kp + km < 1) continue;
                for (int n = 2 * b - 1; n <= 2 * b + 4; ++n) {
                    const BallSpec spec{n, b, kp, km, true};
                    CHECK(ball_size(spec) == e_param(b, kp, km) * n + 1);
                }
            }
}

TEST_CASE("b=2 family sizes over a sample of n") {
    for (int n : {2, 3, 10, 57, 200}) {
        CHECK(ball_size(BallSpec{n, 2, 1, 0, false}) == 2 * n);
        if (n >= 3) {
            CHECK(ball_size(BallSpec{n, 2, 1, 0, true}) == 2 * n + 1);
            CHECK(ball_size(BallSpec{n, 2, 1, 1, false}) == 6 * n - 3);
            CHECK(ball_size(BallSpec{n, 2, 2, 0, false}) == 6 * n - 3);
            CHECK(ball_size(BallSpec{n, 2, 1, 1, true}) == 6 * n + 1);
            CHECK(ball_size(BallSpec{n, 2, 2, 0, true}) == 6 * n + 1);
        }
    }
}

TEST_CASE("membership predicate") {
    const BallSpec cyc{3, 2, 1, 0, true};
    const BallSpec nc{3, 2, 1, 0, false};
    CHECK(contains(cyc, {1, 0, 1}));        // wraparound window at i=2
    CHECK_FALSE(contains(nc, {1, 0, 1}));   // non-cyclic window cannot wrap
    CHECK_FALSE(contains(cyc, {1, 1, 1}));  // three nonzeros exceed b=2
    CHECK(contains(cyc, {0, 0, 0}));
    CHECK_FALSE(contains(cyc, {-1, 0, 0}));  // below magnitude
    CHECK_THROWS_AS(contains(cyc, {1, 0}), ParameterError);
}

TEST_CASE("cyclic ball is rotation invariant") {
    for (const BallSpec spec : {BallSpec{6, 2, 1, 1, true}, BallSpec{7, 3, 1, 0, true}}) {
        for (const auto& e : enumerate_ball(spec)) {
            std::vector<int> rotated(e.entries);
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            CHECK(contains(spec, rotated));
        }
    }
}

TEST_CASE("deterministic enumeration order") {
    const BallSpec spec{5, 2, 1, 1, true};
    CHECK(enumerate_ball(spec) == enumerate_ball(spec));
}

TEST_CASE("budget refusal") {
    CHECK_THROWS_AS(enumerate_ball(BallSpec{5000, 3, 2, 2, true}), ResourceError);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(enumerate_ball(BallSpec{0, 1, 1, 0, false}), ParameterError);
    CHECK_THROWS_AS(enumerate_ball(BallSpec{2, 3, 1, 0, false}), ParameterError);
    CHECK_THROWS_AS(enumerate_ball(BallSpec{3, 2, 0, 0, false}), ParameterError);
}

TEST_CASE("ball spec text round-trip") {
    const BallSpec spec{4, 2, 1, 1, true};
    const std::string text = format_ball_spec(spec);
    CHECK(text == "n=4 b=2 kplus=1 kminus=1 cyclic=true");
    CHECK(parse_ball_spec(text) == spec);
    CHECK_THROWS_AS(parse_ball_spec("n=4 b=2"), ParseError);
    CHECK_THROWS_AS(parse_ball_spec("n=4 b=2 kplus=1 kminus=1 cyclic=maybe"), ParseError);
}
