#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "burst/gf.hpp"
#include "burst/search.hpp"

using namespace burst;

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

FieldCtx field_of(std::uint64_t q) {
    std::uint32_t p = 0, r = 0;
    std::uint64_t v = q;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            p = static_cast<std::uint32_t>(d);
            break;
        }
    if (p == 0) p = static_cast<std::uint32_t>(v);
    while (v > 1) {
        v /= p;
        ++r;
    }
    return FieldCtx(p, r);
}

}  // namespace

TEST_CASE("GF(7) discrete logs against the hand table") {
    const FieldCtx F(7, 1);
    CHECK(F.q() == 7);
    CHECK(F.generator() == FieldElem{3});  // 2 has order 3

    // powers of 3 mod 7: 1, 3, 2, 6, 4, 5
    const std::uint32_t expected_log[7] = {0, 0, 2, 1, 4, 5, 3};
    for (std::uint32_t x = 1; x < 7; ++x) CHECK(F.dlog(FieldElem{x}) == expected_log[x]);

    CHECK(F.dlog(FieldElem{3}, FieldElem{1}) == 0);
    CHECK(F.dlog(FieldElem{3}, FieldElem{3}) == 1);
    CHECK(F.dlog(FieldElem{3}, FieldElem{6}) == 3);  // 3^3 = 27 = 6
    CHECK_THROWS_AS(F.dlog(FieldElem{0}), ParameterError);
    CHECK_THROWS_AS(F.dlog(FieldElem{2}, FieldElem{3}), ParameterError);  // base not primitive
}

TEST_CASE("primitivity") {
    const FieldCtx F(7, 1);
    CHECK(F.is_primitive(FieldElem{3}));
    CHECK_FALSE(F.is_primitive(FieldElem{2}));  // 2^3 = 1
    CHECK_FALSE(F.is_primitive(FieldElem{1}));
    CHECK_THROWS_AS(F.is_primitive(FieldElem{0}), ParameterError);
}

TEST_CASE("quadratic residues in GF(7)") {
    const FieldCtx F(7, 1);
    CHECK(F.is_qr(FieldElem{2}));        // 3^2 = 2
    CHECK_FALSE(F.is_qr(FieldElem{3}));  // generator, odd log
    CHECK(F.is_qr(FieldElem{1}));
    CHECK_THROWS_AS(F.is_qr(FieldElem{0}), ParameterError);
    const FieldCtx F4(2, 2);
    CHECK_THROWS_AS(F4.is_qr(FieldElem{1}), ParameterError);
}

TEST_CASE("polynomial evaluation") {
    const FieldCtx F(7, 1);
    CHECK(F.eval_poly({1, 0, 1}, FieldElem{3}) == FieldElem{3});  // 1 + 9 = 10 = 3
    CHECK(F.eval_poly({1}, FieldElem{5}) == FieldElem{1});
    // 1 - x^6 vanishes at any nonzero point
    CHECK(F.eval_poly({1, 0, 0, 0, 0, 0, -1}, FieldElem{3}) == FieldElem{0});
    CHECK(F.eval_poly({-3}, FieldElem{1}) == FieldElem{4});  // negative coefficients map mod p
}

TEST_CASE("deterministic modulus selection") {
    const FieldCtx F9(3, 2);
    CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    const FieldCtx F4(2, 2);
    CHECK(F4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1
    const FieldCtx F8(2, 3);
    CHECK(F8.modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});  // x^3 + x^2 + 1

    // bit-identical reconstruction
    const FieldCtx again(3, 2);
    CHECK(again.modulus() == F9.modulus());
    CHECK(again.generator() == F9.generator());
}

TEST_CASE("GF(9) arithmetic sanity") {
    const FieldCtx F(3, 2);
    // elements indexed c0 + 3*c1; x has index 3; x^2 = -1 = 2
    CHECK(F.mul(FieldElem{3}, FieldElem{3}) == FieldElem{2});
    CHECK(F.generator() == FieldElem{4});  // 1 + x is the first primitive element
    CHECK(F.coeffs(FieldElem{5}) == std::vector<std::uint32_t>{2, 1});
    CHECK(F.from_coeffs({2, 1}) == FieldElem{5});
    CHECK(F.format(FieldElem{5}) == "[2,1]");
    CHECK(F.from_int(-1) == FieldElem{2});
    for (std::uint32_t x = 1; x < 9; ++x) {
        CHECK(F.mul(FieldElem{x}, F.inv(FieldElem{x})) == F.one());
        CHECK(F.add(FieldElem{x}, F.neg(FieldElem{x})) == F.zero());
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(FieldCtx(4, 1), ParameterError);
    CHECK_THROWS_AS(FieldCtx(1, 1), ParameterError);
    CHECK_THROWS_AS(FieldCtx(2, 0), ParameterError);
    CHECK_THROWS_AS(FieldCtx(2, 21), ResourceError);  // q = 2^21 over the cap
}

TEST_CASE("field invariants over all prime powers up to 361") {
    for (std::uint64_t q : prime_powers_in(2, 361)) {
        const FieldCtx F = field_of(q);
        INFO("q = ", q);

        // the log table inverts exponentiation
        for (std::uint32_t x = 1; x < F.q(); ++x)
            CHECK(F.pow(F.generator(), F.dlog(FieldElem{x})) == FieldElem{x});

        // primitive elements counted independently of the table
        std::uint64_t primitive_count = 0;
        for (std::uint32_t x = 1; x < F.q(); ++x)
            if (F.is_primitive(FieldElem{x})) ++primitive_count;
        CHECK(primitive_count == euler_phi(F.q() - 1));

        // dlog is a homomorphism (sampled pairs)
        std::uint64_t state = q * 2654435761ull + 1;
        for (int t = 0; t < 64; ++t) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            const std::uint32_t a = 1 + static_cast<std::uint32_t>(state % (F.q() - 1));
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            const std::uint32_t b = 1 + static_cast<std::uint32_t>(state % (F.q() - 1));
            const std::uint32_t lhs = F.dlog(F.mul(FieldElem{a}, FieldElem{b}));
            const std::uint32_t rhs =
                (F.dlog(FieldElem{a}) + F.dlog(FieldElem{b})) % (F.q() - 1);
            CHECK(lhs == rhs);
        }

        // quadratic residues are exactly the even logs
        if (F.p() != 2)
            for (std::uint32_t x = 1; x < F.q(); ++x)
                CHECK(F.is_qr(FieldElem{x}) ==
                      (F.pow(FieldElem{x}, (F.q() - 1) / 2) == F.one()));
    }
}
