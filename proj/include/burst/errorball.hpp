#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burst/errors.hpp"

namespace burst {

// Parameters of a burst error ball. A ball vector has entries in
// [-k_minus, k_plus] and all nonzero entries inside one window of b
// consecutive coordinates; windows wrap modulo n in the cyclic model and are
// clipped at the word end otherwise.
struct BallSpec {
    int n = 0;
    int b = 0;
    int k_plus = 0;
    int k_minus = 0;
    bool cyclic = false;

    void validate() const;  // throws ParameterError

    bool operator==(const BallSpec&) const = default;
};

struct ErrorVector {
    std::vector<int> entries;

    bool operator==(const ErrorVector&) const = default;
    bool is_zero() const;
};

inline constexpr long long kDefaultEnumBudget = 10'000'000;

// Number of nonzero burst patterns anchored at a fixed start:
// (k_plus + k_minus) * (k_plus + k_minus + 1)^(b-1).
// The cyclic ball has size e*n + 1 whenever n >= 2b-1.
long long e_param(int b, int k_plus, int k_minus);

// All ball vectors, ordered lexicographically by (window start, pattern) and
// deduplicated. Refuses with ResourceError when n times the raw pattern
// count exceeds the budget.
std::vector<ErrorVector> enumerate_ball(const BallSpec& spec,
                                        long long budget = kDefaultEnumBudget);

// Cardinality by enumeration; cross-checked against e*n+1 in the cyclic
// regime n >= 2b-1.
long long ball_size(const BallSpec& spec, long long budget = kDefaultEnumBudget);

// Membership predicate, implemented directly on the window definition
// (independent of enumerate_ball).
bool contains(const BallSpec& spec, const std::vector<int>& v);

// Canonical text form "n=.. b=.. kplus=.. kminus=.. cyclic=..";
// parse-then-print is byte-identical.
std::string format_ball_spec(const BallSpec& spec);
BallSpec parse_ball_spec(const std::string& text);

}  // namespace burst
