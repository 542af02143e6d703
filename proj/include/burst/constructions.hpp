#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burst/errorball.hpp"
#include "burst/errors.hpp"
#include "burst/gf.hpp"
#include "burst/groups.hpp"

namespace burst {

// A polynomial family together with the modulus h and the residue set its
// discrete logs must cover for the field construction to apply.
struct FamilyId {
    enum class Kind { generic, r_alpha, c220 };
    Kind kind = Kind::generic;
    int b = 0, k_plus = 0, k_minus = 0;  // generic only

    static FamilyId F(int b, int k_plus, int k_minus) {
        return {Kind::generic, b, k_plus, k_minus};
    }
    static FamilyId R() { return {Kind::r_alpha, 0, 0, 0}; }
    static FamilyId C220() { return {Kind::c220, 0, 0, 0}; }

    std::string name() const;
    bool operator==(const FamilyId&) const = default;
};

struct FamilyPoly {
    std::vector<long long> coeffs;  // constant term first
    std::string display;
};

struct PolyFamilyDef {
    FamilyId id;
    std::vector<FamilyPoly> polys;
    std::uint32_t h = 0;                  // residue modulus for the log condition
    std::vector<std::uint32_t> required;  // residue set to cover, sorted
    // Fixed residue targets (poly index -> residue mod fixed_h), where a
    // fixed witness assignment exists.
    std::uint32_t fixed_h = 0;
    std::vector<std::pair<size_t, std::uint32_t>> fixed_targets;

    // True when q lies in the residue class the family's construction
    // supports (including the minimum implied by n >= 2b-1).
    bool admissible_q(std::uint64_t q) const;
};

// Deterministic polynomial list for a family: coefficient tuples
// (c_0,...,c_{b-1}) with c_0 != 0, c_0 iterating 1..k_plus,-1..-k_minus and
// the others 0,1..k_plus,-1..-k_minus, leftmost slowest.
PolyFamilyDef family_polys(const FamilyId& id);

struct ConditionReport {
    std::uint64_t q = 0;
    FieldElem alpha;
    FamilyId family;
    // discrete log (base alpha) of each family polynomial at alpha; nullopt
    // when the evaluation is zero
    std::vector<std::optional<std::uint32_t>> logs;
    bool satisfied = false;
};

enum class ConditionMode { coverage, fixed };

// Thrown when a construction is asked to proceed with an unsatisfied
// condition; carries the evidence.
struct ConditionUnsatisfiedError : ParameterError {
    ConditionReport report;
    explicit ConditionUnsatisfiedError(ConditionReport r)
        : ParameterError("construction condition unsatisfied at alpha"), report(std::move(r)) {}
};

// Evaluates every family polynomial at alpha and tests the residue-coverage
// condition (or the fixed witness assignment, where one is defined).
ConditionReport check_condition(const FieldCtx& F, FieldElem alpha, const FamilyId& id,
                                ConditionMode mode = ConditionMode::coverage);

// First primitive alpha in element order satisfying the condition; nullopt
// after an exhaustive scan.
std::optional<std::pair<FieldElem, ConditionReport>> find_primitive(
    const FieldCtx& F, const FamilyId& id, ConditionMode mode = ConditionMode::coverage);

// Sequence development: copies of a shifted by successive entries of b,
// i.e. 1_m (x) a + b (x) 1_n over Z_g.
std::vector<std::uint32_t> boxplus(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, std::uint32_t g);

// Splitting of Z_2n by the non-cyclic 2-burst (1,0) ball, any n >= 2.
SplittingSequence construct_noncyclic_2_10(int n);

// Splitting of Z_{2n+1} by the cyclic 2-burst (1,0) ball, n >= 4 and
// n = 1,4 (mod 6).
SplittingSequence construct_cyclic_2_10(int n);

// s_alpha = (1, alpha^e, ..., alpha^((n-1)e)) over the additive group of
// GF(q); requires the coverage condition for F(b,k+,k-).
SplittingSequence construct_salpha(const FieldCtx& F, int b, int k_plus, int k_minus,
                                   FieldElem alpha, bool verify = true);

// r_alpha = (1, alpha^3, alpha^12, alpha^15, ...) over the additive group of
// GF(q), q = 13 (mod 24); splits the cyclic 2-burst (1,1) ball.
SplittingSequence construct_ralpha(const FieldCtx& F, FieldElem alpha, bool verify = true);

}  // namespace burst
