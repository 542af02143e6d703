#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burst/errors.hpp"

namespace burst {

// A field element is an index into the deterministic element order of its
// FieldCtx: the element with coefficient vector (c_0,...,c_{r-1}) over GF(p),
// constant term first, has index sum c_i * p^i. For prime fields the index
// is the residue itself.
struct FieldElem {
    std::uint32_t idx = 0;
    bool operator==(const FieldElem&) const = default;
};

// GF(p^r) arithmetic context with a fixed modulus, a fixed generator and a
// full discrete-log table. Immutable after construction.
class FieldCtx {
public:
    static constexpr std::uint64_t kMaxQ = 1u << 20;

    // Deterministic construction: the modulus is the lexicographically
    // smallest monic irreducible polynomial of degree r over GF(p),
    // comparing coefficient vectors from the constant term upward; the
    // generator is the first primitive element in index order.
    FieldCtx(std::uint32_t p, std::uint32_t r);

    // Same field under an explicit monic irreducible modulus (r+1
    // coefficients, constant term first). Used to confirm that results do
    // not depend on the representation.
    FieldCtx(std::uint32_t p, std::uint32_t r, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t q() const { return q_; }

    // Monic modulus, constant term first, r+1 coefficients. {0, 1} for r=1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    FieldElem generator() const { return generator_; }

    FieldElem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElem x) const;
    // Embeds an integer (possibly negative) into the prime subfield.
    FieldElem from_int(long long v) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    FieldElem inv(FieldElem a) const;

    // Order test via a^((q-1)/l) != 1 for every prime l | q-1; does not
    // consult the log table.
    bool is_primitive(FieldElem x) const;

    // Discrete log to the fixed generator, in [0, q-2].
    std::uint32_t dlog(FieldElem x) const;
    // Discrete log to an arbitrary primitive base: one modular division of
    // table logs.
    std::uint32_t dlog(FieldElem base, FieldElem x) const;

    // Quadratic residue test for odd q, nonzero x: even discrete log.
    bool is_qr(FieldElem x) const;

    // Horner evaluation of an integer-coefficient polynomial (constant term
    // first) at x; coefficients are mapped into GF(p).
    FieldElem eval_poly(const std::vector<long long>& poly, FieldElem x) const;

    const std::vector<std::uint32_t>& prime_factors_qm1() const { return qm1_factors_; }

    // "3" for prime fields, "[c0,c1,...]" for extensions.
    std::string format(FieldElem x) const;

private:
    std::uint32_t p_ = 0, r_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    FieldElem generator_;
    std::vector<std::uint32_t> qm1_factors_;  // distinct primes dividing q-1
    std::vector<std::uint32_t> exp_;          // exp_[a] = generator^a, a in [0, q-2]
    std::vector<std::uint32_t> log_;          // log_[x.idx] for x != 0

    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
    void check(FieldElem x) const;
};

}  // namespace burst
