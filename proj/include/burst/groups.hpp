#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burst/errorball.hpp"
#include "burst/errors.hpp"

namespace burst {

enum class GroupKind { cyclic, direct_sum, field_additive };

struct GroupElement {
    // coordinate i reduced mod the i-th component order
    std::vector<std::uint32_t> coords;
    bool operator==(const GroupElement&) const = default;
};

// Finite Abelian group as a product of cyclic components. The additive group
// of GF(p^r) is the product of r copies of Z_p, tagged so it prints as GF(q).
// Immutable after construction; all operations are pure.
class AbelianGroup {
public:
    static constexpr std::uint64_t kMaxOrder = 1u << 20;

    // Word: a group element encoded mixed-radix over the component orders,
    // first component least significant.
    using Word = std::uint32_t;

    static AbelianGroup cyclic(std::uint64_t m);
    static AbelianGroup direct_sum(const std::vector<std::uint64_t>& orders);
    static AbelianGroup field_additive(std::uint32_t p, std::uint32_t r);

    GroupKind kind() const { return kind_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& component_orders() const { return mods_; }
    // Minimal number of generators: max over primes p of the count of
    // components p divides.
    std::uint32_t rank() const;

    Word encode(const GroupElement& g) const;
    GroupElement decode(Word w) const;

    Word add_w(Word a, Word b) const;
    Word neg_w(Word a) const;
    Word scalar_w(long long m, Word a) const;

    std::string notation() const;  // Z15, Z3xZ5, GF(81)

    bool operator==(const AbelianGroup&) const = default;

private:
    GroupKind kind_ = GroupKind::cyclic;
    std::vector<std::uint32_t> mods_;
    std::uint64_t order_ = 0;
};

struct SplittingSequence {
    AbelianGroup group;
    std::vector<GroupElement> elems;
};

GroupElement g_add(const AbelianGroup& G, const GroupElement& a, const GroupElement& b);
GroupElement g_neg(const AbelianGroup& G, const GroupElement& a);
GroupElement g_scalar(const AbelianGroup& G, long long m, const GroupElement& a);

// Sum of coeffs[i] * s.elems[i] in G.
GroupElement dot(const AbelianGroup& G, const std::vector<long long>& coeffs,
                 const SplittingSequence& s);

// First pair of ball vectors mapping to the same group element, in canonical
// enumeration order; nullopt when all images are distinct.
struct Collision {
    ErrorVector first, second;
    GroupElement value;
};
std::optional<Collision> find_collision(const BallSpec& spec, const SplittingSequence& s,
                                        long long budget = kDefaultEnumBudget);

// The ball splits G with s when all ball images under dot are distinct.
bool is_splitting(const BallSpec& spec, const SplittingSequence& s,
                  long long budget = kDefaultEnumBudget);

// Splitting with |ball| = |G|; equivalently ker of the syndrome map tiles
// Z^n with the ball.
bool is_perfect_splitting(const BallSpec& spec, const SplittingSequence& s,
                          long long budget = kDefaultEnumBudget);

// One representative per isomorphism class of Abelian groups of the given
// order, in deterministic order: primes ascending, prime-power partitions in
// descending lex order.
std::vector<AbelianGroup> enumerate_abelian_groups(std::uint64_t order);

// Text notation: groups as Z15 / Z3xZ5 / GF(81); sequences as
// comma-separated integers (one component) or semicolon-separated coordinate
// tuples (several components).
AbelianGroup parse_group(const std::string& text);
std::vector<GroupElement> parse_sequence(const AbelianGroup& G, const std::string& text);
std::string format_sequence(const SplittingSequence& s);
std::string format_element(const AbelianGroup& G, const GroupElement& g);

}  // namespace burst
