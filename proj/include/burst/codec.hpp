#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "burst/errorball.hpp"
#include "burst/errors.hpp"
#include "burst/groups.hpp"

namespace burst {

// Fails when no systematic coordinate set exists.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified perfect splitting packaged for use as a code: the lattice of
// integer vectors with zero syndrome, plus the full syndrome -> ball-vector
// table that makes decoding a lookup.
class LatticeCode {
public:
    LatticeCode(BallSpec spec, SplittingSequence splitting);

    const BallSpec& spec() const { return spec_; }
    const SplittingSequence& splitting() const { return splitting_; }
    const AbelianGroup& group() const { return splitting_.group; }
    int n() const { return spec_.n; }

    const std::vector<ErrorVector>& ball() const { return ball_; }
    const std::vector<size_t>& info_positions() const { return info_positions_; }

    AbelianGroup::Word syndrome(const std::vector<long long>& y) const;
    const ErrorVector& ball_vector_for(AbelianGroup::Word w) const;

private:
    BallSpec spec_;
    SplittingSequence splitting_;
    std::vector<ErrorVector> ball_;
    std::vector<std::int32_t> syndrome_to_ball_;      // word -> ball index
    std::vector<std::uint32_t> elem_coords_;          // n x ncomp
    std::vector<size_t> info_positions_;
    std::vector<std::uint32_t> encode_table_;         // word -> info coefficients
    friend std::vector<long long> encode(const LatticeCode&, const std::vector<long long>&);
};

LatticeCode code_from_splitting(const BallSpec& spec, const SplittingSequence& s);

bool is_codeword(const LatticeCode& code, const std::vector<long long>& x);

// Systematic encoder: the message fills every coordinate outside
// info_positions (in coordinate order); the info coordinates are solved so
// the syndrome vanishes, with the canonical representative assignment.
std::vector<long long> encode(const LatticeCode& code, const std::vector<long long>& message);

struct DecodeResult {
    std::vector<long long> codeword;
    ErrorVector error;
};

DecodeResult decode(const LatticeCode& code, const std::vector<long long>& y);

// x plus the ball vector with the given pattern placed at start (cyclic
// wraparound only in the cyclic model). The all-zero pattern is rejected
// unless include_zero is set.
std::vector<long long> inject_burst(const BallSpec& spec, const std::vector<long long>& x,
                                    int start, const std::vector<int>& pattern,
                                    bool include_zero = false);

// x plus a draw that is uniform over the nonzero ball (or the whole ball
// with include_zero). Pass the enumerated ball to avoid re-enumeration.
std::vector<long long> inject_burst_random(const BallSpec& spec, const std::vector<long long>& x,
                                           std::mt19937_64& rng, bool include_zero = false,
                                           const std::vector<ErrorVector>* ball = nullptr);

}  // namespace burst
