#include "burst/codec.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace burst {

namespace {

std::uint64_t element_order(const AbelianGroup& G, AbelianGroup::Word w) {
    std::uint64_t ord = 1;
    AbelianGroup::Word acc = w;
    while (acc != 0) {
        acc = G.add_w(acc, w);
        ++ord;
    }
    return ord;
}

// subgroup generated by the given words, as a membership bitmap
std::vector<std::uint8_t> closure(const AbelianGroup& G,
                                  const std::vector<AbelianGroup::Word>& gens) {
    std::vector<std::uint8_t> in(G.order(), 0);
    std::vector<AbelianGroup::Word> members{0};
    in[0] = 1;
    for (AbelianGroup::Word g : gens) {
        std::vector<AbelianGroup::Word> current = members;
        for (AbelianGroup::Word base : current) {
            AbelianGroup::Word acc = base;
            while (true) {
                acc = G.add_w(acc, g);
                if (in[acc]) break;
                in[acc] = 1;
                members.push_back(acc);
            }
        }
    }
    return in;
}

bool generates(const AbelianGroup& G, const std::vector<AbelianGroup::Word>& gens) {
    const auto in = closure(G, gens);
    return std::accumulate(in.begin(), in.end(), std::uint64_t{0}) == G.order();
}

// Positions are taken from the right, so messages occupy a prefix and the
// solved coordinates sit at the tail.
std::vector<size_t> select_info_positions(const AbelianGroup& G,
                                          const std::vector<AbelianGroup::Word>& words) {
    const auto& mods = G.component_orders();

    if (mods.size() == 1) {
        for (size_t j = words.size(); j-- > 0;)
            if (std::gcd(static_cast<std::uint64_t>(words[j]),
                         static_cast<std::uint64_t>(mods[0])) == 1)
                return {j};
        throw ConstructionError("code: no coordinate holds a generator of the cyclic group");
    }

    if (G.kind() == GroupKind::field_additive) {
        // greedy echelon basis over GF(p)
        const std::uint32_t p = mods[0];
        const size_t r = mods.size();
        std::vector<std::vector<std::uint32_t>> basis;  // rows with pivot positions
        std::vector<size_t> pivots, chosen;
        for (size_t jr = words.size(); jr-- > 0 && chosen.size() < r;) {
            const size_t j = jr;
            std::vector<std::uint32_t> row = G.decode(words[j]).coords;
            for (size_t t = 0; t < basis.size(); ++t) {
                const std::uint32_t c = row[pivots[t]];
                if (c == 0) continue;
                // row -= c / basis_pivot * basis; pivot normalized to 1
                for (size_t i = 0; i < r; ++i)
                    row[i] = (row[i] + static_cast<std::uint64_t>(p - c) * basis[t][i]) % p;
            }
            size_t pivot = r;
            for (size_t i = 0; i < r; ++i)
                if (row[i] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == r) continue;
            // normalize pivot to 1
            std::uint32_t inv = 1, base = row[pivot], e = p - 2;
            while (e > 0) {
                if (e & 1) inv = static_cast<std::uint64_t>(inv) * base % p;
                base = static_cast<std::uint64_t>(base) * base % p;
                e >>= 1;
            }
            for (size_t i = 0; i < r; ++i)
                row[i] = static_cast<std::uint64_t>(row[i]) * inv % p;
            basis.push_back(row);
            pivots.push_back(pivot);
            chosen.push_back(j);
        }
        if (chosen.size() < r)
            throw ConstructionError("code: coordinates do not span the field additive group");
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

    // general direct sum: first generating subset of size rank(G), scanning
    // position subsets from the tail
    const size_t rank = G.rank();
    const size_t n = words.size();
    if (rank > n)
        throw ConstructionError("code: fewer coordinates than rank(G)");
    std::vector<size_t> c(rank);
    std::iota(c.begin(), c.end(), 0);
    std::uint64_t tried = 0;
    while (true) {
        if (++tried > 200000)
            throw ConstructionError("code: info-position scan budget exceeded");
        // mirror the ascending combination so trailing coordinates are tried first
        std::vector<size_t> positions;
        for (size_t t = rank; t-- > 0;) positions.push_back(n - 1 - c[t]);
        std::vector<AbelianGroup::Word> gens;
        for (size_t j : positions) gens.push_back(words[j]);
        if (generates(G, gens)) return positions;

        size_t i = rank;
        bool advanced = false;
        while (i-- > 0) {
            if (c[i] + 1 <= n - (rank - i)) {
                ++c[i];
                for (size_t j = i + 1; j < rank; ++j) c[j] = c[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    throw ConstructionError("code: no generating subset of size rank(G) among the coordinates");
}

}  // namespace

LatticeCode::LatticeCode(BallSpec spec, SplittingSequence splitting)
    : spec_(std::move(spec)), splitting_(std::move(splitting)) {
    spec_.validate();
    if (static_cast<int>(splitting_.elems.size()) != spec_.n)
        throw ParameterError("code: sequence length does not match n");

    const AbelianGroup& G = splitting_.group;
    const size_t ncomp = G.component_orders().size();
    std::vector<AbelianGroup::Word> words;
    elem_coords_.resize(splitting_.elems.size() * ncomp);
    for (size_t i = 0; i < splitting_.elems.size(); ++i) {
        words.push_back(G.encode(splitting_.elems[i]));
        const auto coords = splitting_.elems[i].coords;
        for (size_t c = 0; c < ncomp; ++c) elem_coords_[i * ncomp + c] = coords[c];
    }

    ball_ = enumerate_ball(spec_);
    if (ball_.size() != G.order())
        throw ParameterError("code: splitting is not perfect (|ball| != |G|)");

    syndrome_to_ball_.assign(G.order(), -1);
    for (size_t v = 0; v < ball_.size(); ++v) {
        std::vector<long long> coeffs(ball_[v].entries.begin(), ball_[v].entries.end());
        const AbelianGroup::Word w = syndrome(coeffs);
        if (syndrome_to_ball_[w] >= 0)
            throw ParameterError("code: splitting is not perfect (syndrome collision)");
        syndrome_to_ball_[w] = static_cast<std::int32_t>(v);
    }
    if (!ball_vector_for(0).is_zero())
        throw InternalError("code: zero syndrome does not map to the zero vector");

    info_positions_ = select_info_positions(G, words);

    // canonical solver table: lexicographically smallest coefficient tuple
    // per syndrome, coefficients ranging over [0, ord(element))
    const size_t k = info_positions_.size();
    std::vector<std::uint64_t> ords;
    std::uint64_t combos = 1;
    for (size_t j : info_positions_) {
        ords.push_back(element_order(G, words[j]));
        combos *= ords.back();
        if (combos > (1u << 22))
            throw ConstructionError("code: encoder table budget exceeded");
    }
    encode_table_.assign(G.order() * k, std::numeric_limits<std::uint32_t>::max());
    std::vector<std::uint32_t> tuple(k, 0);
    std::uint64_t filled = 0;
    while (true) {
        AbelianGroup::Word w = 0;
        for (size_t t = 0; t < k; ++t)
            w = G.add_w(w, G.scalar_w(tuple[t], words[info_positions_[t]]));
        if (encode_table_[static_cast<size_t>(w) * k] ==
            std::numeric_limits<std::uint32_t>::max()) {
            for (size_t t = 0; t < k; ++t) encode_table_[static_cast<size_t>(w) * k + t] = tuple[t];
            if (++filled == G.order()) break;
        }
        size_t t = k;
        bool done = true;
        while (t-- > 0) {
            if (++tuple[t] < ords[t]) {
                done = false;
                break;
            }
            tuple[t] = 0;
        }
        if (done) break;
    }
    if (filled != G.order())
        throw InternalError("code: encoder table incomplete despite generating info set");
}

AbelianGroup::Word LatticeCode::syndrome(const std::vector<long long>& y) const {
    if (static_cast<int>(y.size()) != spec_.n)
        throw ParameterError("code: vector length does not match n");
    const AbelianGroup& G = splitting_.group;
    const auto& mods = G.component_orders();
    const size_t ncomp = mods.size();
    AbelianGroup::Word w = 0, stride = 1;
    for (size_t c = 0; c < ncomp; ++c) {
        const std::uint32_t m = mods[c];
        std::uint64_t acc = 0;
        for (size_t i = 0; i < y.size(); ++i) {
            long long yi = y[i] % m;
            if (yi < 0) yi += m;
            acc += static_cast<std::uint64_t>(yi) * elem_coords_[i * ncomp + c] % m;
        }
        w += static_cast<AbelianGroup::Word>(acc % m) * stride;
        stride *= m;
    }
    return w;
}

const ErrorVector& LatticeCode::ball_vector_for(AbelianGroup::Word w) const {
    if (w >= splitting_.group.order()) throw ParameterError("code: syndrome out of range");
    return ball_[static_cast<size_t>(syndrome_to_ball_[w])];
}

LatticeCode code_from_splitting(const BallSpec& spec, const SplittingSequence& s) {
    return LatticeCode(spec, s);
}

bool is_codeword(const LatticeCode& code, const std::vector<long long>& x) {
    return code.syndrome(x) == 0;
}

std::vector<long long> encode(const LatticeCode& code, const std::vector<long long>& message) {
    const size_t n = static_cast<size_t>(code.n());
    const auto& info = code.info_positions();
    if (message.size() != n - info.size())
        throw ParameterError("encode: message length must be n minus the info positions");

    std::vector<long long> x(n, 0);
    size_t next = 0;
    for (size_t i = 0; i < n; ++i) {
        if (std::find(info.begin(), info.end(), i) != info.end()) continue;
        x[i] = message[next++];
    }
    const AbelianGroup& G = code.group();
    const AbelianGroup::Word target = G.neg_w(code.syndrome(x));
    const size_t k = info.size();
    for (size_t t = 0; t < k; ++t)
        x[info[t]] = code.encode_table_[static_cast<size_t>(target) * k + t];
    if (!is_codeword(code, x)) throw InternalError("encode: solved vector is not a codeword");
    return x;
}

DecodeResult decode(const LatticeCode& code, const std::vector<long long>& y) {
    const ErrorVector& error = code.ball_vector_for(code.syndrome(y));
    DecodeResult result;
    result.error = error;
    result.codeword.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i)
        result.codeword[i] = y[i] - error.entries[i];
    return result;
}

std::vector<long long> inject_burst(const BallSpec& spec, const std::vector<long long>& x,
                                    int start, const std::vector<int>& pattern,
                                    bool include_zero) {
    spec.validate();
    if (static_cast<int>(x.size()) != spec.n)
        throw ParameterError("inject: vector length does not match n");
    if (pattern.empty() || static_cast<int>(pattern.size()) > spec.b)
        throw ParameterError("inject: pattern length must be in [1, b]");
    if (start < 0 || start >= spec.n) throw ParameterError("inject: start out of range");

    std::vector<int> e(spec.n, 0);
    bool all_zero = true;
    for (size_t t = 0; t < pattern.size(); ++t) {
        if (pattern[t] == 0) continue;
        all_zero = false;
        int pos = start + static_cast<int>(t);
        if (spec.cyclic) {
            pos %= spec.n;
        } else if (pos >= spec.n) {
            throw ParameterError("inject: non-cyclic burst crosses the word end");
        }
        e[pos] = pattern[t];
    }
    if (all_zero && !include_zero)
        throw ParameterError("inject: zero pattern (pass include_zero to allow)");
    if (!contains(spec, e)) throw ParameterError("inject: pattern outside the ball");

    std::vector<long long> y(x);
    for (int i = 0; i < spec.n; ++i) y[i] += e[i];
    return y;
}

std::vector<long long> inject_burst_random(const BallSpec& spec, const std::vector<long long>& x,
                                           std::mt19937_64& rng, bool include_zero,
                                           const std::vector<ErrorVector>* ball) {
    std::vector<ErrorVector> local;
    if (!ball) {
        local = enumerate_ball(spec);
        ball = &local;
    }
    if (static_cast<int>(x.size()) != spec.n)
        throw ParameterError("inject: vector length does not match n");

    size_t zero_index = ball->size();
    for (size_t i = 0; i < ball->size(); ++i)
        if ((*ball)[i].is_zero()) {
            zero_index = i;
            break;
        }

    size_t pick;
    if (include_zero) {
        pick = static_cast<size_t>(rng() % ball->size());
    } else {
        pick = static_cast<size_t>(rng() % (ball->size() - 1));
        if (pick >= zero_index) ++pick;
    }
    const auto& e = (*ball)[pick].entries;
    std::vector<long long> y(x);
    for (int i = 0; i < spec.n; ++i) y[i] += e[i];
    return y;
}

}  // namespace burst
