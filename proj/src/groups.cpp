#include "burst/groups.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace burst {

namespace {

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            std::uint32_t e = 0;
            while (v % d == 0) {
                v /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

// Partitions of a in descending lex order: [a], [a-1,1], ..., [1,...,1].
void partitions_rec(std::uint32_t a, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (a == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t first = std::min(a, max_part); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(a - first, first, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t a) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    partitions_rec(a, a, cur, out);
    return out;
}

}  // namespace

AbelianGroup AbelianGroup::cyclic(std::uint64_t m) {
    if (m < 2) throw ParameterError("group: cyclic order must be >= 2");
    if (m > kMaxOrder) throw ResourceError("group: order exceeds the 2^20 cap");
    AbelianGroup g;
    g.kind_ = GroupKind::cyclic;
    g.mods_ = {static_cast<std::uint32_t>(m)};
    g.order_ = m;
    return g;
}

AbelianGroup AbelianGroup::direct_sum(const std::vector<std::uint64_t>& orders) {
    if (orders.empty()) throw ParameterError("group: direct sum needs at least one component");
    if (orders.size() == 1) return cyclic(orders[0]);
    std::uint64_t order = 1;
    AbelianGroup g;
    for (std::uint64_t m : orders) {
        if (m < 2) throw ParameterError("group: component orders must be >= 2");
        order *= m;
        if (order > kMaxOrder) throw ResourceError("group: order exceeds the 2^20 cap");
        g.mods_.push_back(static_cast<std::uint32_t>(m));
    }
    g.kind_ = GroupKind::direct_sum;
    g.order_ = order;
    return g;
}

AbelianGroup AbelianGroup::field_additive(std::uint32_t p, std::uint32_t r) {
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) throw ParameterError("group: field characteristic must be prime");
    if (p < 2 || r < 1) throw ParameterError("group: invalid field parameters");
    std::uint64_t order = 1;
    AbelianGroup g;
    for (std::uint32_t i = 0; i < r; ++i) {
        order *= p;
        if (order > kMaxOrder) throw ResourceError("group: order exceeds the 2^20 cap");
        g.mods_.push_back(p);
    }
    g.kind_ = GroupKind::field_additive;
    g.order_ = order;
    return g;
}

std::uint32_t AbelianGroup::rank() const {
    std::map<std::uint64_t, std::uint32_t> count;
    for (std::uint32_t m : mods_)
        for (const auto& [p, e] : factorize(m)) count[p] += 1;
    std::uint32_t best = 0;
    for (const auto& [p, c] : count) best = std::max(best, c);
    return best;
}

AbelianGroup::Word AbelianGroup::encode(const GroupElement& g) const {
    if (g.coords.size() != mods_.size())
        throw ParameterError("group: element does not belong to this group");
    Word w = 0, stride = 1;
    for (size_t i = 0; i < mods_.size(); ++i) {
        if (g.coords[i] >= mods_[i])
            throw ParameterError("group: element coordinate not reduced");
        w += g.coords[i] * stride;
        stride *= mods_[i];
    }
    return w;
}

GroupElement AbelianGroup::decode(Word w) const {
    if (w >= order_) throw ParameterError("group: word out of range");
    GroupElement g;
    g.coords.resize(mods_.size());
    for (size_t i = 0; i < mods_.size(); ++i) {
        g.coords[i] = w % mods_[i];
        w /= mods_[i];
    }
    return g;
}

AbelianGroup::Word AbelianGroup::add_w(Word a, Word b) const {
    if (mods_.size() == 1) return (a + b) % mods_[0];
    Word w = 0, stride = 1;
    for (std::uint32_t m : mods_) {
        w += (a % m + b % m) % m * stride;
        a /= m;
        b /= m;
        stride *= m;
    }
    return w;
}

AbelianGroup::Word AbelianGroup::neg_w(Word a) const {
    if (mods_.size() == 1) return (mods_[0] - a) % mods_[0];
    Word w = 0, stride = 1;
    for (std::uint32_t m : mods_) {
        w += (m - a % m) % m * stride;
        a /= m;
        stride *= m;
    }
    return w;
}

AbelianGroup::Word AbelianGroup::scalar_w(long long m, Word a) const {
    Word w = 0, stride = 1;
    for (std::uint32_t mod : mods_) {
        long long c = m % mod;
        if (c < 0) c += mod;
        w += static_cast<Word>(c * (a % mod) % mod) * stride;
        a /= mod;
        stride *= mod;
    }
    return w;
}

std::string AbelianGroup::notation() const {
    if (kind_ == GroupKind::field_additive) return "GF(" + std::to_string(order_) + ")";
    std::ostringstream os;
    for (size_t i = 0; i < mods_.size(); ++i) {
        if (i) os << 'x';
        os << 'Z' << mods_[i];
    }
    return os.str();
}

GroupElement g_add(const AbelianGroup& G, const GroupElement& a, const GroupElement& b) {
    return G.decode(G.add_w(G.encode(a), G.encode(b)));
}

GroupElement g_neg(const AbelianGroup& G, const GroupElement& a) {
    return G.decode(G.neg_w(G.encode(a)));
}

GroupElement g_scalar(const AbelianGroup& G, long long m, const GroupElement& a) {
    return G.decode(G.scalar_w(m, G.encode(a)));
}

GroupElement dot(const AbelianGroup& G, const std::vector<long long>& coeffs,
                 const SplittingSequence& s) {
    if (coeffs.size() != s.elems.size())
        throw ParameterError("dot: coefficient and sequence lengths differ");
    AbelianGroup::Word acc = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        acc = G.add_w(acc, G.scalar_w(coeffs[i], G.encode(s.elems[i])));
    }
    return G.decode(acc);
}

namespace {

// Images of all ball vectors under the syndrome map, with the first repeated
// image reported. Shared by the splitting predicates.
struct ImageScan {
    size_t ball_count = 0;
    std::optional<Collision> collision;
};

ImageScan scan_images(const BallSpec& spec, const SplittingSequence& s, long long budget) {
    if (static_cast<int>(s.elems.size()) != spec.n)
        throw ParameterError("splitting: sequence length does not match n");
    const AbelianGroup& G = s.group;
    const size_t ncomp = G.component_orders().size();

    // elems as a flat coordinate matrix
    std::vector<std::uint32_t> elem_coords(s.elems.size() * ncomp);
    for (size_t i = 0; i < s.elems.size(); ++i) {
        const auto w = G.encode(s.elems[i]);  // validates membership
        const GroupElement g = G.decode(w);
        for (size_t c = 0; c < ncomp; ++c) elem_coords[i * ncomp + c] = g.coords[c];
    }

    const std::vector<ErrorVector> ball = enumerate_ball(spec, budget);
    std::vector<std::int32_t> owner(G.order(), -1);
    std::vector<long long> acc(ncomp);

    ImageScan result;
    result.ball_count = ball.size();
    for (size_t v = 0; v < ball.size(); ++v) {
        std::fill(acc.begin(), acc.end(), 0);
        const auto& entries = ball[v].entries;
        for (size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] == 0) continue;
            for (size_t c = 0; c < ncomp; ++c)
                acc[c] += static_cast<long long>(entries[i]) * elem_coords[i * ncomp + c];
        }
        AbelianGroup::Word w = 0, stride = 1;
        for (size_t c = 0; c < ncomp; ++c) {
            const std::uint32_t m = G.component_orders()[c];
            long long residue = acc[c] % m;
            if (residue < 0) residue += m;
            w += static_cast<AbelianGroup::Word>(residue) * stride;
            stride *= m;
        }
        if (owner[w] >= 0) {
            result.collision = Collision{ball[owner[w]], ball[v], G.decode(w)};
            return result;
        }
        owner[w] = static_cast<std::int32_t>(v);
    }
    return result;
}

}  // namespace

std::optional<Collision> find_collision(const BallSpec& spec, const SplittingSequence& s,
                                        long long budget) {
    return scan_images(spec, s, budget).collision;
}

bool is_splitting(const BallSpec& spec, const SplittingSequence& s, long long budget) {
    return !scan_images(spec, s, budget).collision.has_value();
}

bool is_perfect_splitting(const BallSpec& spec, const SplittingSequence& s, long long budget) {
    const ImageScan scan = scan_images(spec, s, budget);
    return !scan.collision && scan.ball_count == s.group.order();
}

std::vector<AbelianGroup> enumerate_abelian_groups(std::uint64_t order) {
    if (order < 2) throw ParameterError("group enumeration: order must be >= 2");
    if (order > AbelianGroup::kMaxOrder)
        throw ResourceError("group enumeration: order exceeds the 2^20 cap");

    const auto factors = factorize(order);
    std::vector<std::vector<std::vector<std::uint32_t>>> parts_per_prime;
    for (const auto& [p, e] : factors) parts_per_prime.push_back(partitions(e));

    std::vector<AbelianGroup> out;
    std::vector<size_t> pick(factors.size(), 0);
    while (true) {
        std::vector<std::uint64_t> comps;
        for (size_t i = 0; i < factors.size(); ++i) {
            for (std::uint32_t part : parts_per_prime[i][pick[i]]) {
                std::uint64_t pw = 1;
                for (std::uint32_t t = 0; t < part; ++t) pw *= factors[i].first;
                comps.push_back(pw);
            }
        }
        out.push_back(AbelianGroup::direct_sum(comps));

        // advance the odometer, last prime fastest
        size_t i = factors.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < parts_per_prime[i].size()) {
                done = false;
                break;
            }
            pick[i] = 0;
        }
        if (done) break;
    }
    return out;
}

AbelianGroup parse_group(const std::string& text) {
    if (text.empty()) throw ParseError("group notation: empty");
    if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
        const std::string inner = text.substr(3, text.size() - 4);
        std::uint64_t q = 0;
        try {
            size_t pos = 0;
            q = std::stoull(inner, &pos);
            if (pos != inner.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("group notation: bad field size in " + text);
        }
        const auto factors = factorize(q);
        if (factors.size() != 1)
            throw ParseError("group notation: " + std::to_string(q) + " is not a prime power");
        return AbelianGroup::field_additive(static_cast<std::uint32_t>(factors[0].first),
                                            factors[0].second);
    }
    std::vector<std::uint64_t> orders;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('x', start);
        if (end == std::string::npos) end = text.size();
        const std::string tok = text.substr(start, end - start);
        if (tok.size() < 2 || tok[0] != 'Z')
            throw ParseError("group notation: expected Z<order> in " + text);
        try {
            size_t pos = 0;
            orders.push_back(std::stoull(tok.substr(1), &pos));
            if (pos != tok.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("group notation: bad order in " + text);
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return AbelianGroup::direct_sum(orders);
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t end = text.find(sep, start);
        out.push_back(text.substr(start, end == std::string::npos ? end : end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::uint32_t parse_coord(const std::string& tok, std::uint32_t mod) {
    std::uint64_t v = 0;
    try {
        size_t pos = 0;
        v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("sequence: bad integer '" + tok + "'");
    }
    if (v >= mod) throw ParseError("sequence: coordinate " + tok + " not reduced");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<GroupElement> parse_sequence(const AbelianGroup& G, const std::string& text) {
    const auto& mods = G.component_orders();
    std::vector<GroupElement> out;
    if (mods.size() == 1) {
        for (const std::string& tok : split(text, ','))
            out.push_back(GroupElement{{parse_coord(tok, mods[0])}});
        return out;
    }
    for (const std::string& elem : split(text, ';')) {
        const auto toks = split(elem, ',');
        if (toks.size() != mods.size())
            throw ParseError("sequence: tuple '" + elem + "' has wrong arity");
        GroupElement g;
        for (size_t i = 0; i < toks.size(); ++i) g.coords.push_back(parse_coord(toks[i], mods[i]));
        out.push_back(std::move(g));
    }
    return out;
}

std::string format_element(const AbelianGroup& G, const GroupElement& g) {
    G.encode(g);  // validate
    std::ostringstream os;
    for (size_t i = 0; i < g.coords.size(); ++i) {
        if (i) os << ',';
        os << g.coords[i];
    }
    return os.str();
}

std::string format_sequence(const SplittingSequence& s) {
    const char sep = s.group.component_orders().size() == 1 ? ',' : ';';
    std::ostringstream os;
    for (size_t i = 0; i < s.elems.size(); ++i) {
        if (i) os << sep;
        os << format_element(s.group, s.elems[i]);
    }
    return os.str();
}

}  // namespace burst
