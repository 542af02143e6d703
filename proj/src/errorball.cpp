#include "burst/errorball.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace burst {

void BallSpec::validate() const {
    if (n < 1) throw ParameterError("ball: n must be >= 1");
    if (b < 1) throw ParameterError("ball: b must be >= 1");
    if (b > n) throw ParameterError("ball: b must be <= n");
    if (k_plus < 0 || k_minus < 0)
        throw ParameterError("ball: magnitudes must be nonnegative");
    if (k_plus + k_minus < 1)
        throw ParameterError("ball: k_plus + k_minus must be >= 1");
}

bool ErrorVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
}

long long e_param(int b, int k_plus, int k_minus) {
    if (b < 1 || k_plus < 0 || k_minus < 0 || k_plus + k_minus < 1)
        throw ParameterError("e_param: need b >= 1 and k_plus + k_minus >= 1");
    const long long k = k_plus + k_minus;
    long long result = k;
    for (int i = 1; i < b; ++i) {
        if (result > (1LL << 62) / (k + 1))
            throw ResourceError("e_param: value overflows 63 bits");
        result *= k + 1;
    }
    return result;
}

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<unsigned>(x) + 0x9e3779b9u);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Window cells for start i: b cells mod n when cyclic, clipped at n otherwise.
std::vector<int> window_cells(const BallSpec& spec, int start) {
    std::vector<int> cells;
    for (int t = 0; t < spec.b; ++t) {
        int pos = start + t;
        if (spec.cyclic) {
            cells.push_back(pos % spec.n);
        } else {
            if (pos >= spec.n) break;
            cells.push_back(pos);
        }
    }
    return cells;
}

}  // namespace

std::vector<ErrorVector> enumerate_ball(const BallSpec& spec, long long budget) {
    spec.validate();
    const long long width = spec.k_plus + spec.k_minus + 1;

    long long raw_patterns = 0;
    for (int i = 0; i < spec.n; ++i) {
        long long count = 1;
        for (size_t t = 0; t < window_cells(spec, i).size(); ++t) {
            count *= width;
            if (count > budget) break;
        }
        raw_patterns += count;
        if (raw_patterns > budget || static_cast<long long>(spec.n) * raw_patterns > budget)
            throw ResourceError("enumerate_ball: enumeration budget exceeded");
    }

    std::vector<ErrorVector> out;
    std::unordered_set<std::vector<int>, VecHash> seen;
    seen.reserve(static_cast<size_t>(raw_patterns));

    std::vector<int> entries(spec.n, 0);
    for (int i = 0; i < spec.n; ++i) {
        const std::vector<int> cells = window_cells(spec, i);
        std::vector<int> pattern(cells.size(), -spec.k_minus);
        while (true) {
            std::fill(entries.begin(), entries.end(), 0);
            for (size_t t = 0; t < cells.size(); ++t) entries[cells[t]] = pattern[t];
            if (seen.insert(entries).second) out.push_back(ErrorVector{entries});

            // odometer, leftmost cell most significant
            size_t t = cells.size();
            while (t > 0) {
                --t;
                if (pattern[t] < spec.k_plus) {
                    ++pattern[t];
                    std::fill(pattern.begin() + t + 1, pattern.end(), -spec.k_minus);
                    break;
                }
                if (t == 0) goto next_window;
            }
        }
    next_window:;
    }
    return out;
}

long long ball_size(const BallSpec& spec, long long budget) {
    const long long size = static_cast<long long>(enumerate_ball(spec, budget).size());
    if (spec.cyclic && spec.n >= 2 * spec.b - 1) {
        const long long closed = e_param(spec.b, spec.k_plus, spec.k_minus) * spec.n + 1;
        if (size != closed)
            throw InternalError("ball_size: enumeration disagrees with e*n+1");
    }
    return size;
}

bool contains(const BallSpec& spec, const std::vector<int>& v) {
    spec.validate();
    if (static_cast<int>(v.size()) != spec.n)
        throw ParameterError("contains: vector length does not match n");
    for (int e : v)
        if (e < -spec.k_minus || e > spec.k_plus) return false;

    std::vector<int> support;
    for (int i = 0; i < spec.n; ++i)
        if (v[i] != 0) support.push_back(i);
    if (support.empty()) return true;

    for (int i = 0; i < spec.n; ++i) {
        const std::vector<int> cells = window_cells(spec, i);
        bool covered = true;
        for (int pos : support) {
            if (std::find(cells.begin(), cells.end(), pos) == cells.end()) {
                covered = false;
                break;
            }
        }
        if (covered) return true;
    }
    return false;
}

std::string format_ball_spec(const BallSpec& spec) {
    std::ostringstream os;
    os << "n=" << spec.n << " b=" << spec.b << " kplus=" << spec.k_plus
       << " kminus=" << spec.k_minus << " cyclic=" << (spec.cyclic ? "true" : "false");
    return os.str();
}

BallSpec parse_ball_spec(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    const char* keys[5] = {"n=", "b=", "kplus=", "kminus=", "cyclic="};
    long long values[4] = {0, 0, 0, 0};
    BallSpec spec;
    for (int i = 0; i < 5; ++i) {
        if (!(is >> tok) || tok.rfind(keys[i], 0) != 0)
            throw ParseError("ball spec: expected '" + std::string(keys[i]) +
                             "...' in \"" + text + "\"");
        const std::string value = tok.substr(std::string(keys[i]).size());
        if (i == 4) {
            if (value == "true")
                spec.cyclic = true;
            else if (value == "false")
                spec.cyclic = false;
            else
                throw ParseError("ball spec: cyclic must be true or false");
        } else {
            try {
                size_t pos = 0;
                values[i] = std::stoll(value, &pos);
                if (pos != value.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("ball spec: bad integer in '" + tok + "'");
            }
        }
    }
    if (is >> tok) throw ParseError("ball spec: trailing token '" + tok + "'");
    spec.n = static_cast<int>(values[0]);
    spec.b = static_cast<int>(values[1]);
    spec.k_plus = static_cast<int>(values[2]);
    spec.k_minus = static_cast<int>(values[3]);
    spec.validate();
    return spec;
}

}  // namespace burst
