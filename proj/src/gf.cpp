#include "burst/gf.hpp"

#include <numeric>
#include <sstream>

namespace burst {

namespace {

bool is_prime_u32(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t v) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Dense polynomials over GF(p), constant term first, trailing zeros trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    // reduce by the monic modulus: x^d = -(mod[0] + ... + mod[d-1] x^(d-1))
    const size_t d = mod.size() - 1;
    for (size_t i = prod.size(); i-- > d;) {
        const std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < d; ++j) {
            const std::uint32_t sub =
                static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * mod[j] % p);
            prod[i - d + j] = (prod[i - d + j] + p - sub) % p;
        }
    }
    if (prod.size() > d) prod.resize(d);
    trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly result{1};
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint32_t v) {
        std::uint32_t result = 1, base = v, e = p - 2;
        while (e > 0) {
            if (e & 1) result = static_cast<std::uint64_t>(result) * base % p;
            base = static_cast<std::uint64_t>(base) * base % p;
            e >>= 1;
        }
        return result;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        const std::uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size()) {
            const std::uint32_t c =
                static_cast<std::uint64_t>(a.back()) * lead_inv % p;
            if (c != 0) {
                const size_t shift = a.size() - b.size();
                for (size_t j = 0; j < b.size(); ++j) {
                    const std::uint64_t sub = static_cast<std::uint64_t>(c) * b[j] % p;
                    a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
                }
            }
            const size_t before = a.size();
            trim(a);
            if (a.size() == before) a.pop_back();  // leading term must vanish
            if (a.empty()) break;
        }
        std::swap(a, b);
        trim(b);
    }
    return a;
}

// f monic of degree r over GF(p): irreducible iff x^(p^r) == x (mod f) and
// gcd(x^(p^(r/l)) - x, f) = 1 for every prime l | r.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    const size_t r = f.size() - 1;
    const Poly x{0, 1};
    auto p_power = [p](size_t e) {
        std::uint64_t v = 1;
        for (size_t i = 0; i < e; ++i) v *= p;
        return v;
    };
    Poly xq = poly_powmod(x, p_power(r), f, p);
    if (xq != x) return false;
    for (std::uint32_t l : distinct_prime_factors(static_cast<std::uint32_t>(r))) {
        Poly xs = poly_powmod(x, p_power(r / l), f, p);
        // xs - x
        Poly diff = xs;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly g = poly_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t r, const std::vector<std::uint32_t>& modulus)
    : FieldCtx(p, r) {
    if (r == 1) return;  // prime-field arithmetic never consults the modulus
    if (modulus.size() != r + 1 || modulus.back() != 1)
        throw ParameterError("field: modulus must be monic of degree r");
    for (std::uint32_t c : modulus)
        if (c >= p) throw ParameterError("field: modulus coefficients not reduced mod p");
    if (!poly_irreducible(Poly(modulus.begin(), modulus.end()), p))
        throw ParameterError("field: modulus is reducible");
    if (modulus == modulus_) return;
    modulus_ = modulus;

    generator_ = {0};
    for (std::uint32_t i = 1; i < q_; ++i) {
        if (is_primitive(FieldElem{i})) {
            generator_ = {i};
            break;
        }
    }
    std::uint32_t acc = 1;
    for (std::uint32_t a = 0; a < q_ - 1; ++a) {
        exp_[a] = acc;
        log_[acc] = a;
        acc = mul_idx(acc, generator_.idx);
    }
    if (acc != 1) throw InternalError("field: generator order is not q-1");
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t r) : p_(p), r_(r) {
    if (!is_prime_u32(p)) throw ParameterError("field: p is not prime");
    if (r < 1) throw ParameterError("field: r must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxQ) throw ResourceError("field: q exceeds the 2^20 cap");
    }
    q_ = static_cast<std::uint32_t>(q);
    qm1_factors_ = distinct_prime_factors(q_ - 1);

    if (r == 1) {
        modulus_ = {0, 1};  // x; unused for prime-field arithmetic
    } else {
        // Lexicographically smallest monic irreducible, coefficient vectors
        // compared from the constant term upward.
        std::vector<std::uint32_t> c(r, 0);
        bool found = false;
        while (!found) {
            Poly f(c.begin(), c.end());
            f.push_back(1);
            if (poly_irreducible(f, p)) {
                modulus_ = f;
                found = true;
                break;
            }
            // increment with the last coefficient fastest, so vectors are
            // visited in ascending lex order from the constant term
            size_t t = r;
            while (t > 0) {
                --t;
                if (c[t] + 1 < p) {
                    ++c[t];
                    std::fill(c.begin() + t + 1, c.end(), 0);
                    break;
                }
                if (t == 0) throw InternalError("field: no irreducible polynomial found");
            }
        }
    }

    // First primitive element in index order, by the power test.
    generator_ = {0};
    for (std::uint32_t i = 1; i < q_; ++i) {
        if (is_primitive(FieldElem{i})) {
            generator_ = {i};
            break;
        }
    }
    if (generator_.idx == 0) throw InternalError("field: no generator found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t a = 0; a < q_ - 1; ++a) {
        exp_[a] = acc;
        log_[acc] = a;
        acc = mul_idx(acc, generator_.idx);
    }
    if (acc != 1) throw InternalError("field: generator order is not q-1");
}

void FieldCtx::check(FieldElem x) const {
    if (x.idx >= q_) throw ParameterError("field: element index out of range");
}

FieldElem FieldCtx::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != r_) throw ParameterError("field: coefficient vector has wrong length");
    std::uint32_t idx = 0, stride = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (coeffs[i] >= p_) throw ParameterError("field: coefficient not reduced mod p");
        idx += coeffs[i] * stride;
        stride *= p_;
    }
    return {idx};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElem x) const {
    check(x);
    std::vector<std::uint32_t> out(r_);
    std::uint32_t v = x.idx;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

FieldElem FieldCtx::from_int(long long v) const {
    long long residue = v % p_;
    if (residue < 0) residue += p_;
    return {static_cast<std::uint32_t>(residue)};
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (r_ == 1) return {(a.idx + b.idx) % p_};
    std::uint32_t idx = 0, stride = 1, va = a.idx, vb = b.idx;
    for (std::uint32_t i = 0; i < r_; ++i) {
        idx += (va % p_ + vb % p_) % p_ * stride;
        va /= p_;
        vb /= p_;
        stride *= p_;
    }
    return {idx};
}

FieldElem FieldCtx::neg(FieldElem a) const {
    check(a);
    if (r_ == 1) return {(p_ - a.idx) % p_};
    std::uint32_t idx = 0, stride = 1, va = a.idx;
    for (std::uint32_t i = 0; i < r_; ++i) {
        idx += (p_ - va % p_) % p_ * stride;
        va /= p_;
        stride *= p_;
    }
    return {idx};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul_idx(std::uint32_t a, std::uint32_t b) const {
    if (r_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    Poly fa, fb;
    std::uint32_t va = a, vb = b;
    for (std::uint32_t i = 0; i < r_; ++i) {
        fa.push_back(va % p_);
        fb.push_back(vb % p_);
        va /= p_;
        vb /= p_;
    }
    trim(fa);
    trim(fb);
    Poly prod = poly_mulmod(fa, fb, modulus_, p_);
    std::uint32_t idx = 0, stride = 1;
    for (size_t i = 0; i < prod.size(); ++i) {
        idx += prod[i] * stride;
        stride *= p_;
    }
    return idx;
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return {mul_idx(a.idx, b.idx)};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
    check(a);
    FieldElem result = one(), base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem FieldCtx::inv(FieldElem a) const {
    check(a);
    if (a.idx == 0) throw ParameterError("field: zero has no inverse");
    return pow(a, q_ - 2);
}

bool FieldCtx::is_primitive(FieldElem x) const {
    check(x);
    if (x.idx == 0) throw ParameterError("field: zero is not in the multiplicative group");
    if (q_ == 2) return x.idx == 1;
    for (std::uint32_t l : qm1_factors_)
        if (pow(x, (q_ - 1) / l).idx == 1) return false;
    return true;
}

std::uint32_t FieldCtx::dlog(FieldElem x) const {
    check(x);
    if (x.idx == 0) throw ParameterError("field: zero has no discrete log");
    return log_[x.idx];
}

std::uint32_t FieldCtx::dlog(FieldElem base, FieldElem x) const {
    const std::uint32_t t = dlog(x);
    const std::uint32_t u = dlog(base);
    const std::uint32_t m = q_ - 1;
    if (std::gcd(u, m) != 1) throw ParameterError("field: dlog base is not primitive");
    // u^-1 mod m by extended Euclid
    long long r0 = m, r1 = u, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long long div = r0 / r1;
        r0 -= div * r1;
        std::swap(r0, r1);
        s0 -= div * s1;
        std::swap(s0, s1);
    }
    long long uinv = s0 % m;
    if (uinv < 0) uinv += m;
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) * uinv % m);
}

bool FieldCtx::is_qr(FieldElem x) const {
    if (p_ == 2) throw ParameterError("field: quadratic residues need odd q");
    check(x);
    if (x.idx == 0) throw ParameterError("field: zero is neither residue nor non-residue");
    return dlog(x) % 2 == 0;
}

FieldElem FieldCtx::eval_poly(const std::vector<long long>& poly, FieldElem x) const {
    check(x);
    FieldElem acc = zero();
    for (size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, x), from_int(poly[i]));
    return acc;
}

std::string FieldCtx::format(FieldElem x) const {
    check(x);
    if (r_ == 1) return std::to_string(x.idx);
    std::ostringstream os;
    os << '[';
    const auto c = coeffs(x);
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

}  // namespace burst
