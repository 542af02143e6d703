#include "burst/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace burst {

namespace {

std::string poly_display(const std::vector<long long>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs.size(); ++d) {
        const long long c = coeffs[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        const long long mag = c < 0 ? -c : c;
        if (d == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << "x";
            if (d > 1) os << '^' << d;
        }
    }
    if (first) os << '0';
    return os.str();
}

FamilyPoly make_poly(const std::vector<long long>& coeffs) {
    return FamilyPoly{coeffs, poly_display(coeffs)};
}

// c_0 + c_1 x^e + ... + c_{b-1} x^{(b-1)e} as a dense coefficient vector
std::vector<long long> spread(const std::vector<long long>& c, long long e) {
    std::vector<long long> out(static_cast<size_t>((c.size() - 1) * e + 1), 0);
    for (size_t i = 0; i < c.size(); ++i) out[i * e] = c[i];
    return out;
}

// coefficient value orders: the lead runs 1..k+,-1..-k-; the rest also admit 0
std::vector<long long> lead_values(int k_plus, int k_minus) {
    std::vector<long long> v;
    for (int c = 1; c <= k_plus; ++c) v.push_back(c);
    for (int c = 1; c <= k_minus; ++c) v.push_back(-c);
    return v;
}

std::vector<long long> tail_values(int k_plus, int k_minus) {
    std::vector<long long> v{0};
    for (int c = 1; c <= k_plus; ++c) v.push_back(c);
    for (int c = 1; c <= k_minus; ++c) v.push_back(-c);
    return v;
}

}  // namespace

std::string FamilyId::name() const {
    switch (kind) {
        case Kind::r_alpha:
            return "Ralpha";
        case Kind::c220:
            return "C220";
        case Kind::generic:
            break;
    }
    std::ostringstream os;
    os << "F(" << b << ',' << k_plus << ',' << k_minus << ')';
    return os.str();
}

bool PolyFamilyDef::admissible_q(std::uint64_t q) const {
    switch (id.kind) {
        case FamilyId::Kind::r_alpha:
            return q % 24 == 13 && (q - 1) / 6 >= 3;
        case FamilyId::Kind::c220:
            return q % 6 == 1 && (q - 1) / 6 >= 3;
        case FamilyId::Kind::generic:
            break;
    }
    const long long e = e_param(id.b, id.k_plus, id.k_minus);
    if ((q - 1) % e != 0) return false;
    if (static_cast<long long>((q - 1) / e) < 2 * id.b - 1) return false;
    // with downward magnitudes the condition needs log(-1) anti-aligned,
    // which pins the residue class of q
    if (id.b == 2 && id.k_plus == 1 && id.k_minus == 1) return q % 12 == 7;
    if (id.b == 3 && id.k_plus == 1 && id.k_minus == 1) return q % 36 == 19;
    return true;
}

PolyFamilyDef family_polys(const FamilyId& id) {
    PolyFamilyDef def;
    def.id = id;

    if (id.kind == FamilyId::Kind::r_alpha) {
        const std::vector<std::vector<long long>> base = {
            spread({1}, 1),           // 1
            {0, 0, 0, 1},             // x^3
            {1, 0, 0, 1},             // 1+x^3
            {1, 0, 0, -1},            // 1-x^3
            [] {                      // x^3+x^12
                std::vector<long long> v(13, 0);
                v[3] = 1;
                v[12] = 1;
                return v;
            }(),
            [] {                      // x^3-x^12
                std::vector<long long> v(13, 0);
                v[3] = 1;
                v[12] = -1;
                return v;
            }(),
        };
        for (const auto& c : base) def.polys.push_back(make_poly(c));
        for (const auto& c : base) {
            std::vector<long long> negated(c);
            for (auto& x : negated) x = -x;
            def.polys.push_back(make_poly(negated));
        }
        def.h = 12;
        for (std::uint32_t r = 0; r < 12; ++r) def.required.push_back(r);
        return def;
    }

    if (id.kind == FamilyId::Kind::c220) {
        const std::vector<std::vector<long long>> cs = {
            {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
        for (const auto& c : cs) def.polys.push_back(make_poly(spread(c, 6)));
        def.h = 6;
        def.required = {1, 2, 3, 4, 5};
        return def;
    }

    if (id.b < 1 || id.k_plus < 0 || id.k_minus < 0 || id.k_plus + id.k_minus < 1)
        throw ParameterError("family: invalid parameters");
    const long long e = e_param(id.b, id.k_plus, id.k_minus);
    if (e > 64) throw ParameterError("family: e parameter too large");

    const auto lead = lead_values(id.k_plus, id.k_minus);
    const auto tail = tail_values(id.k_plus, id.k_minus);
    std::vector<size_t> pick(static_cast<size_t>(id.b), 0);
    while (true) {
        std::vector<long long> c(static_cast<size_t>(id.b));
        c[0] = lead[pick[0]];
        for (int i = 1; i < id.b; ++i) c[i] = tail[pick[i]];
        def.polys.push_back(make_poly(spread(c, e)));

        size_t t = pick.size();
        bool done = true;
        while (t-- > 0) {
            const size_t limit = t == 0 ? lead.size() : tail.size();
            if (++pick[t] < limit) {
                done = false;
                break;
            }
            pick[t] = 0;
        }
        if (done) break;
    }

    def.h = static_cast<std::uint32_t>(e);
    for (std::uint32_t r = 0; r < def.h; ++r) def.required.push_back(r);

    if (id.b == 3 && id.k_plus == 1 && id.k_minus == 1) {
        // residue witness mod 9 on the positive-lead polynomials, the
        // canonical assignment the covering condition specializes to
        def.fixed_h = 9;
        def.fixed_targets = {{0, 0}, {1, 6}, {2, 3}, {3, 1}, {4, 5},
                             {5, 4}, {6, 2}, {7, 7}, {8, 8}};
    }
    return def;
}

ConditionReport check_condition(const FieldCtx& F, FieldElem alpha, const FamilyId& id,
                                ConditionMode mode) {
    const PolyFamilyDef def = family_polys(id);
    if (!def.admissible_q(F.q()))
        throw UnsupportedError("condition: q=" + std::to_string(F.q()) +
                               " is outside the admissible class of " + id.name());
    if (!F.is_primitive(alpha))
        throw ParameterError("condition: alpha is not primitive");
    if (mode == ConditionMode::fixed && def.fixed_targets.empty())
        throw ParameterError("condition: family " + id.name() + " has no fixed assignment");

    ConditionReport report;
    report.q = F.q();
    report.alpha = alpha;
    report.family = id;
    report.logs.resize(def.polys.size());

    bool any_zero = false;
    for (size_t i = 0; i < def.polys.size(); ++i) {
        const FieldElem v = F.eval_poly(def.polys[i].coeffs, alpha);
        if (v.idx == 0) {
            any_zero = true;
            continue;
        }
        report.logs[i] = F.dlog(alpha, v);
    }
    if (any_zero) {
        report.satisfied = false;
        return report;
    }

    if (mode == ConditionMode::fixed) {
        report.satisfied = true;
        for (const auto& [idx, target] : def.fixed_targets) {
            if (*report.logs[idx] % def.fixed_h != target) {
                report.satisfied = false;
                break;
            }
        }
        return report;
    }

    std::vector<std::uint32_t> residues;
    residues.reserve(def.polys.size());
    for (const auto& lg : report.logs) residues.push_back(*lg % def.h);
    std::sort(residues.begin(), residues.end());
    report.satisfied =
        std::adjacent_find(residues.begin(), residues.end()) == residues.end() &&
        residues == def.required;
    return report;
}

std::optional<std::pair<FieldElem, ConditionReport>> find_primitive(const FieldCtx& F,
                                                                    const FamilyId& id,
                                                                    ConditionMode mode) {
    const PolyFamilyDef def = family_polys(id);
    if (!def.admissible_q(F.q()))
        throw UnsupportedError("find_primitive: q=" + std::to_string(F.q()) +
                               " is outside the admissible class of " + id.name());
    for (std::uint32_t i = 1; i < F.q(); ++i) {
        const FieldElem alpha{i};
        if (!F.is_primitive(alpha)) continue;
        ConditionReport report = check_condition(F, alpha, id, mode);
        if (report.satisfied) return std::make_pair(alpha, std::move(report));
    }
    return std::nullopt;
}

std::vector<std::uint32_t> boxplus(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, std::uint32_t g) {
    if (a.empty() || b.empty()) throw ParameterError("boxplus: empty input");
    if (g < 1) throw ParameterError("boxplus: modulus must be positive");
    for (std::uint32_t x : a)
        if (x >= g) throw ParameterError("boxplus: entry not reduced mod g");
    for (std::uint32_t x : b)
        if (x >= g) throw ParameterError("boxplus: entry not reduced mod g");
    std::vector<std::uint32_t> out;
    out.reserve(a.size() * b.size());
    for (std::uint32_t shift : b)
        for (std::uint32_t x : a) out.push_back((x + shift) % g);
    return out;
}

namespace {

SplittingSequence from_residues(std::uint64_t order, const std::vector<std::uint32_t>& values) {
    SplittingSequence s;
    s.group = AbelianGroup::cyclic(order);
    for (std::uint32_t v : values) s.elems.push_back(GroupElement{{v}});
    return s;
}

std::vector<std::uint32_t> arithmetic_seq(std::uint32_t from, std::uint32_t step,
                                          std::uint32_t count, std::uint32_t g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < count; ++i)
        out.push_back((from + static_cast<std::uint64_t>(i) * step) % g);
    return out;
}

}  // namespace

SplittingSequence construct_noncyclic_2_10(int n) {
    if (n < 2) throw ParameterError("construct: need n >= 2");
    const std::uint32_t g = 2 * static_cast<std::uint32_t>(n);

    std::vector<std::uint32_t> values;
    if (n % 2 == 1) {
        const std::uint32_t m = (static_cast<std::uint32_t>(n) - 1) / 2;
        const std::vector<std::uint32_t> dev = arithmetic_seq(0, 2, m + 1, g);
        const std::vector<std::uint32_t> base =
            m % 2 == 0 ? std::vector<std::uint32_t>{(m + 1) % g, (3 * m + 3) % g}
                       : std::vector<std::uint32_t>{(3 * m + 2) % g, (m + 2) % g};
        values = boxplus(base, dev, g);
        values.resize(static_cast<size_t>(n));
    } else {
        const std::uint32_t m = static_cast<std::uint32_t>(n) / 2;
        if (m % 2 == 0) {
            const std::vector<std::uint32_t> base{(m + 1) % g, (3 * m + 1) % g};
            values = boxplus(base, arithmetic_seq(0, 2, m, g), g);
        } else if (m == 1) {
            values = {1, 2};
        } else {
            values = arithmetic_seq(1, 2, m - 1, g);  // 1, 3, ..., 2m-3
            const auto s2 = arithmetic_seq(2 * m + 1, 4, (m + 1) / 2, g);
            const auto s3 = arithmetic_seq(4 * m - 3, g - 4, (m + 1) / 2, g);  // step -4
            values.insert(values.end(), s2.begin(), s2.end());
            values.insert(values.end(), s3.begin(), s3.end());
        }
    }
    return from_residues(g, values);
}

SplittingSequence construct_cyclic_2_10(int n) {
    if (n < 4 || (n % 6 != 1 && n % 6 != 4))
        throw UnsupportedError("construct: cyclic 2-burst (1,0) covers n = 1,4 (mod 6), n >= 4");
    const std::uint32_t g = 2 * static_cast<std::uint32_t>(n) + 1;

    std::vector<std::uint32_t> values;
    if (n % 6 == 1) {
        const std::uint32_t m = (static_cast<std::uint32_t>(n) - 1) / 6;
        const std::vector<std::uint32_t> letters{3 * m + 1, 3 * m + 2, 6 * m + 2,
                                                 6 * m + 4, 2,         9 * m + 5};
        values = boxplus(letters, arithmetic_seq(0, 3, m + 1, g), g);
        values.resize(static_cast<size_t>(n));
    } else {
        const std::uint32_t m = (static_cast<std::uint32_t>(n) - 4) / 6;
        if (m == 0) {
            values = {1, 3, 2, 6};
        } else {
            const std::vector<std::uint32_t> letters{1,         9 * m + 10, 3 * m + 2,
                                                     3 * m + 7, 6 * m + 7,  6 * m + 8};
            values = boxplus(letters, arithmetic_seq(0, 3, m, g), g);
            const std::vector<std::uint32_t> suffix{6 * m + 5, 12 * m + 6, 6 * m + 6, 9 * m + 7};
            values.insert(values.end(), suffix.begin(), suffix.end());
        }
    }
    return from_residues(g, values);
}

namespace {

AbelianGroup additive_group_of(const FieldCtx& F) {
    return F.r() == 1 ? AbelianGroup::cyclic(F.p()) : AbelianGroup::field_additive(F.p(), F.r());
}

}  // namespace

SplittingSequence construct_salpha(const FieldCtx& F, int b, int k_plus, int k_minus,
                                   FieldElem alpha, bool verify) {
    const FamilyId family = FamilyId::F(b, k_plus, k_minus);
    const long long e = e_param(b, k_plus, k_minus);
    if ((F.q() - 1) % e != 0)
        throw UnsupportedError("construct: e does not divide q-1");
    const long long n = (F.q() - 1) / e;
    if (n < 2 * b - 1) throw UnsupportedError("construct: n < 2b-1");

    ConditionReport report = check_condition(F, alpha, family);
    if (!report.satisfied) throw ConditionUnsatisfiedError(std::move(report));

    SplittingSequence s;
    s.group = additive_group_of(F);
    const FieldElem step = F.pow(alpha, static_cast<std::uint64_t>(e));
    FieldElem cur = F.one();
    for (long long i = 0; i < n; ++i) {
        s.elems.push_back(s.group.decode(cur.idx));
        cur = F.mul(cur, step);
    }

    if (verify) {
        const BallSpec spec{static_cast<int>(n), b, k_plus, k_minus, true};
        if (!is_perfect_splitting(spec, s))
            throw InternalError("construct: s_alpha failed verification despite the condition");
    }
    return s;
}

SplittingSequence construct_ralpha(const FieldCtx& F, FieldElem alpha, bool verify) {
    if (F.q() % 24 != 13)
        throw UnsupportedError("construct: r_alpha needs q = 13 (mod 24)");
    const std::uint32_t m = (F.q() - 1) / 12;
    const int n = static_cast<int>(2 * m);
    if (n < 3) throw UnsupportedError("construct: r_alpha needs n >= 3");

    ConditionReport report = check_condition(F, alpha, FamilyId::R());
    if (!report.satisfied) throw ConditionUnsatisfiedError(std::move(report));

    SplittingSequence s;
    s.group = additive_group_of(F);
    const FieldElem a3 = F.pow(alpha, 3);
    const FieldElem a12 = F.pow(alpha, 12);
    FieldElem cur = F.one();
    for (std::uint32_t l = 0; l < m; ++l) {
        s.elems.push_back(s.group.decode(cur.idx));
        s.elems.push_back(s.group.decode(F.mul(cur, a3).idx));
        cur = F.mul(cur, a12);
    }

    if (verify) {
        const BallSpec spec{n, 2, 1, 1, true};
        if (!is_perfect_splitting(spec, s))
            throw InternalError("construct: r_alpha failed verification despite the condition");
    }
    return s;
}

}  // namespace burst
