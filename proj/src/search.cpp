#include "burst/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "burst/gf.hpp"

namespace burst {

namespace {

using Word = AbelianGroup::Word;

struct Term {
    int pos;
    int coeff;
};

struct Constraint {
    std::vector<Term> terms;
};

struct BudgetExceeded {};
struct RootCancelled {};

struct EngineShared {
    BallSpec spec;
    AbelianGroup group;
    Word order = 0;
    int n = 0;
    int k_minus = 0;
    std::vector<std::vector<Constraint>> buckets;  // by completion coordinate
    std::vector<Word> scal;                        // (kp+km+1) x order
    std::vector<Word> add_tab;                     // order x order when small
    std::vector<Word> root_candidates;
    std::vector<Word> resume_prefix;
    SearchOptions opts;

    Word add(Word a, Word b) const {
        return add_tab.empty() ? group.add_w(a, b) : add_tab[a * order + b];
    }
    Word scaled(int coeff, Word v) const {
        return scal[static_cast<size_t>(coeff + k_minus) * order + v];
    }
};

std::vector<Word> proper_divisors(Word m) {
    std::vector<Word> out;
    for (Word d = 1; d < m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

EngineShared build_engine(const BallSpec& spec, const AbelianGroup& group,
                          const SearchOptions& opts) {
    spec.validate();
    const std::vector<ErrorVector> ball = enumerate_ball(spec);
    if (ball.size() != group.order())
        throw ParameterError("search: |ball| = " + std::to_string(ball.size()) +
                             " does not equal |G| = " + std::to_string(group.order()));

    EngineShared sh;
    sh.spec = spec;
    sh.group = group;
    sh.order = static_cast<Word>(group.order());
    sh.n = spec.n;
    sh.k_minus = spec.k_minus;
    sh.opts = opts;

    sh.buckets.resize(spec.n);
    for (const ErrorVector& v : ball) {
        Constraint c;
        for (int i = 0; i < spec.n; ++i)
            if (v.entries[i] != 0) c.terms.push_back({i, v.entries[i]});
        if (c.terms.empty()) continue;  // zero vector: image 0 premarked
        const int completion = c.terms.back().pos;
        sh.buckets[completion].push_back(std::move(c));
    }

    const int span = spec.k_plus + spec.k_minus + 1;
    sh.scal.resize(static_cast<size_t>(span) * sh.order);
    for (int c = -spec.k_minus; c <= spec.k_plus; ++c)
        for (Word v = 0; v < sh.order; ++v)
            sh.scal[static_cast<size_t>(c + spec.k_minus) * sh.order + v] =
                group.scalar_w(c, v);

    if (sh.order <= 1024) {
        sh.add_tab.resize(static_cast<size_t>(sh.order) * sh.order);
        for (Word a = 0; a < sh.order; ++a)
            for (Word b = 0; b < sh.order; ++b)
                sh.add_tab[static_cast<size_t>(a) * sh.order + b] = group.add_w(a, b);
    }

    const bool single_component = group.component_orders().size() == 1;
    if (opts.prune_unit_orbit && single_component) {
        sh.root_candidates = proper_divisors(sh.order);
    } else {
        for (Word v = 1; v < sh.order; ++v) sh.root_candidates.push_back(v);
    }
    return sh;
}

struct Shard {
    const EngineShared* sh = nullptr;
    std::atomic<std::uint64_t>* global_nodes = nullptr;
    std::atomic<Word>* best_found_root = nullptr;
    std::atomic<bool>* budget_blown = nullptr;

    std::vector<std::uint8_t> used;
    std::vector<Word> assigned;
    std::vector<Word> undo;
    std::uint64_t pending_nodes = 0;
    std::uint64_t since_checkpoint = 0;
    Word current_root = 0;
    bool write_checkpoints = false;

    std::optional<std::vector<Word>> found;

    void flush_nodes() {
        if (pending_nodes == 0) return;
        const std::uint64_t total =
            global_nodes->fetch_add(pending_nodes, std::memory_order_relaxed) + pending_nodes;
        pending_nodes = 0;
        if (total > sh->opts.node_budget) {
            budget_blown->store(true, std::memory_order_relaxed);
            throw BudgetExceeded{};
        }
        if (budget_blown->load(std::memory_order_relaxed)) throw BudgetExceeded{};
        if (current_root > best_found_root->load(std::memory_order_relaxed))
            throw RootCancelled{};
    }

    void checkpoint_now() const {
        std::ofstream out(sh->opts.checkpoint_file, std::ios::trunc);
        out << "ball " << format_ball_spec(sh->spec) << '\n'
            << sh->group.notation() << '\n';
        SplittingSequence prefix;
        prefix.group = sh->group;
        for (Word w : assigned) prefix.elems.push_back(sh->group.decode(w));
        out << format_sequence(prefix) << '\n';
    }

    void tick() {
        if (++pending_nodes >= 1024) flush_nodes();
        if (write_checkpoints && ++since_checkpoint >= sh->opts.checkpoint_interval) {
            since_checkpoint = 0;
            checkpoint_now();
        }
    }

    bool dfs(int depth, bool on_boundary) {
        if (depth == sh->n) {
            found = assigned;
            return true;
        }
        Word lo = 1;
        if (sh->opts.prune_rotation && sh->spec.cyclic) lo = assigned[0] + 1;
        if (on_boundary && depth < static_cast<int>(sh->resume_prefix.size()))
            lo = std::max(lo, sh->resume_prefix[depth]);

        assigned.resize(depth + 1);
        for (Word v = lo; v < sh->order; ++v) {
            tick();
            assigned[depth] = v;
            bool ok = true;
            const size_t mark_start = undo.size();
            for (const Constraint& c : sh->buckets[depth]) {
                Word w = 0;
                for (const Term& t : c.terms) w = sh->add(w, sh->scaled(t.coeff, assigned[t.pos]));
                if (used[w]) {
                    ok = false;
                    break;
                }
                used[w] = 1;
                undo.push_back(w);
            }
            if (ok) {
                const bool child_boundary =
                    on_boundary && depth < static_cast<int>(sh->resume_prefix.size()) &&
                    v == sh->resume_prefix[depth];
                if (dfs(depth + 1, child_boundary)) return true;
            }
            for (size_t i = mark_start; i < undo.size(); ++i) used[undo[i]] = 0;
            undo.resize(mark_start);
        }
        assigned.resize(depth);
        return false;
    }

    // explores the subtree under a fixed first element; returns true on find
    bool run_root(Word root) {
        current_root = root;
        used.assign(sh->order, 0);
        used[0] = 1;  // image of the zero vector
        undo.clear();
        assigned.assign(1, root);
        tick();
        for (const Constraint& c : sh->buckets[0]) {
            Word w = 0;
            for (const Term& t : c.terms) w = sh->add(w, sh->scaled(t.coeff, root));
            if (used[w]) return false;
            used[w] = 1;
        }
        const bool boundary =
            !sh->resume_prefix.empty() && root == sh->resume_prefix[0];
        return dfs(1, boundary);
    }
};

struct ShardOutcome {
    std::optional<std::vector<Word>> found;
    Word found_root = 0;
    bool budget = false;
};

}  // namespace

SearchReport search_splitting(const BallSpec& spec, const AbelianGroup& group,
                              const SearchOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    EngineShared sh = build_engine(spec, group, opts);

    const bool use_checkpoint = !opts.checkpoint_file.empty() && opts.jobs <= 1;
    if (use_checkpoint && std::filesystem::exists(opts.checkpoint_file)) {
        std::ifstream in(opts.checkpoint_file);
        std::string ball_line, group_line, seq_line;
        std::getline(in, ball_line);
        std::getline(in, group_line);
        std::getline(in, seq_line);
        if (ball_line.rfind("ball ", 0) != 0 ||
            parse_ball_spec(ball_line.substr(5)) != spec || group_line != group.notation())
            throw ParameterError("search: checkpoint file does not match this search");
        if (!seq_line.empty())
            for (const GroupElement& g : parse_sequence(group, seq_line))
                sh.resume_prefix.push_back(group.encode(g));
    }

    std::atomic<std::uint64_t> global_nodes{0};
    std::atomic<Word> best_found_root{sh.order};
    std::atomic<bool> budget_blown{false};

    // drop roots below the resume point
    std::vector<Word> roots;
    for (Word r : sh.root_candidates)
        if (sh.resume_prefix.empty() || r >= sh.resume_prefix[0]) roots.push_back(r);

    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<ShardOutcome> outcomes(roots.size());

    auto run_range = [&](unsigned t) {
        Shard shard;
        shard.sh = &sh;
        shard.global_nodes = &global_nodes;
        shard.best_found_root = &best_found_root;
        shard.budget_blown = &budget_blown;
        shard.write_checkpoints = use_checkpoint;
        for (size_t i = t; i < roots.size(); i += jobs) {
            if (roots[i] > best_found_root.load(std::memory_order_relaxed)) break;
            try {
                if (shard.run_root(roots[i])) {
                    outcomes[i].found = shard.found;
                    outcomes[i].found_root = roots[i];
                    Word expected = best_found_root.load(std::memory_order_relaxed);
                    while (roots[i] < expected &&
                           !best_found_root.compare_exchange_weak(expected, roots[i])) {
                    }
                    break;
                }
            } catch (const BudgetExceeded&) {
                outcomes[i].budget = true;
                break;
            } catch (const RootCancelled&) {
                continue;
            }
        }
        try {
            shard.flush_nodes();
        } catch (...) {
        }
    };

    if (jobs == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(run_range, t);
        for (auto& th : threads) th.join();
    }

    SearchReport report;
    report.spec = spec;
    report.group = group;
    report.nodes_visited = global_nodes.load();
    for (const ShardOutcome& o : outcomes) {
        if (!o.found) continue;
        SplittingSequence s;
        s.group = group;
        for (Word w : *o.found) s.elems.push_back(group.decode(w));
        report.found = std::move(s);
        break;  // outcomes are in ascending root order
    }

    // Sequentially, a find precedes any budget trip in the tail flush and
    // every smaller root was exhausted first, so the result stands. Sharded
    // runs cannot make that guarantee; treat the trip as fatal there.
    if (budget_blown.load() && !(jobs == 1 && report.found))
        throw ResourceError("search: node budget exceeded after " +
                            std::to_string(global_nodes.load()) + " nodes");
    if (report.found && !is_perfect_splitting(spec, *report.found))
        throw InternalError("search: found sequence failed verification");

    if (use_checkpoint && std::filesystem::exists(opts.checkpoint_file))
        std::filesystem::remove(opts.checkpoint_file);

    report.wall_time = std::chrono::steady_clock::now() - t0;
    return report;
}

bool prove_nonexistence(const BallSpec& spec, std::uint64_t order, const SearchOptions& opts) {
    if (static_cast<std::uint64_t>(ball_size(spec)) != order)
        throw ParameterError("nonexistence: |ball| does not equal the order");
    for (const AbelianGroup& G : enumerate_abelian_groups(order)) {
        const SearchReport report = search_splitting(spec, G, opts);
        if (report.found) return false;
    }
    return true;
}

namespace {

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            std::uint32_t r = 0;
            std::uint64_t v = q;
            while (v % p == 0) {
                v /= p;
                ++r;
            }
            if (v != 1) throw ParameterError("q is not a prime power");
            return {static_cast<std::uint32_t>(p), r};
        }
    }
    return {static_cast<std::uint32_t>(q), 1};
}

}  // namespace

std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi) {
    if (hi > FieldCtx::kMaxQ) throw ResourceError("prime power scan exceeds the 2^20 cap");
    std::vector<std::uint8_t> composite(hi + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= hi; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = p * p; m <= hi; m += p) composite[m] = 1;
        for (std::uint64_t pw = p; pw <= hi; pw *= p) {
            if (pw >= lo) out.push_back(pw);
            if (pw > hi / p) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string table2_row_name(Table2Row row) {
    switch (row) {
        case Table2Row::S211:
            return "s211";
        case Table2Row::R211:
            return "r211";
        case Table2Row::S310:
            return "s310";
        case Table2Row::S311:
            return "s311";
    }
    return "?";
}

Table2Result reproduce_table2(Table2Row row, std::uint64_t q_max) {
    FamilyId family = FamilyId::F(2, 1, 1);
    std::uint64_t mod = 12, residue = 7, lo = 19;
    switch (row) {
        case Table2Row::S211:
            break;
        case Table2Row::R211:
            family = FamilyId::R();
            mod = 24;
            residue = 13;
            lo = 19;
            break;
        case Table2Row::S310:
            family = FamilyId::F(3, 1, 0);
            mod = 4;
            residue = 1;
            lo = 21;
            break;
        case Table2Row::S311:
            family = FamilyId::F(3, 1, 1);
            mod = 36;
            residue = 19;
            lo = 91;
            break;
    }

    Table2Result result;
    result.row = row;
    result.q_max = q_max;
    for (std::uint64_t q : prime_powers_in(lo, q_max)) {
        if (q % mod != residue) continue;
        const auto [p, r] = prime_power_decompose(q);
        const FieldCtx F(p, r);
        if (find_primitive(F, family))
            result.good.push_back(q);
        else
            result.bad.push_back(q);
    }
    return result;
}

std::vector<std::uint64_t> scan_good_q_220(std::uint64_t q_max) {
    std::vector<std::uint64_t> good;
    for (std::uint64_t q : prime_powers_in(19, q_max)) {
        if (q % 6 != 1) continue;
        const auto [p, r] = prime_power_decompose(q);
        const FieldCtx F(p, r);
        if (find_primitive(F, FamilyId::C220())) good.push_back(q);
    }
    return good;
}

namespace {

ReferenceRow make_row(int n, int b, int kp, int km, bool cyclic, std::uint64_t order,
                      std::vector<std::uint32_t> seq) {
    return ReferenceRow{BallSpec{n, b, kp, km, cyclic}, order, std::move(seq)};
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows_220() {
    static const std::vector<ReferenceRow> rows = {
        make_row(3, 2, 2, 0, true, 19, {1, 7, 11}),
        make_row(4, 2, 2, 0, true, 25, {1, 5, 4, 20}),
        make_row(3, 2, 2, 0, false, 15, {1, 5, 4}),
        make_row(4, 2, 2, 0, false, 21, {1, 5, 20, 18}),
    };
    return rows;
}

const std::vector<ReferenceRow>& reference_rows_cyclic_211() {
    static const std::vector<ReferenceRow> rows = {
        make_row(4, 2, 1, 1, true, 25, {1, 5, 2, 10}),
        make_row(5, 2, 1, 1, true, 31, {1, 4, 15, 2, 8}),
        make_row(6, 2, 1, 1, true, 37, {1, 8, 10, 6, 11, 14}),
        make_row(8, 2, 1, 1, true, 49, {1, 4, 21, 9, 2, 18, 8, 14}),
        make_row(9, 2, 1, 1, true, 55, {1, 3, 12, 25, 6, 20, 27, 17, 22}),
        make_row(10, 2, 1, 1, true, 61, {1, 3, 11, 24, 9, 25, 30, 12, 29, 22}),
        make_row(11, 2, 1, 1, true, 67, {1, 3, 9, 27, 14, 25, 8, 24, 5, 15, 22}),
        make_row(12, 2, 1, 1, true, 73, {1, 3, 8, 27, 33, 12, 30, 20, 29, 7, 32, 15}),
        make_row(13, 2, 1, 1, true, 79, {1, 3, 8, 14, 37, 17, 10, 26, 38, 9, 39, 21, 34}),
        make_row(14, 2, 1, 1, true, 85, {1, 3, 8, 14, 31, 7, 41, 9, 21, 39, 10, 23, 42, 27}),
    };
    return rows;
}

const std::vector<ReferenceRow>& reference_rows_noncyclic_211() {
    static const std::vector<ReferenceRow> rows = {
        make_row(3, 2, 1, 1, false, 15, {1, 5, 2}),
        make_row(4, 2, 1, 1, false, 21, {1, 4, 10, 2}),
        make_row(5, 2, 1, 1, false, 27, {1, 4, 10, 2, 9}),
        make_row(6, 2, 1, 1, false, 33, {1, 14, 10, 2, 5, 11}),
        make_row(7, 2, 1, 1, false, 39, {1, 3, 12, 19, 6, 16, 5}),
        make_row(8, 2, 1, 1, false, 45, {1, 3, 12, 20, 14, 21, 5, 22}),
        make_row(9, 2, 1, 1, false, 51, {1, 3, 9, 16, 5, 24, 10, 23, 8}),
        make_row(10, 2, 1, 1, false, 57, {1, 3, 8, 25, 13, 28, 6, 20, 27, 9}),
        make_row(11, 2, 1, 1, false, 63, {1, 3, 8, 29, 7, 25, 15, 28, 16, 30, 24}),
        make_row(12, 2, 1, 1, false, 69, {1, 3, 8, 17, 32, 13, 29, 7, 28, 18, 12, 26}),
        make_row(13, 2, 1, 1, false, 75, {1, 3, 8, 14, 32, 19, 31, 16, 26, 9, 30, 7, 27}),
        make_row(14, 2, 1, 1, false, 81, {1, 3, 8, 14, 30, 13, 40, 21, 12, 35, 10, 39, 24, 31}),
    };
    return rows;
}

std::vector<ReferenceRowReport> verify_reference_rows(const std::vector<ReferenceRow>& rows,
                                                      bool with_search) {
    std::vector<ReferenceRowReport> reports;
    for (const ReferenceRow& row : rows) {
        ReferenceRowReport report;
        report.row = row;
        SplittingSequence s;
        s.group = AbelianGroup::cyclic(row.group_order);
        for (std::uint32_t v : row.seq) s.elems.push_back(GroupElement{{v}});
        report.verified = is_perfect_splitting(row.spec, s);
        if (!report.verified) {
            std::ostringstream os;
            os << "table row n=" << row.spec.n << " group=Z" << row.group_order
               << " failed verification";
            throw InternalError(os.str());
        }
        if (with_search) {
            const SearchReport sr =
                search_splitting(row.spec, AbelianGroup::cyclic(row.group_order));
            report.search_found = sr.found.has_value();
            if (!sr.found) {
                std::ostringstream os;
                os << "table row n=" << row.spec.n << " group=Z" << row.group_order
                   << " verified but search found nothing";
                throw InternalError(os.str());
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<ReferenceRowReport> reproduce_tables345(bool with_search) {
    std::vector<ReferenceRowReport> reports;
    for (const auto* rows :
         {&reference_rows_220(), &reference_rows_cyclic_211(), &reference_rows_noncyclic_211()}) {
        auto part = verify_reference_rows(*rows, with_search);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    return reports;
}

}  // namespace burst
