#include "burst/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "burst/codec.hpp"
#include "burst/constructions.hpp"
#include "burst/errors.hpp"
#include "burst/gf.hpp"
#include "burst/search.hpp"

namespace burst::cli {

namespace {

std::vector<long long> parse_int_csv(const std::string& text) {
    std::vector<long long> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string tok = text.substr(start, end - start);
        try {
            size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in '" + text + "'");
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::string format_int_csv(const std::vector<long long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::string format_error_vector(const ErrorVector& e) {
    return format_int_csv(std::vector<long long>(e.entries.begin(), e.entries.end()));
}

struct BallArgs {
    int n = 0, b = 0, kplus = 0, kminus = 0;
    bool cyclic = false;
    BallSpec to_spec() const {
        BallSpec spec{n, b, kplus, kminus, cyclic};
        spec.validate();
        return spec;
    }
};

int run_ball(const BallArgs& args, bool list, std::ostream& out) {
    const BallSpec spec = args.to_spec();
    const auto ball = enumerate_ball(spec);
    out << ball.size() << '\n';
    if (list)
        for (const ErrorVector& e : ball) out << format_error_vector(e) << '\n';
    return 0;
}

int run_verify(const std::string& ball_text, const std::string& group_text,
               const std::string& seq_text, std::ostream& out) {
    const BallSpec spec = parse_ball_spec(ball_text);
    SplittingSequence s;
    s.group = parse_group(group_text);
    s.elems = parse_sequence(s.group, seq_text);

    const long long size = ball_size(spec);
    if (static_cast<std::uint64_t>(size) != s.group.order()) {
        out << "not perfect: |ball|=" << size << " |G|=" << s.group.order() << '\n';
        return 1;
    }
    if (const auto collision = find_collision(spec, s)) {
        out << "collision: " << format_error_vector(collision->first) << " and "
            << format_error_vector(collision->second) << " both map to "
            << format_element(s.group, collision->value) << '\n';
        return 1;
    }
    out << "perfect splitting: |ball| = |G| = " << size << '\n';
    return 0;
}

int run_construct(const std::string& kind, int n, std::uint64_t q, int b, int kplus,
                  int kminus, bool verify, std::ostream& out, std::ostream& err) {
    CodeSpec cs;
    if (kind == "nc210") {
        if (n <= 0) throw ParameterError("construct: --n is required for nc210");
        cs.splitting = construct_noncyclic_2_10(n);
        cs.spec = BallSpec{n, 2, 1, 0, false};
    } else if (kind == "c210") {
        if (n <= 0) throw ParameterError("construct: --n is required for c210");
        cs.splitting = construct_cyclic_2_10(n);
        cs.spec = BallSpec{n, 2, 1, 0, true};
    } else if (kind == "salpha" || kind == "ralpha") {
        if (q == 0) throw ParameterError("construct: --q is required for field constructions");
        std::uint64_t v = q;
        std::uint32_t p = 0, r = 0;
        for (std::uint64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) {
                p = static_cast<std::uint32_t>(d);
                break;
            }
        if (p == 0) p = static_cast<std::uint32_t>(v);
        while (v % p == 0 && v > 1) {
            v /= p;
            ++r;
        }
        if (v != 1) throw ParameterError("construct: q must be a prime power");
        const FieldCtx F(p, r);
        const FamilyId family =
            kind == "salpha" ? FamilyId::F(b, kplus, kminus) : FamilyId::R();
        const auto hit = find_primitive(F, family);
        if (!hit) {
            err << "no primitive element of GF(" << q << ") satisfies the "
                << family.name() << " condition\n";
            return 3;
        }
        if (kind == "salpha") {
            cs.splitting = construct_salpha(F, b, kplus, kminus, hit->first);
            cs.spec = BallSpec{static_cast<int>((F.q() - 1) / e_param(b, kplus, kminus)), b,
                               kplus, kminus, true};
        } else {
            cs.splitting = construct_ralpha(F, hit->first);
            cs.spec = BallSpec{static_cast<int>((F.q() - 1) / 6), 2, 1, 1, true};
        }
    } else {
        throw ParameterError("construct: unknown --kind " + kind);
    }

    if (verify) {
        if (!is_perfect_splitting(cs.spec, cs.splitting))
            throw InternalError("construct: output failed re-verification");
        err << "verified=ok\n";
    }
    out << format_code_spec(cs);
    return 0;
}

int run_search(const std::string& ball_text, std::uint64_t order, bool all_groups,
               unsigned jobs, const std::string& checkpoint, std::uint64_t node_budget,
               bool no_orbit, bool no_rotation, std::ostream& out) {
    const BallSpec spec = parse_ball_spec(ball_text);
    SearchOptions opts;
    opts.prune_unit_orbit = !no_orbit;
    opts.prune_rotation = !no_rotation;
    opts.jobs = jobs;
    opts.checkpoint_file = checkpoint;
    if (node_budget > 0) opts.node_budget = node_budget;

    std::vector<AbelianGroup> groups;
    if (all_groups)
        groups = enumerate_abelian_groups(order);
    else
        groups.push_back(AbelianGroup::cyclic(order));

    bool any_found = false;
    for (const AbelianGroup& G : groups) {
        const SearchReport report = search_splitting(spec, G, opts);
        out << "group=" << G.notation();
        if (report.found) {
            any_found = true;
            out << " outcome=found sequence=" << format_sequence(*report.found);
        } else {
            out << " outcome=none";
        }
        out << " nodes=" << report.nodes_visited << '\n';
    }
    return any_found ? 0 : 3;
}

void print_table2(std::uint64_t q_max, std::ostream& out) {
    for (const Table2Row row :
         {Table2Row::S211, Table2Row::R211, Table2Row::S310, Table2Row::S311}) {
        const Table2Result result = reproduce_table2(row, q_max);
        const std::string name = table2_row_name(row);
        out << "table2 scan=" << name << " qmax=" << q_max << " good=" << result.good.size()
            << " bad=" << result.bad.size() << '\n';
        out << name << " bad:";
        for (std::uint64_t q : result.bad) out << ' ' << q;
        out << '\n' << name << " good:";
        for (std::uint64_t q : result.good) out << ' ' << q;
        out << '\n';
    }
}

void print_goodq220(std::uint64_t q_max, std::ostream& out) {
    const auto good = scan_good_q_220(q_max);
    out << "goodq220 qmax=" << q_max << " count=" << good.size() << '\n';
    out << "good:";
    for (std::uint64_t q : good) out << ' ' << q;
    out << '\n';
}

void print_reference_table(const std::string& label, const std::vector<ReferenceRow>& rows,
                           bool with_search, std::ostream& out) {
    out << label << " rows=" << rows.size() << '\n';
    const auto reports = verify_reference_rows(rows, with_search);
    for (const ReferenceRowReport& report : reports) {
        SplittingSequence s;
        s.group = AbelianGroup::cyclic(report.row.group_order);
        for (std::uint32_t v : report.row.seq) s.elems.push_back(GroupElement{{v}});
        out << "row ball=\"" << format_ball_spec(report.row.spec) << "\" group=Z"
            << report.row.group_order << " seq=" << format_sequence(s)
            << " verified=" << (report.verified ? "ok" : "FAIL");
        if (report.search_found)
            out << " search=" << (*report.search_found ? "found" : "none");
        else
            out << " search=skipped";
        out << '\n';
    }
}

int run_tables(const std::string& which, std::uint64_t q_max, bool no_search,
               std::ostream& out) {
    if (which == "2") {
        print_table2(q_max, out);
    } else if (which == "goodq220") {
        print_goodq220(q_max, out);
    } else if (which == "3") {
        print_reference_table("table3", reference_rows_220(), !no_search, out);
    } else if (which == "4") {
        print_reference_table("table4", reference_rows_cyclic_211(), !no_search, out);
    } else if (which == "5") {
        print_reference_table("table5", reference_rows_noncyclic_211(), !no_search, out);
    } else {
        throw ParameterError("tables: --which must be one of 2, 3, 4, 5, goodq220");
    }
    return 0;
}

int run_decode(const std::string& code_path, const std::string& y_text, std::ostream& out) {
    const CodeSpec cs = load_code_spec(code_path);
    const LatticeCode code = code_from_splitting(cs.spec, cs.splitting);
    const std::vector<long long> y = parse_int_csv(y_text);
    const DecodeResult result = decode(code, y);
    out << "codeword=" << format_int_csv(result.codeword) << '\n';
    out << "error=" << format_error_vector(result.error) << '\n';
    return 0;
}

int run_simulate(const std::string& code_path, std::uint64_t trials, std::uint64_t seed,
                 bool include_zero, std::ostream& out) {
    const CodeSpec cs = load_code_spec(code_path);
    const LatticeCode code = code_from_splitting(cs.spec, cs.splitting);
    std::mt19937_64 rng(seed);

    const size_t msg_len = static_cast<size_t>(code.n()) - code.info_positions().size();
    std::uint64_t successes = 0, failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<long long> message(msg_len);
        for (auto& m : message) m = static_cast<long long>(rng() % 2001) - 1000;
        const std::vector<long long> x = encode(code, message);
        const std::vector<long long> y =
            inject_burst_random(cs.spec, x, rng, include_zero, &code.ball());
        const DecodeResult result = decode(code, y);
        bool ok = result.codeword == x;
        for (size_t i = 0; ok && i < y.size(); ++i)
            if (y[i] - x[i] != result.error.entries[i]) ok = false;
        if (ok)
            ++successes;
        else
            ++failures;
    }
    out << "trials=" << trials << " successes=" << successes << " failures=" << failures
        << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace

CodeSpec parse_code_spec(std::istream& in) {
    std::string ball_line, group_line, seq_line;
    if (!std::getline(in, ball_line) || !std::getline(in, group_line) ||
        !std::getline(in, seq_line))
        throw ParseError("code spec: expected three lines (ball, group, sequence)");
    if (ball_line.rfind("ball ", 0) != 0)
        throw ParseError("code spec: line 1 must start with 'ball '");
    CodeSpec cs;
    cs.spec = parse_ball_spec(ball_line.substr(5));
    cs.splitting.group = parse_group(group_line);
    cs.splitting.elems = parse_sequence(cs.splitting.group, seq_line);
    return cs;
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("code spec: cannot open " + path);
    return parse_code_spec(in);
}

std::string format_code_spec(const CodeSpec& cs) {
    std::ostringstream os;
    os << "ball " << format_ball_spec(cs.spec) << '\n'
       << cs.splitting.group.notation() << '\n'
       << format_sequence(cs.splitting) << '\n';
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"perfect lattice codes for single bursts of limited-magnitude errors"};
    app.require_subcommand(1);
    int rc = 0;

    // ball
    auto ball_args = std::make_shared<BallArgs>();
    auto list = std::make_shared<bool>(false);
    CLI::App* ball_cmd = app.add_subcommand("ball", "enumerate an error ball");
    ball_cmd->add_option("--n", ball_args->n)->required();
    ball_cmd->add_option("--b", ball_args->b)->required();
    ball_cmd->add_option("--kplus", ball_args->kplus)->required();
    ball_cmd->add_option("--kminus", ball_args->kminus)->required();
    ball_cmd->add_flag("--cyclic", ball_args->cyclic);
    ball_cmd->add_flag("--list", *list);
    ball_cmd->callback([&, ball_args, list] { rc = run_ball(*ball_args, *list, out); });

    // verify
    auto v_ball = std::make_shared<std::string>();
    auto v_group = std::make_shared<std::string>();
    auto v_seq = std::make_shared<std::string>();
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a perfect splitting");
    verify_cmd->add_option("--ball", *v_ball)->required();
    verify_cmd->add_option("--group", *v_group)->required();
    verify_cmd->add_option("--seq", *v_seq)->required();
    verify_cmd->callback([&, v_ball, v_group, v_seq] { rc = run_verify(*v_ball, *v_group, *v_seq, out); });

    // construct
    auto c_kind = std::make_shared<std::string>();
    auto c_n = std::make_shared<int>(0);
    auto c_q = std::make_shared<std::uint64_t>(0);
    auto c_b = std::make_shared<int>(2);
    auto c_kplus = std::make_shared<int>(1);
    auto c_kminus = std::make_shared<int>(0);
    auto c_verify = std::make_shared<bool>(false);
    CLI::App* construct_cmd = app.add_subcommand("construct", "build a splitting sequence from a known construction");
    construct_cmd->add_option("--kind", *c_kind)->required()
        ->check(CLI::IsMember({"nc210", "c210", "salpha", "ralpha"}));
    construct_cmd->add_option("--n", *c_n);
    construct_cmd->add_option("--q", *c_q);
    construct_cmd->add_option("--b", *c_b);
    construct_cmd->add_option("--kplus", *c_kplus);
    construct_cmd->add_option("--kminus", *c_kminus);
    construct_cmd->add_flag("--verify", *c_verify);
    construct_cmd->callback([&, c_kind, c_n, c_q, c_b, c_kplus, c_kminus, c_verify] {
        rc = run_construct(*c_kind, *c_n, *c_q, *c_b, *c_kplus, *c_kminus, *c_verify, out, err);
    });

    // search
    auto s_ball = std::make_shared<std::string>();
    auto s_order = std::make_shared<std::uint64_t>(0);
    auto s_all = std::make_shared<bool>(false);
    auto s_jobs = std::make_shared<unsigned>(1);
    auto s_checkpoint = std::make_shared<std::string>();
    auto s_budget = std::make_shared<std::uint64_t>(0);
    auto s_no_orbit = std::make_shared<bool>(false);
    auto s_no_rotation = std::make_shared<bool>(false);
    CLI::App* search_cmd = app.add_subcommand("search", "exhaustive splitting search");
    search_cmd->add_option("--ball", *s_ball)->required();
    search_cmd->add_option("--group-order", *s_order)->required();
    search_cmd->add_flag("--all-groups", *s_all);
    search_cmd->add_option("--jobs", *s_jobs);
    search_cmd->add_option("--checkpoint", *s_checkpoint);
    search_cmd->add_option("--node-budget", *s_budget);
    search_cmd->add_flag("--no-prune-orbit", *s_no_orbit);
    search_cmd->add_flag("--no-prune-rotation", *s_no_rotation);
    search_cmd->callback([&, s_ball, s_order, s_all, s_jobs, s_checkpoint, s_budget, s_no_orbit,
                          s_no_rotation] {
        rc = run_search(*s_ball, *s_order, *s_all, *s_jobs, *s_checkpoint, *s_budget,
                        *s_no_orbit, *s_no_rotation, out);
    });

    // tables
    auto t_which = std::make_shared<std::string>();
    auto t_qmax = std::make_shared<std::uint64_t>(1000);
    auto t_no_search = std::make_shared<bool>(false);
    CLI::App* tables_cmd = app.add_subcommand("tables", "emit the table verification reports");
    tables_cmd->add_option("--which", *t_which)->required()
        ->check(CLI::IsMember({"2", "3", "4", "5", "goodq220"}));
    tables_cmd->add_option("--qmax", *t_qmax);
    tables_cmd->add_flag("--no-search", *t_no_search);
    tables_cmd->callback(
        [&, t_which, t_qmax, t_no_search] { rc = run_tables(*t_which, *t_qmax, *t_no_search, out); });

    // decode
    auto d_code = std::make_shared<std::string>();
    auto d_y = std::make_shared<std::string>();
    CLI::App* decode_cmd = app.add_subcommand("decode", "syndrome-decode a received vector");
    decode_cmd->add_option("--code", *d_code)->required();
    decode_cmd->add_option("--y", *d_y)->required();
    decode_cmd->callback([&, d_code, d_y] { rc = run_decode(*d_code, *d_y, out); });

    // simulate
    auto m_code = std::make_shared<std::string>();
    auto m_trials = std::make_shared<std::uint64_t>(0);
    auto m_seed = std::make_shared<std::uint64_t>(0);
    auto m_zero = std::make_shared<bool>(false);
    CLI::App* sim_cmd = app.add_subcommand("simulate", "round-trip random bursts");
    sim_cmd->add_option("--code", *m_code)->required();
    sim_cmd->add_option("--trials", *m_trials)->required();
    sim_cmd->add_option("--seed", *m_seed)->required();
    sim_cmd->add_flag("--include-zero", *m_zero);
    sim_cmd->callback([&, m_code, m_trials, m_seed, m_zero] {
        rc = run_simulate(*m_code, *m_trials, *m_seed, *m_zero, out);
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return 64;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 4;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 5;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << '\n';
        return 5;
    } catch (const ConstructionError& e) {
        err << "construction error: " << e.what() << '\n';
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 70;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 70;
    }
    return rc;
}

}  // namespace burst::cli
