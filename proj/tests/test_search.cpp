#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "burst/constructions.hpp"
#include "burst/search.hpp"

using namespace burst;

namespace {

std::vector<std::uint32_t> residues(const SplittingSequence& s) {
    std::vector<std::uint32_t> out;
    for (const auto& g : s.elems) out.push_back(g.coords[0]);
    return out;
}

}  // namespace

TEST_CASE("known findable instances") {
    const SearchReport r25 =
        search_splitting(BallSpec{4, 2, 1, 1, true}, AbelianGroup::cyclic(25));
    REQUIRE(r25.found.has_value());
    CHECK(is_perfect_splitting(BallSpec{4, 2, 1, 1, true}, *r25.found));

    const SearchReport r15 =
        search_splitting(BallSpec{3, 2, 1, 1, false}, AbelianGroup::cyclic(15));
    REQUIRE(r15.found.has_value());

    const SearchReport r7 =
        search_splitting(BallSpec{3, 2, 1, 0, true}, AbelianGroup::cyclic(7));
    REQUIRE(r7.found.has_value());
    CHECK(residues(*r7.found) == std::vector<std::uint32_t>{1, 2, 4});  // lex smallest
}

TEST_CASE("known exhausted instances") {
    const SearchReport r =
        search_splitting(BallSpec{5, 2, 2, 0, true}, AbelianGroup::cyclic(31));
    CHECK_FALSE(r.found.has_value());
    CHECK(r.nodes_visited > 0);
}

TEST_CASE("precondition: perfect regime only") {
    CHECK_THROWS_AS(search_splitting(BallSpec{3, 2, 1, 0, true}, AbelianGroup::cyclic(8)),
                    ParameterError);
}

TEST_CASE("nonexistence across all isomorphism classes") {
    CHECK(prove_nonexistence(BallSpec{5, 2, 2, 0, true}, 31));
    CHECK_FALSE(prove_nonexistence(BallSpec{3, 2, 2, 0, false}, 15));
    CHECK_FALSE(prove_nonexistence(BallSpec{3, 2, 1, 0, true}, 7));
    CHECK_THROWS_AS(prove_nonexistence(BallSpec{3, 2, 1, 0, true}, 9), ParameterError);
}

TEST_CASE("determinism and job independence") {
    const BallSpec spec{4, 2, 1, 1, true};
    const auto G = AbelianGroup::cyclic(25);
    const SearchReport a = search_splitting(spec, G);
    const SearchReport b = search_splitting(spec, G);
    REQUIRE(a.found.has_value());
    REQUIRE(b.found.has_value());
    CHECK(residues(*a.found) == residues(*b.found));

    SearchOptions parallel;
    parallel.jobs = 4;
    const SearchReport c = search_splitting(spec, G, parallel);
    REQUIRE(c.found.has_value());
    CHECK(residues(*a.found) == residues(*c.found));

    SearchOptions no_prune;
    no_prune.prune_unit_orbit = false;
    no_prune.prune_rotation = false;
    no_prune.jobs = 3;
    const SearchReport d = search_splitting(spec, G, no_prune);
    REQUIRE(d.found.has_value());
    CHECK(residues(*a.found) == residues(*d.found));
}

TEST_CASE("pruning safety on small orders") {
    // found/none outcome is unchanged by either pruning rule
    const std::vector<std::pair<BallSpec, std::uint64_t>> instances = {
        {BallSpec{4, 2, 1, 0, false}, 8},  {BallSpec{6, 2, 1, 0, false}, 12},
        {BallSpec{4, 2, 1, 0, true}, 9},   {BallSpec{7, 2, 1, 0, true}, 15},
        {BallSpec{3, 2, 1, 1, false}, 15}, {BallSpec{4, 2, 2, 0, false}, 21},
        {BallSpec{3, 2, 2, 0, true}, 19},  {BallSpec{4, 2, 1, 1, true}, 25},
        {BallSpec{5, 2, 2, 0, true}, 31},  // exhausted-none case
    };
    for (const auto& [spec, order] : instances) {
        INFO("ball ", format_ball_spec(spec), " order ", order);
        for (const AbelianGroup& G : enumerate_abelian_groups(order)) {
            bool outcome[2][2];
            for (int orbit = 0; orbit < 2; ++orbit)
                for (int rotation = 0; rotation < 2; ++rotation) {
                    SearchOptions opts;
                    opts.prune_unit_orbit = orbit == 1;
                    opts.prune_rotation = rotation == 1;
                    outcome[orbit][rotation] =
                        search_splitting(spec, G, opts).found.has_value();
                }
            CHECK(outcome[0][0] == outcome[1][1]);
            CHECK(outcome[0][0] == outcome[0][1]);
            CHECK(outcome[0][0] == outcome[1][0]);
        }
    }
}

TEST_CASE("agreement with the explicit constructions") {
    for (int n = 2; n <= 15; ++n) {
        INFO("noncyclic n = ", n);
        const SearchReport r = search_splitting(BallSpec{n, 2, 1, 0, false},
                                                AbelianGroup::cyclic(2 * n));
        CHECK(r.found.has_value());
    }
    for (int n : {4, 7, 10, 13}) {
        INFO("cyclic n = ", n);
        const SearchReport r = search_splitting(BallSpec{n, 2, 1, 0, true},
                                                AbelianGroup::cyclic(2 * n + 1));
        CHECK(r.found.has_value());
    }
}

TEST_CASE("node budget is a distinct outcome") {
    SearchOptions opts;
    opts.node_budget = 50;
    CHECK_THROWS_AS(
        search_splitting(BallSpec{5, 2, 2, 0, true}, AbelianGroup::cyclic(31), opts),
        ResourceError);
}

TEST_CASE("checkpoint and resume") {
    const std::string path = "/tmp/burst_checkpoint_test.txt";
    std::filesystem::remove(path);
    const BallSpec spec{5, 2, 2, 0, true};
    const auto G = AbelianGroup::cyclic(31);

    SearchOptions tight;
    tight.checkpoint_file = path;
    tight.checkpoint_interval = 100;
    tight.node_budget = 2000;
    CHECK_THROWS_AS(search_splitting(spec, G, tight), ResourceError);
    REQUIRE(std::filesystem::exists(path));

    SearchOptions resume;
    resume.checkpoint_file = path;
    const SearchReport resumed = search_splitting(spec, G, resume);
    CHECK_FALSE(resumed.found.has_value());
    CHECK_FALSE(std::filesystem::exists(path));  // cleaned up on completion

    // resuming a found case still returns the lexicographically smallest
    // (the find for this instance needs ~5e5 nodes, well past the budget)
    const BallSpec fspec{10, 2, 1, 1, false};
    const auto G57 = AbelianGroup::cyclic(57);
    SearchOptions tight2;
    tight2.checkpoint_file = path;
    tight2.checkpoint_interval = 500;
    tight2.node_budget = 5000;
    CHECK_THROWS_AS(search_splitting(fspec, G57, tight2), ResourceError);
    REQUIRE(std::filesystem::exists(path));
    SearchOptions resume2;
    resume2.checkpoint_file = path;
    const SearchReport r = search_splitting(fspec, G57, resume2);
    const SearchReport fresh = search_splitting(fspec, G57);
    REQUIRE(r.found.has_value());
    REQUIRE(fresh.found.has_value());
    CHECK(residues(*r.found) == residues(*fresh.found));
    CHECK(r.nodes_visited < fresh.nodes_visited);  // skipped the explored part

    // mismatched checkpoints are rejected
    {
        std::ofstream out(path);
        out << "ball n=3 b=2 kplus=1 kminus=0 cyclic=true\nZ7\n1\n";
    }
    SearchOptions wrong;
    wrong.checkpoint_file = path;
    CHECK_THROWS_AS(search_splitting(fspec, G57, wrong), ParameterError);
    std::filesystem::remove(path);
}

TEST_CASE("condition scans at reduced range") {
    const Table2Result s211 = reproduce_table2(Table2Row::S211, 200);
    CHECK(s211.bad == std::vector<std::uint64_t>{19, 43, 127});
    CHECK(s211.good == std::vector<std::uint64_t>{31, 67, 79, 103, 139, 151, 163, 199});

    CHECK(scan_good_q_220(200) ==
          std::vector<std::uint64_t>{19, 79, 103, 163, 181, 199});
}

TEST_CASE("witness tables verify") {
    const auto reports = verify_reference_rows(reference_rows_220(), /*with_search=*/true);
    CHECK(reports.size() == 4);
    for (const auto& r : reports) {
        CHECK(r.verified);
        REQUIRE(r.search_found.has_value());
        CHECK(*r.search_found);
    }
    CHECK(verify_reference_rows(reference_rows_noncyclic_211(), false).size() == 12);
    CHECK(verify_reference_rows(reference_rows_cyclic_211(), false).size() == 10);
}

TEST_CASE("prime power enumeration") {
    CHECK(prime_powers_in(2, 10) == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9});
    CHECK(prime_powers_in(19, 32) == std::vector<std::uint64_t>{19, 23, 25, 27, 29, 31, 32});
    CHECK_THROWS_AS(prime_powers_in(2, 1u << 21), ResourceError);
}
