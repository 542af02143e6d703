#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burst/constructions.hpp"
#include "burst/errorball.hpp"
#include "burst/errors.hpp"
#include "burst/groups.hpp"

namespace burst {

struct SearchOptions {
    // (a) incremental distinctness is always on; (b) and (c) are toggleable
    // for the pruning-safety comparisons.
    bool prune_unit_orbit = true;  // first element ranges over unit-orbit reps (cyclic groups)
    bool prune_rotation = true;    // first element minimal in the sequence (cyclic balls)
    unsigned jobs = 1;             // root-level value shards; result independent of jobs
    std::uint64_t node_budget = 1'000'000'000;
    std::string checkpoint_file;   // resumable progress, single-job runs only
    std::uint64_t checkpoint_interval = 10'000'000;
};

struct SearchReport {
    BallSpec spec;
    AbelianGroup group;
    // engaged iff a splitting was found; exhausted_none otherwise
    std::optional<SplittingSequence> found;
    std::uint64_t nodes_visited = 0;
    std::chrono::nanoseconds wall_time{0};
};

// Backtracking over coordinates left to right, group elements in canonical
// word order; returns the lexicographically smallest splitting sequence in
// the pruned space, or exhausted_none after a complete search. Requires
// |ball| = |G|.
SearchReport search_splitting(const BallSpec& spec, const AbelianGroup& group,
                              const SearchOptions& opts = {});

// True when every Abelian group of the given order is exhausted with no
// splitting found.
bool prove_nonexistence(const BallSpec& spec, std::uint64_t order,
                        const SearchOptions& opts = {});

// The four finite-field condition scans: prime powers from e(2b-1)+1 up to
// q_max in the residue class each construction supports, partitioned by
// whether some primitive element satisfies the condition.
enum class Table2Row {
    S211,  // s_alpha, cyclic 2-burst (1,1)
    R211,  // r_alpha, cyclic 2-burst (1,1)
    S310,  // s_alpha, cyclic 3-burst (1,0)
    S311,  // s_alpha, cyclic 3-burst (1,1)
};

struct Table2Result {
    Table2Row row;
    std::uint64_t q_max = 0;
    std::vector<std::uint64_t> good, bad;
};

Table2Result reproduce_table2(Table2Row row, std::uint64_t q_max);

std::string table2_row_name(Table2Row row);

// Prime powers q = 1 (mod 6) up to q_max admitting a primitive alpha for the
// 2-burst (2,0) condition.
std::vector<std::uint64_t> scan_good_q_220(std::uint64_t q_max);

// Known splitting-sequence witnesses, re-verified by the table reports.
struct ReferenceRow {
    BallSpec spec;
    std::uint64_t group_order = 0;
    std::vector<std::uint32_t> seq;
};

const std::vector<ReferenceRow>& reference_rows_220();           // both ball shapes, n = 3, 4
const std::vector<ReferenceRow>& reference_rows_cyclic_211();    // Z_{6n+1}, n in [4,14] minus 7
const std::vector<ReferenceRow>& reference_rows_noncyclic_211(); // Z_{6n-3}, n in [3,14]

struct ReferenceRowReport {
    ReferenceRow row;
    bool verified = false;
    std::optional<bool> search_found;  // engaged when the search confirmation ran
};

// Verifies witness rows as perfect splittings and (optionally) confirms
// existence independently by search. Throws InternalError naming the first
// failing row.
std::vector<ReferenceRowReport> verify_reference_rows(const std::vector<ReferenceRow>& rows,
                                                      bool with_search);

// All three witness tables at once.
std::vector<ReferenceRowReport> reproduce_tables345(bool with_search = true);

// All prime powers in [lo, hi], ascending.
std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace burst
