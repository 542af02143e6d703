#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "burst/errorball.hpp"
#include "burst/groups.hpp"

namespace burst::cli {

// Plain-text code description: line 1 "ball n=.. b=.. kplus=.. kminus=..
// cyclic=..", line 2 group notation, line 3 splitting sequence.
// Parse-then-print is byte-identical.
struct CodeSpec {
    BallSpec spec;
    SplittingSequence splitting;
};

CodeSpec parse_code_spec(std::istream& in);
CodeSpec load_code_spec(const std::string& path);
std::string format_code_spec(const CodeSpec& cs);

// Dispatches {ball, verify, construct, search, tables, decode, simulate}.
// Exit codes: 0 success, 1 verification failure, 2 unsupported parameters,
// 3 search/none found, 4 resource, 5 parse error, 64 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burst::cli
