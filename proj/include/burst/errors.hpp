#pragma once

#include <stdexcept>
#include <string>

namespace burst {

// Invalid arguments: wrong lengths, elements outside their group, etc.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Valid request outside the supported regime (e.g. a length the cyclic
// construction does not cover). Kept distinct from ParameterError so the
// CLI can exit with a dedicated status.
struct UnsupportedError : ParameterError {
    using ParameterError::ParameterError;
};

// A configured budget (enumeration size, search nodes, field size) was hit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input: group notation, sequences, code spec files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant; reaching this is a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace burst
