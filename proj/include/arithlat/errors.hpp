#pragma once

#include <stdexcept>
#include <string>

namespace arithlat {

// Malformed input: wrong dimensions, nonpositive entries, invalid sizes,
// non-bijective permutations, unsupported family combinations.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a hard documented cap (principal-minor dimension,
// oracle search-space size, walk enumeration volume, Catalan index).
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace arithlat
