#pragma once

#include <stdexcept>
#include <string>

namespace circpat {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pattern argument is not a standard permutation (entries != {1..m}).
struct InvalidPatternError : Error {
    using Error::Error;
};

// Malformed word/pattern notation or invalid word contents.
struct ParseError : Error {
    using Error::Error;
};

// Requested enumeration size exceeds the configured cap.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Series division by a divisor whose constant term is zero.
struct SingularDivisionError : Error {
    using Error::Error;
};

// Series division by a divisor whose constant term is not the unit 1 or -1.
struct UnsupportedDivisionError : Error {
    using Error::Error;
};

// A series operation's constant-term precondition was violated.
struct SeriesDomainError : Error {
    using Error::Error;
};

// The linear-to-circular transfer needs a 1-initial pattern in the symmetry
// orbit and none exists.
struct TheoremNotApplicableError : Error {
    using Error::Error;
};

// A pattern-specific generating-function route does not cover this pattern.
struct PatternNotSupportedError : Error {
    using Error::Error;
};

}  // namespace circpat
