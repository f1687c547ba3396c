#ifndef TREELIFT_ERRORS_HPP
#define TREELIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treelift {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

// Precondition violation: dimension mismatch, unknown label, bad index.
struct DomainError : Error {
    using Error::Error;
};

// Exact division left a remainder. When raised while checking a theorem
// this is an identity violation, not a numeric bug.
struct InexactDivision : Error {
    using Error::Error;
};

// A configured size cap would be exceeded (lift size, walk length).
struct CapExceeded : Error {
    using Error::Error;
};

} // namespace treelift

#endif
