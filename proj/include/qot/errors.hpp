#ifndef QOT_ERRORS_HPP
#define QOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (topology files, CSV rows, config files).
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input that violates a domain invariant.
struct ValidationError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Spectrum slot already owned by another lightpath.
struct ConflictError : Error {
    using Error::Error;
};

struct NotFoundError : Error {
    using Error::Error;
};

struct NoPathError : Error {
    using Error::Error;
};

}  // namespace qot

#endif
