#pragma once

#include <stdexcept>
#include <string>

namespace hpisot {

// Root of every error raised by the library.  The CLI maps ParseError and
// ValidationError to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation was called on input outside its domain (non-primitive,
// wrong degree, lattice hypothesis not established, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Word length / iteration caps exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Certified numerics could not settle a question within the precision cap.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// A check that must hold for consistent input failed; indicates a bug or a
// contradiction with the underlying theory.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace hpisot
