#ifndef ILPQ_ERROR_HPP
#define ILPQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ilpq {

// Base class for everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structure could not be built from the given input (e.g. empty text).
class BuildError : public Error {
public:
    using Error::Error;
};

// A position, range or center index lies outside the valid domain.
class RangeError : public Error {
public:
    using Error::Error;
};

// An operation was applied to a node it is not defined for (ε, ⊥).
class DomainError : public Error {
public:
    using Error::Error;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An invariant that the algorithm guarantees was observed broken.
class InternalError : public Error {
public:
    using Error::Error;
};

// A serialized index is malformed, truncated, or of an unknown version.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace ilpq

#endif  // ILPQ_ERROR_HPP
