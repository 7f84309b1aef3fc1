#ifndef SYMCRIT_ERRORS_HPP
#define SYMCRIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symcrit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class GroupMismatch : public Error {
public:
    GroupMismatch() : Error("objects live on different groups") {}
    explicit GroupMismatch(const std::string& what) : Error(what) {}
};

/// Raised when a closure grows past its cap, which usually means the
/// generators do not generate a finite group.
class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("group closure exceeded cap of " + std::to_string(cap) + " elements") {}
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class Unclassifiable : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class ReducibleInput : public Error {
public:
    ReducibleInput() : Error("input representation is reducible") {}
};

class NotACube : public Error {
public:
    NotACube() : Error("matrix is not a scalar multiple of a symmetric cube") {}
};

class ConstructionFailure : public Error {
public:
    using Error::Error;
};

class PoolExhausted : public Error {
public:
    PoolExhausted() : Error("no companion representation found in the candidate pool") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace symcrit

#endif  // SYMCRIT_ERRORS_HPP
