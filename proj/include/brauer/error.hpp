#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brauer {

using i64 = std::int64_t;

enum class ErrorKind {
    NonAssociative,
    NoIdentity,
    NoInverse,
    OrderBound,
    InvalidAction,
    NotASubgroup,
    NotStable,
    NotEquivariant,
    MismatchedBase,
    PreconditionViolated,
    NotACocycle,
    CapExceeded,
    NotSurjective,
    InvalidCocycle,
    InvalidDatum,
    ParseError,
    ValidationError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, std::string what, std::string witness = {})
        : std::runtime_error(what), kind_(k), witness_(std::move(witness)) {}
    ErrorKind kind() const { return kind_; }
    const std::string& witness() const { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

[[noreturn]] inline void fail(ErrorKind k, std::string what, std::string witness = {})
{
    throw Error(k, std::move(what), std::move(witness));
}

} // namespace brauer
