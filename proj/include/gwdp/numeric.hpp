#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gwdp {

// All invariant arithmetic is exact. Values are arbitrary-precision integers;
// the only divisions are the final per-class solves, each guarded by an
// integrality check.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base of the library's exception hierarchy.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input: zero classes, rank mismatches, malformed expressions,
// unsatisfied preconditions. CLI maps these to exit code 2.
struct DomainError : Error {
    using Error::Error;
};

// A class vector that does not belong to the surface's lattice.
struct InvalidClassError : DomainError {
    using DomainError::DomainError;
};

// Text that does not match the class-expression grammar; carries the
// offending position.
struct ParseError : DomainError {
    ParseError(const std::string& what, std::size_t position)
        : DomainError(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// A WDVV relation requested below its kappa threshold.
struct RelationUnavailableError : DomainError {
    using DomainError::DomainError;
};

// Internal-consistency failures: underdetermined or unseeded classes,
// non-integral quotients, conflicting cache values. CLI maps these to exit
// code 3.
struct EngineError : Error {
    using Error::Error;
};

}  // namespace gwdp
