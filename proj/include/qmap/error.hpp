#pragma once

#include <stdexcept>
#include <string>

namespace qmap {

/// Base class for all errors raised by the mapper library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed circuit text (bad header, unknown gate, bad operand, ...).
struct ParseError : Error {
    using Error::Error;
};

/// Invalid or inconsistent hardware configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Impossible mapping request (disconnected operands, too many qubits, ...).
struct RouteError : Error {
    using Error::Error;
};

/// Simulator misuse (qubit count over the cap, measurement in a unitary, ...).
struct OracleError : Error {
    using Error::Error;
};

/// An internal consistency check failed on an otherwise complete result
/// (illegal schedule, failed equivalence); the CLI maps this to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace qmap
