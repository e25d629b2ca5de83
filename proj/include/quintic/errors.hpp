#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

// Base class for every failure mode the library reports deliberately.
// Anything else escaping a public entry point is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-contract input (wrong degree, non-monic where monic
// is required, reducible polynomial passed to a field-level routine, ...).
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// Integer factorization gave up within its budget.  The message names the
// remaining unfactored cofactor so the caller can retry with more effort.
struct FactorizationTimeoutError : Error {
    explicit FactorizationTimeoutError(const std::string& msg) : Error(msg) {}
};

// The splitting-type computation hit a configuration its first-order
// machinery cannot separate (repeated residual factor on a fractional
// slope, or refinement did not terminate within the round cap).
struct IrregularSplittingError : Error {
    explicit IrregularSplittingError(const std::string& msg) : Error(msg) {}
};

// A p-adic computation could not be decided at the working precision.
// Callers are expected to retry with more digits.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// Hensel-style lifting was asked to start from a configuration that does
// not lift (non-coprime factors, vanishing derivative).
struct LiftingObstructionError : Error {
    explicit LiftingObstructionError(const std::string& msg) : Error(msg) {}
};

// The requested local computation is not available at this prime
// (wild ramification outside the implemented range).
struct UnsupportedPrimeError : Error {
    explicit UnsupportedPrimeError(const std::string& msg) : Error(msg) {}
};

// A bounded search ran out of room.  The message records the bound.
struct SearchExhaustedError : Error {
    explicit SearchExhaustedError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace quintic
