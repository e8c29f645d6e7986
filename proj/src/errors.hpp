#pragma once

#include <stdexcept>
#include <string>

namespace ngon {

// An instance the chosen operation cannot handle exactly. Callers may fall
// back to a different strategy; the CLI maps these to exit code 3.
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumerating k^n assignments would exceed the configured cap.
class oracle_too_large : public unsupported_error {
public:
    using unsupported_error::unsupported_error;
};

// The characteristic equation has no integer roots (negative or
// non-perfect-square discriminant).
class non_integer_roots : public unsupported_error {
public:
    using unsupported_error::unsupported_error;
};

// The 2x2 system for the solution constants is singular at the given
// start index.
class degenerate_system : public unsupported_error {
public:
    using unsupported_error::unsupported_error;
};

// Violation of an internal exactness guarantee. Mapped to exit code 4.
class internal_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact rational evaluation failed to cancel to an integer.
class non_integer_result : public internal_error {
public:
    using internal_error::internal_error;
};

// Two residues from different moduli were combined.
class modulus_mismatch : public internal_error {
public:
    using internal_error::internal_error;
};

} // namespace ngon
