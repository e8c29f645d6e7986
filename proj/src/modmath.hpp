#pragma once

#include <cstdint>

#include "bigint.hpp"
#include "errors.hpp"

namespace ngon {

// Modulus M with 1 <= M < 2^31, so the product of two residues always fits
// a 64-bit intermediate. M = 1 is accepted; every residue is then 0.
class Modulus {
public:
    explicit Modulus(std::uint32_t value);

    std::uint32_t value() const noexcept { return value_; }

    friend bool operator==(Modulus lhs, Modulus rhs) noexcept = default;

private:
    std::uint32_t value_;
};

// Canonical representative in [0, M).
class Residue {
public:
    Residue(std::uint32_t value, Modulus modulus);

    std::uint32_t value() const noexcept { return value_; }
    Modulus modulus() const noexcept { return modulus_; }

    friend bool operator==(Residue lhs, Residue rhs) noexcept = default;

private:
    std::uint32_t value_;
    Modulus modulus_;
};

// Unique r in [0, M) with r == x (mod M); correct for negative x by adding
// one multiple of M after the truncating remainder. Requires |x| < 2^62 so
// callers can form x as a product or difference of residues without overflow.
Residue reduce_signed(std::int64_t x, Modulus m);

// (a * b) mod M through a 64-bit intermediate. Throws modulus_mismatch if
// the operands disagree on M.
Residue mod_mul(Residue a, Residue b);

Residue mod_add(Residue a, Residue b);

// (a - b) mod M, adding M before the reduction so the intermediate stays
// non-negative.
Residue mod_sub(Residue a, Residue b);

// base^exp mod M by square-and-multiply, O(log exp) multiplications.
// exp = 0 yields 1 mod M, which is 0 when M = 1.
Residue mod_pow(Residue base, std::uint64_t exp);

// x mod M for an arbitrary-precision natural x, streaming over 32-bit
// chunks of x so no intermediate exceeds 64 bits. Requires x >= 0.
Residue mod_from_natural(const BigInt& x, Modulus m);

// Signed variant of mod_from_natural.
Residue mod_from_integer(const BigInt& x, Modulus m);

} // namespace ngon
