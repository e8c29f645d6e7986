#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ngon {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_exact(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(); }

// Rationals print as "num/den", or just "num" once the denominator is 1.
inline std::string to_decimal(const BigRat& x) { return x.get_str(); }

} // namespace ngon
