#include "modmath.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace ngon {

namespace {

constexpr std::uint32_t kModulusLimit = 1u << 31; // exclusive

void require_same_modulus(Residue a, Residue b) {
    if (a.modulus() != b.modulus()) {
        throw modulus_mismatch("residues have different moduli: " +
                               std::to_string(a.modulus().value()) + " vs " +
                               std::to_string(b.modulus().value()));
    }
}

} // namespace

Modulus::Modulus(std::uint32_t value) : value_(value) {
    if (value < 1 || value >= kModulusLimit) {
        throw std::invalid_argument("modulus must satisfy 1 <= M < 2^31, got " +
                                    std::to_string(value));
    }
}

Residue::Residue(std::uint32_t value, Modulus modulus)
    : value_(value), modulus_(modulus) {
    if (value >= modulus.value()) {
        throw std::invalid_argument("residue " + std::to_string(value) +
                                    " not reduced mod " +
                                    std::to_string(modulus.value()));
    }
}

Residue reduce_signed(std::int64_t x, Modulus m) {
    assert(x > -(std::int64_t{1} << 62) && x < (std::int64_t{1} << 62));
    std::int64_t r = x % static_cast<std::int64_t>(m.value());
    if (r < 0) {
        r += m.value();
    }
    return Residue(static_cast<std::uint32_t>(r), m);
}

Residue mod_mul(Residue a, Residue b) {
    require_same_modulus(a, b);
    // a, b < 2^31, so the product fits a uint64_t exactly.
    std::uint64_t p = std::uint64_t{a.value()} * b.value();
    return Residue(static_cast<std::uint32_t>(p % a.modulus().value()),
                   a.modulus());
}

Residue mod_add(Residue a, Residue b) {
    require_same_modulus(a, b);
    std::uint64_t s = std::uint64_t{a.value()} + b.value();
    if (s >= a.modulus().value()) {
        s -= a.modulus().value();
    }
    return Residue(static_cast<std::uint32_t>(s), a.modulus());
}

Residue mod_sub(Residue a, Residue b) {
    require_same_modulus(a, b);
    std::uint64_t s = std::uint64_t{a.value()} + a.modulus().value() - b.value();
    if (s >= a.modulus().value()) {
        s -= a.modulus().value();
    }
    return Residue(static_cast<std::uint32_t>(s), a.modulus());
}

Residue mod_pow(Residue base, std::uint64_t exp) {
    const Modulus m = base.modulus();
    Residue result(static_cast<std::uint32_t>(1 % m.value()), m);
    Residue square = base;
    while (exp > 0) {
        if (exp & 1) {
            result = mod_mul(result, square);
        }
        square = mod_mul(square, square);
        exp >>= 1;
    }
    return result;
}

Residue mod_from_natural(const BigInt& x, Modulus m) {
    if (sgn(x) < 0) {
        throw std::invalid_argument("mod_from_natural requires x >= 0");
    }
    // Horner evaluation over 32-bit halves of the limbs, most significant
    // first: r < 2^31, so (r << 32) + chunk < 2^63 + 2^32 stays in range.
    const std::uint64_t mv = m.value();
    std::uint64_t r = 0;
    const std::size_t limbs = mpz_size(x.get_mpz_t());
    static_assert(GMP_NUMB_BITS == 64, "expects 64-bit GMP limbs");
    for (std::size_t i = limbs; i-- > 0;) {
        const std::uint64_t limb = mpz_getlimbn(x.get_mpz_t(), i);
        r = ((r << 32) | (limb >> 32)) % mv;
        r = ((r << 32) | (limb & 0xffffffffu)) % mv;
    }
    return Residue(static_cast<std::uint32_t>(r), m);
}

Residue mod_from_integer(const BigInt& x, Modulus m) {
    if (sgn(x) >= 0) {
        return mod_from_natural(x, m);
    }
    const Residue pos = mod_from_natural(BigInt(-x), m);
    return mod_sub(Residue(0, m), pos);
}

} // namespace ngon
