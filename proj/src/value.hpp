#pragma once

#include <string>
#include <variant>

#include "bigint.hpp"
#include "modmath.hpp"

namespace ngon {

// Exact arbitrary-precision counting vs. residues modulo M.
struct Exact {};

struct Modular {
    Modulus modulus;
};

using CountMode = std::variant<Exact, Modular>;

// A computed count: a non-negative big integer in exact mode, a residue in
// modular mode.
using CountValue = std::variant<BigInt, Residue>;

inline bool is_modular(const CountMode& mode) {
    return std::holds_alternative<Modular>(mode);
}

inline std::string value_to_string(const CountValue& v) {
    if (const auto* big = std::get_if<BigInt>(&v)) {
        return to_decimal(*big);
    }
    return std::to_string(std::get<Residue>(v).value());
}

} // namespace ngon
