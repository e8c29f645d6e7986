#pragma once

#include <cstdint>

#include "value.hpp"

namespace ngon {

// x_{n+2} = p x_{n+1} + q x_n with q != 0, anchored at x_s = a, x_{s+1} = b.
struct Order2Recurrence {
    std::int64_t p;
    std::int64_t q;
    std::uint64_t start_index;
    std::int64_t a;
    std::int64_t b;

    Order2Recurrence(std::int64_t p, std::int64_t q, std::uint64_t start_index,
                     std::int64_t a, std::int64_t b);
};

struct CharacteristicRoots {
    bool repeated;
    std::int64_t r1; // the larger root in the distinct case
    std::int64_t r2; // equals r1 when repeated
};

// Integer solutions of r^2 - p r - q = 0, via the integer square root of the
// discriminant p^2 + 4q. Throws non_integer_roots when the discriminant is
// negative, not a perfect square, or the roots overflow 64 bits.
CharacteristicRoots characteristic_roots(std::int64_t p, std::int64_t q);

// x_n = C1 r1^n + C2 r2^n, or (C1 + C2 n) r^n for a repeated root. The
// constants are exact rationals.
class ClosedFormSolution {
public:
    ClosedFormSolution(CharacteristicRoots roots, BigRat c1, BigRat c2,
                       std::uint64_t start_index);

    bool repeated() const noexcept { return roots_.repeated; }
    std::int64_t root1() const noexcept { return roots_.r1; }
    std::int64_t root2() const noexcept { return roots_.r2; }
    const BigRat& coeff1() const noexcept { return c1_; }
    const BigRat& coeff2() const noexcept { return c2_; }
    std::uint64_t start_index() const noexcept { return start_index_; }

private:
    CharacteristicRoots roots_;
    BigRat c1_;
    BigRat c2_;
    std::uint64_t start_index_;
};

// Determines C1, C2 from the two anchor values. Throws non_integer_roots
// (propagated) or degenerate_system when a zero root makes the 2x2 system
// singular at start_index > 0.
ClosedFormSolution solve_order2(const Order2Recurrence& rec);

// Evaluates the term at index n with exact rational arithmetic; the rational
// part must cancel, otherwise non_integer_result is thrown. Modular mode
// reduces the signed integer afterwards. Requires n >= start_index.
CountValue evaluate_solution(const ClosedFormSolution& sol, std::uint64_t n,
                             const CountMode& mode);

} // namespace ngon
