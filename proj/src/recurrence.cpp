#include "recurrence.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ngon {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 integer_sqrt(uint128 x) {
    if (x == 0) {
        return 0;
    }
    auto r = static_cast<uint128>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) {
        --r;
    }
    while ((r + 1) * (r + 1) <= x) {
        ++r;
    }
    return r;
}

std::int64_t narrow_root(int128 r) {
    if (r < std::numeric_limits<std::int64_t>::min() ||
        r > std::numeric_limits<std::int64_t>::max()) {
        throw non_integer_roots("characteristic root does not fit 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

BigRat make_ratio(const BigInt& num, const BigInt& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Order2Recurrence::Order2Recurrence(std::int64_t p, std::int64_t q,
                                   std::uint64_t start_index, std::int64_t a,
                                   std::int64_t b)
    : p(p), q(q), start_index(start_index), a(a), b(b) {
    if (q == 0) {
        throw std::invalid_argument("order-2 recurrence requires q != 0");
    }
}

CharacteristicRoots characteristic_roots(std::int64_t p, std::int64_t q) {
    const int128 disc = int128{p} * p + 4 * int128{q};
    if (disc < 0) {
        throw non_integer_roots("discriminant p^2 + 4q is negative");
    }
    const uint128 sqrt_disc = integer_sqrt(static_cast<uint128>(disc));
    if (static_cast<int128>(sqrt_disc * sqrt_disc) != disc) {
        throw non_integer_roots("discriminant p^2 + 4q is not a perfect square");
    }
    const auto s = static_cast<int128>(sqrt_disc);
    // disc == p^2 (mod 2), so s and p share parity and both halves divide.
    assert((int128{p} + s) % 2 == 0);
    if (s == 0) {
        const std::int64_t r = narrow_root(int128{p} / 2);
        return CharacteristicRoots{true, r, r};
    }
    return CharacteristicRoots{false, narrow_root((int128{p} + s) / 2),
                               narrow_root((int128{p} - s) / 2)};
}

ClosedFormSolution::ClosedFormSolution(CharacteristicRoots roots, BigRat c1,
                                       BigRat c2, std::uint64_t start_index)
    : roots_(roots), c1_(std::move(c1)), c2_(std::move(c2)),
      start_index_(start_index) {}

ClosedFormSolution solve_order2(const Order2Recurrence& rec) {
    const CharacteristicRoots roots = characteristic_roots(rec.p, rec.q);
    const std::uint64_t s = rec.start_index;
    if ((roots.r1 == 0 || roots.r2 == 0) && s > 0) {
        // Unreachable for q != 0 (a zero root forces q = 0); kept so the
        // solver stays total over raw root pairs.
        throw degenerate_system(
            "zero characteristic root makes the system singular at start index " +
            std::to_string(s));
    }
    const BigInt a(static_cast<long>(rec.a));
    const BigInt b(static_cast<long>(rec.b));
    if (roots.repeated) {
        // (C1 + C2 n) r^n anchored at n = s and n = s + 1.
        const BigInt r(static_cast<long>(roots.r1));
        const BigInt rs = pow_exact(r, s);
        const BigRat at_s = make_ratio(a, rs);
        const BigRat at_s1 = make_ratio(b, rs * r);
        const BigRat c2 = at_s1 - at_s;
        const BigRat c1 = at_s - BigRat(static_cast<unsigned long>(s)) * c2;
        return ClosedFormSolution(roots, c1, c2, s);
    }
    // Cramer on C1 r1^s + C2 r2^s = a, C1 r1^{s+1} + C2 r2^{s+1} = b:
    //   C1 = (a r2 - b) / (r1^s (r2 - r1)),  C2 = (b - a r1) / (r2^s (r2 - r1)).
    const BigInt r1(static_cast<long>(roots.r1));
    const BigInt r2(static_cast<long>(roots.r2));
    const BigInt spread = r2 - r1;
    const BigRat c1 = make_ratio(a * r2 - b, pow_exact(r1, s) * spread);
    const BigRat c2 = make_ratio(b - a * r1, pow_exact(r2, s) * spread);
    return ClosedFormSolution(roots, c1, c2, s);
}

CountValue evaluate_solution(const ClosedFormSolution& sol, std::uint64_t n,
                             const CountMode& mode) {
    if (n < sol.start_index()) {
        throw std::invalid_argument(
            "term index " + std::to_string(n) + " precedes start index " +
            std::to_string(sol.start_index()));
    }
    BigRat value;
    if (sol.repeated()) {
        const BigInt rn = pow_exact(BigInt(static_cast<long>(sol.root1())), n);
        value = (sol.coeff1() +
                 sol.coeff2() * BigRat(static_cast<unsigned long>(n))) *
                BigRat(rn);
    } else {
        const BigInt r1n = pow_exact(BigInt(static_cast<long>(sol.root1())), n);
        const BigInt r2n = pow_exact(BigInt(static_cast<long>(sol.root2())), n);
        value = sol.coeff1() * BigRat(r1n) + sol.coeff2() * BigRat(r2n);
    }
    value.canonicalize();
    if (value.get_den() != 1) {
        throw non_integer_result("term " + std::to_string(n) +
                                 " evaluated to non-integer " +
                                 value.get_str());
    }
    BigInt integral = value.get_num();
    if (const auto* mod = std::get_if<Modular>(&mode)) {
        return mod_from_integer(integral, mod->modulus);
    }
    return integral;
}

} // namespace ngon
