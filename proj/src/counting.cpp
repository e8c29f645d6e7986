#include "counting.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ngon {

namespace {

constexpr std::uint64_t kMaxColorCount = (std::uint64_t{1} << 63) - 1;

template <class F>
CountOutcome timed(StrategyId id, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CountValue value = body();
    const auto stop = std::chrono::steady_clock::now();
    return CountOutcome{id, std::move(value),
                        std::chrono::duration_cast<std::chrono::nanoseconds>(
                            stop - start)};
}

// Residues of k, k-1 and k-2; correct for any k >= 0, including k < 2 and
// k >= M.
struct ModularPalette {
    Residue k;
    Residue k1;
    Residue k2;

    ModularPalette(std::uint64_t color_count, Modulus m)
        : k(static_cast<std::uint32_t>(color_count % m.value()), m),
          k1(reduce_signed(static_cast<std::int64_t>(k.value()) - 1, m)),
          k2(reduce_signed(static_cast<std::int64_t>(k.value()) - 2, m)) {}

    Residue base2() const { return mod_mul(k, k1); }           // k(k-1)
    Residue base3() const { return mod_mul(base2(), k2); }     // k(k-1)(k-2)
};

struct ExactPalette {
    BigInt k;
    BigInt k1;
    BigInt k2;

    explicit ExactPalette(std::uint64_t color_count)
        : k(static_cast<unsigned long>(color_count)), k1(k - 1), k2(k - 2) {}

    BigInt base2() const { return k * k1; }
    BigInt base3() const { return k * k1 * k2; }
};

// 2x2 matrix power over a pluggable ring, for the companion matrix of the
// order-2 recurrence.

struct ExactRing {
    using value_type = BigInt;
    BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
    BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
    BigInt zero() const { return BigInt(0); }
    BigInt one() const { return BigInt(1); }
};

struct ModularRing {
    Modulus m;
    using value_type = Residue;
    Residue mul(Residue a, Residue b) const { return mod_mul(a, b); }
    Residue add(Residue a, Residue b) const { return mod_add(a, b); }
    Residue zero() const { return Residue(0, m); }
    Residue one() const {
        return Residue(static_cast<std::uint32_t>(1 % m.value()), m);
    }
};

template <class Ring>
struct Mat2 {
    using T = typename Ring::value_type;
    T a00, a01, a10, a11;
};

template <class Ring>
Mat2<Ring> mat_mul(const Mat2<Ring>& x, const Mat2<Ring>& y, const Ring& r) {
    return Mat2<Ring>{
        r.add(r.mul(x.a00, y.a00), r.mul(x.a01, y.a10)),
        r.add(r.mul(x.a00, y.a01), r.mul(x.a01, y.a11)),
        r.add(r.mul(x.a10, y.a00), r.mul(x.a11, y.a10)),
        r.add(r.mul(x.a10, y.a01), r.mul(x.a11, y.a11)),
    };
}

template <class Ring>
Mat2<Ring> mat_pow(Mat2<Ring> base, std::uint64_t exp, const Ring& r) {
    Mat2<Ring> result{r.one(), r.zero(), r.zero(), r.one()};
    while (exp > 0) {
        if (exp & 1) {
            result = mat_mul(result, base, r);
        }
        base = mat_mul(base, base, r);
        exp >>= 1;
    }
    return result;
}

std::uint64_t enumerate_proper(std::uint64_t n, std::uint64_t k) {
    // Caller has bounded k^n, so for k >= 2 the vector below is tiny.
    if (k == 0) {
        return 0;
    }
    if (k == 1) {
        // The single all-same assignment always repeats on an adjacency.
        return 0;
    }
    Coloring c{std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    std::uint64_t proper = 0;
    for (;;) {
        if (is_proper(c)) {
            ++proper;
        }
        std::size_t pos = 0;
        while (pos < c.colors.size() && ++c.colors[pos] == k) {
            c.colors[pos] = 0;
            ++pos;
        }
        if (pos == c.colors.size()) {
            break;
        }
    }
    return proper;
}

} // namespace

CycleInstance::CycleInstance(std::uint64_t vertex_count,
                             std::uint64_t color_count)
    : vertex_count_(vertex_count), color_count_(color_count) {
    if (vertex_count < 2 || vertex_count > kMaxVertexCount) {
        throw std::invalid_argument("vertex count must be in [2, 10^18], got " +
                                    std::to_string(vertex_count));
    }
    if (color_count > kMaxColorCount) {
        throw std::invalid_argument("color count must be below 2^63, got " +
                                    std::to_string(color_count));
    }
}

std::string_view strategy_name(StrategyId id) {
    switch (id) {
        case StrategyId::BruteForce: return "brute-force";
        case StrategyId::Conventional: return "conventional";
        case StrategyId::Proposed: return "proposed";
        case StrategyId::ClosedForm: return "closed-form";
        case StrategyId::MatrixPower: return "matrix-power";
    }
    return "unknown";
}

std::optional<StrategyId> strategy_from_name(std::string_view name) {
    for (StrategyId id : kAllStrategies) {
        if (strategy_name(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

bool is_proper(const Coloring& c) {
    const std::size_t n = c.colors.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (c.colors[i] == c.colors[(i + 1) % n]) {
            return false;
        }
    }
    return true;
}

std::optional<std::uint64_t> assignments_within_cap(std::uint64_t k,
                                                    std::uint64_t n,
                                                    std::uint64_t cap) {
    if (k == 0) {
        return 0;
    }
    if (k == 1) {
        return 1 <= cap ? std::optional<std::uint64_t>{1} : std::nullopt;
    }
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (total > cap / k) {
            return std::nullopt;
        }
        total *= k;
    }
    return total <= cap ? std::optional<std::uint64_t>{total} : std::nullopt;
}

CountOutcome count_brute_force(const CycleInstance& inst, const CountMode& mode,
                               std::uint64_t cap) {
    const std::uint64_t n = inst.vertex_count();
    const std::uint64_t k = inst.color_count();
    if (!assignments_within_cap(k, n, cap)) {
        throw oracle_too_large("k^n exceeds the enumeration cap of " +
                               std::to_string(cap) + " (n=" + std::to_string(n) +
                               ", k=" + std::to_string(k) + ")");
    }
    return timed(StrategyId::BruteForce, [&]() -> CountValue {
        const std::uint64_t proper = enumerate_proper(n, k);
        if (const auto* mod = std::get_if<Modular>(&mode)) {
            const Modulus m = mod->modulus;
            return Residue(static_cast<std::uint32_t>(proper % m.value()), m);
        }
        return BigInt(static_cast<unsigned long>(proper));
    });
}

CountOutcome count_conventional(const CycleInstance& inst,
                                const CountMode& mode) {
    const std::uint64_t n = inst.vertex_count();
    const std::uint64_t k = inst.color_count();
    if (const auto* mod = std::get_if<Modular>(&mode)) {
        const Modulus m = mod->modulus;
        return timed(StrategyId::Conventional, [&]() -> CountValue {
            const ModularPalette pal(k, m);
            if (n == 2) {
                return pal.base2();
            }
            Residue p = pal.base3();
            Residue power = mod_pow(pal.k1, 3); // (k-1)^{i-1} for i = 4
            for (std::uint64_t i = 4; i <= n; ++i) {
                p = mod_sub(mod_mul(pal.k, power), p);
                power = mod_mul(power, pal.k1);
            }
            return p;
        });
    }
    return timed(StrategyId::Conventional, [&]() -> CountValue {
        const ExactPalette pal(k);
        if (n == 2) {
            return pal.base2();
        }
        BigInt p = pal.base3();
        BigInt power = pal.k1 * pal.k1 * pal.k1;
        for (std::uint64_t i = 4; i <= n; ++i) {
            p = pal.k * power - p;
            power *= pal.k1;
        }
        return p;
    });
}

CountOutcome count_proposed(const CycleInstance& inst, const CountMode& mode) {
    const std::uint64_t n = inst.vertex_count();
    const std::uint64_t k = inst.color_count();
    if (const auto* mod = std::get_if<Modular>(&mode)) {
        const Modulus m = mod->modulus;
        return timed(StrategyId::Proposed, [&]() -> CountValue {
            const ModularPalette pal(k, m);
            Residue prev = pal.base2();
            if (n == 2) {
                return prev;
            }
            Residue cur = pal.base3();
            for (std::uint64_t i = 4; i <= n; ++i) {
                Residue next =
                    mod_add(mod_mul(pal.k2, cur), mod_mul(pal.k1, prev));
                prev = cur;
                cur = next;
            }
            return cur;
        });
    }
    return timed(StrategyId::Proposed, [&]() -> CountValue {
        const ExactPalette pal(k);
        BigInt prev = pal.base2();
        if (n == 2) {
            return prev;
        }
        BigInt cur = pal.base3();
        for (std::uint64_t i = 4; i <= n; ++i) {
            BigInt next = pal.k2 * cur + pal.k1 * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    });
}

CountOutcome count_closed_form(const CycleInstance& inst,
                               const CountMode& mode) {
    const std::uint64_t n = inst.vertex_count();
    const std::uint64_t k = inst.color_count();
    if (const auto* mod = std::get_if<Modular>(&mode)) {
        const Modulus m = mod->modulus;
        return timed(StrategyId::ClosedForm, [&]() -> CountValue {
            const ModularPalette pal(k, m);
            const Residue power = mod_pow(pal.k1, n);
            return (n % 2 == 0) ? mod_add(power, pal.k1)
                                : mod_sub(power, pal.k1);
        });
    }
    return timed(StrategyId::ClosedForm, [&]() -> CountValue {
        const ExactPalette pal(k);
        BigInt value = pow_exact(pal.k1, n);
        if (n % 2 == 0) {
            value += pal.k1;
        } else {
            value -= pal.k1;
        }
        return value;
    });
}

CountOutcome count_matrix_power(const CycleInstance& inst,
                                const CountMode& mode) {
    const std::uint64_t n = inst.vertex_count();
    const std::uint64_t k = inst.color_count();
    if (const auto* mod = std::get_if<Modular>(&mode)) {
        const Modulus m = mod->modulus;
        return timed(StrategyId::MatrixPower, [&]() -> CountValue {
            const ModularPalette pal(k, m);
            if (n == 2) {
                return pal.base2();
            }
            if (n == 3) {
                return pal.base3();
            }
            const ModularRing ring{m};
            const Mat2<ModularRing> companion{pal.k2, pal.k1, ring.one(),
                                              ring.zero()};
            const auto advanced = mat_pow(companion, n - 3, ring);
            return mod_add(mod_mul(advanced.a00, pal.base3()),
                           mod_mul(advanced.a01, pal.base2()));
        });
    }
    return timed(StrategyId::MatrixPower, [&]() -> CountValue {
        const ExactPalette pal(k);
        if (n == 2) {
            return pal.base2();
        }
        if (n == 3) {
            return pal.base3();
        }
        const ExactRing ring;
        const Mat2<ExactRing> companion{pal.k2, pal.k1, ring.one(), ring.zero()};
        const auto advanced = mat_pow(companion, n - 3, ring);
        return advanced.a00 * pal.base3() + advanced.a01 * pal.base2();
    });
}

CountOutcome count(const CycleInstance& inst, const CountMode& mode,
                   StrategyId strategy, std::uint64_t brute_force_cap) {
    switch (strategy) {
        case StrategyId::BruteForce:
            return count_brute_force(inst, mode, brute_force_cap);
        case StrategyId::Conventional:
            return count_conventional(inst, mode);
        case StrategyId::Proposed:
            return count_proposed(inst, mode);
        case StrategyId::ClosedForm:
            return count_closed_form(inst, mode);
        case StrategyId::MatrixPower:
            return count_matrix_power(inst, mode);
    }
    throw std::invalid_argument("unknown strategy");
}

VerificationReport verify_all(std::uint64_t max_n, std::uint64_t max_k,
                              std::uint64_t cap) {
    if (max_n < 3) {
        throw std::invalid_argument("verification requires max_n >= 3, got " +
                                    std::to_string(max_n));
    }
    VerificationReport report;
    const CountMode exact = Exact{};
    for (std::uint64_t n = 3; n <= max_n; ++n) {
        for (std::uint64_t k = 0; k <= max_k; ++k) {
            if (!assignments_within_cap(k, n, cap)) {
                ++report.cells_skipped;
                continue;
            }
            const CycleInstance inst(n, k);
            const BigInt expected =
                std::get<BigInt>(count_brute_force(inst, exact, cap).value);
            for (StrategyId id :
                 {StrategyId::Conventional, StrategyId::Proposed,
                  StrategyId::ClosedForm, StrategyId::MatrixPower}) {
                const BigInt value =
                    std::get<BigInt>(count(inst, exact, id).value);
                if (value != expected) {
                    report.mismatches.push_back(
                        VerificationMismatch{n, k, id, value, expected});
                }
            }
            ++report.cells_checked;
        }
    }
    return report;
}

} // namespace ngon
