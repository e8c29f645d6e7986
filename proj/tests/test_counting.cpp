#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "counting.hpp"

using namespace ngon;

namespace {

BigInt exact_value(const CountOutcome& outcome) {
    return std::get<BigInt>(outcome.value);
}

std::uint32_t residue_value(const CountOutcome& outcome) {
    return std::get<Residue>(outcome.value).value();
}

// (k-1)^n + (-1)^n (k-1), the reference closed form, computed independently
// of the strategy implementations.
BigInt reference_count(std::uint64_t n, std::uint64_t k) {
    BigInt km1 = BigInt(static_cast<unsigned long>(k)) - 1;
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), km1.get_mpz_t(), n);
    return (n % 2 == 0) ? p + km1 : p - km1;
}

} // namespace

TEST_CASE("instance bounds") {
    CHECK_THROWS_AS(CycleInstance(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(CycleInstance(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(CycleInstance(3, std::uint64_t{1} << 63),
                    std::invalid_argument);
    CHECK(CycleInstance(2, 0).vertex_count() == 2);
}

TEST_CASE("strategy names round-trip") {
    for (StrategyId id : kAllStrategies) {
        CHECK(strategy_from_name(strategy_name(id)) == id);
    }
    CHECK_FALSE(strategy_from_name("nonsense").has_value());
}

TEST_CASE("is_proper on small colorings") {
    CHECK(is_proper(Coloring{{0, 1, 2}}));
    CHECK(is_proper(Coloring{{0, 1, 0, 1}}));
    CHECK_FALSE(is_proper(Coloring{{0, 1, 1}}));
    CHECK_FALSE(is_proper(Coloring{{0, 0}}));
}

TEST_CASE("brute force on known cells") {
    CHECK(exact_value(count_brute_force(CycleInstance(3, 3), Exact{})) == 6);
    CHECK(exact_value(count_brute_force(CycleInstance(5, 2), Exact{})) == 0);
    CHECK(exact_value(count_brute_force(CycleInstance(5, 3), Exact{})) == 30);
    CHECK(exact_value(count_brute_force(CycleInstance(2, 5), Exact{})) == 20);
}

TEST_CASE("brute force cap") {
    CHECK_THROWS_AS(count_brute_force(CycleInstance(100, 5), Exact{}),
                    oracle_too_large);
    CHECK_THROWS_AS(count_brute_force(CycleInstance(4, 4), Exact{}, 255),
                    oracle_too_large);
    CHECK(exact_value(count_brute_force(CycleInstance(4, 4), Exact{}, 256)) ==
          84);
    // Degenerate palettes stay cheap no matter how long the cycle is.
    CHECK(exact_value(count_brute_force(
              CycleInstance(1'000'000'000'000ULL, 1), Exact{})) == 0);
    CHECK(exact_value(count_brute_force(
              CycleInstance(1'000'000'000'000ULL, 0), Exact{})) == 0);
}

TEST_CASE("conventional strategy") {
    CHECK(residue_value(count_conventional(CycleInstance(12, 4),
                                           Modular{Modulus(10679)})) == 8173);
    CHECK(exact_value(count_conventional(CycleInstance(3, 2), Exact{})) == 0);
    CHECK(exact_value(count_conventional(CycleInstance(6, 2), Exact{})) == 2);
    CHECK(exact_value(count_conventional(CycleInstance(2, 5), Exact{})) == 20);
}

TEST_CASE("proposed strategy") {
    CHECK(residue_value(count_proposed(CycleInstance(10'000, 100),
                                       Modular{Modulus(10679)})) == 8014);
    CHECK(exact_value(count_proposed(CycleInstance(2, 5), Exact{})) == 20);
    CHECK(exact_value(count_proposed(CycleInstance(4, 3), Exact{})) == 18);
}

TEST_CASE("closed form strategy") {
    CHECK(residue_value(count_closed_form(CycleInstance(1'000'000'000, 10),
                                          Modular{Modulus(10679)})) == 1134);
    CHECK(exact_value(count_closed_form(CycleInstance(4, 2), Exact{})) == 2);
    CHECK(exact_value(count_closed_form(CycleInstance(12, 4), Exact{})) ==
          531444);
}

TEST_CASE("matrix power strategy") {
    CHECK(exact_value(count_matrix_power(CycleInstance(3, 7), Exact{})) == 210);
    CHECK(residue_value(count_matrix_power(CycleInstance(12, 4),
                                           Modular{Modulus(10679)})) == 8173);
    CHECK(exact_value(count_matrix_power(CycleInstance(5, 3), Exact{})) == 30);
}

TEST_CASE("dispatch") {
    CHECK(residue_value(count(CycleInstance(12, 4), Modular{Modulus(10679)},
                              StrategyId::ClosedForm)) == 8173);
    CHECK(exact_value(count(CycleInstance(2, 3), Exact{},
                            StrategyId::Proposed)) == 6);
    CHECK(exact_value(count(CycleInstance(5, 3), Exact{},
                            StrategyId::BruteForce)) == 30);
}

TEST_CASE("degenerate palettes: k = 0 and k = 1 count zero for n >= 3") {
    for (std::uint64_t k : {std::uint64_t{0}, std::uint64_t{1}}) {
        for (std::uint64_t n = 3; n <= 8; ++n) {
            const CycleInstance inst(n, k);
            for (StrategyId id : kAllStrategies) {
                CHECK(exact_value(count(inst, Exact{}, id)) == 0);
            }
        }
    }
}

TEST_CASE("two-colorability") {
    for (std::uint64_t n = 3; n <= 14; ++n) {
        const BigInt expected = (n % 2 == 0) ? 2 : 0;
        CHECK(exact_value(count_proposed(CycleInstance(n, 2), Exact{})) ==
              expected);
    }
}

TEST_CASE("oracle equivalence on a small grid") {
    for (std::uint64_t n = 3; n <= 7; ++n) {
        for (std::uint64_t k = 0; k <= 4; ++k) {
            const CycleInstance inst(n, k);
            const BigInt expected =
                exact_value(count_brute_force(inst, Exact{}));
            for (StrategyId id :
                 {StrategyId::Conventional, StrategyId::Proposed,
                  StrategyId::ClosedForm, StrategyId::MatrixPower}) {
                CHECK(exact_value(count(inst, Exact{}, id)) == expected);
            }
        }
    }
}

TEST_CASE("closed-form identity over a longer range") {
    for (std::uint64_t k : {std::uint64_t{2}, std::uint64_t{3},
                            std::uint64_t{10}, std::uint64_t{97}}) {
        for (std::uint64_t n = 2; n <= 300; ++n) {
            const CycleInstance inst(n, k);
            CHECK(exact_value(count_proposed(inst, Exact{})) ==
                  reference_count(n, k));
        }
    }
}

TEST_CASE("conventional identity: p(n) + p(n-1) = k(k-1)^{n-1}") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 8; ++i) {
        const std::uint64_t k = rng() % 50;
        BigInt power = BigInt(static_cast<unsigned long>(k)) - 1;
        power = power * power * power; // (k-1)^3 for n = 4
        const BigInt kb(static_cast<unsigned long>(k));
        BigInt prev =
            exact_value(count_conventional(CycleInstance(3, k), Exact{}));
        for (std::uint64_t n = 4; n <= 120; ++n) {
            const BigInt cur =
                exact_value(count_conventional(CycleInstance(n, k), Exact{}));
            CHECK(cur + prev == kb * power);
            power *= kb - 1;
            prev = cur;
        }
    }
}

TEST_CASE("recurrence consistency of the proposed relation") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 8; ++i) {
        const std::uint64_t k = rng() % 1000;
        const BigInt k1 = BigInt(static_cast<unsigned long>(k)) - 1;
        const BigInt k2 = k1 - 1;
        BigInt g_prev =
            exact_value(count_proposed(CycleInstance(2, k), Exact{}));
        BigInt g_cur =
            exact_value(count_proposed(CycleInstance(3, k), Exact{}));
        for (std::uint64_t n = 4; n <= 120; ++n) {
            const BigInt g_next =
                exact_value(count_proposed(CycleInstance(n, k), Exact{}));
            CHECK(g_next - k2 * g_cur - k1 * g_prev == 0);
            g_prev = g_cur;
            g_cur = g_next;
        }
    }
}

TEST_CASE("divisibility: k(k-1) divides the exact count") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        const std::uint64_t n = 2 + rng() % 200;
        const std::uint64_t k = 2 + rng() % 500;
        const BigInt value =
            exact_value(count_closed_form(CycleInstance(n, k), Exact{}));
        const BigInt divisor =
            BigInt(static_cast<unsigned long>(k)) * (k - 1);
        CHECK(value % divisor == 0);
    }
}

TEST_CASE("nonnegativity for every palette") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 60; ++i) {
        const std::uint64_t n = 2 + rng() % 500;
        const std::uint64_t k = rng() % 300;
        const BigInt value =
            exact_value(count_closed_form(CycleInstance(n, k), Exact{}));
        CHECK(value >= 0);
    }
}

TEST_CASE("modular homomorphism across strategies") {
    std::mt19937_64 rng(10);
    const std::uint32_t moduli[] = {2, 10679, (1u << 31) - 1};
    for (int i = 0; i < 30; ++i) {
        const std::uint64_t n = 2 + rng() % 400;
        const std::uint64_t k = rng() % 10'000;
        const Modulus m(moduli[i % 3]);
        const CycleInstance inst(n, k);
        for (StrategyId id :
             {StrategyId::Conventional, StrategyId::Proposed,
              StrategyId::ClosedForm, StrategyId::MatrixPower}) {
            const BigInt exact = exact_value(count(inst, Exact{}, id));
            const Residue reduced = mod_from_natural(exact, m);
            CHECK(std::get<Residue>(count(inst, Modular{m}, id).value) ==
                  reduced);
        }
    }
}

TEST_CASE("strategy agreement at scale in modular mode") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 6; ++i) {
        const std::uint64_t n = 2 + rng() % 1'000'000;
        const std::uint64_t k = rng() % 100'000;
        const Modulus m(10679);
        const CycleInstance inst(n, k);
        const std::uint32_t reference =
            residue_value(count_conventional(inst, Modular{m}));
        CHECK(residue_value(count_proposed(inst, Modular{m})) == reference);
        CHECK(residue_value(count_closed_form(inst, Modular{m})) == reference);
        CHECK(residue_value(count_matrix_power(inst, Modular{m})) == reference);
    }
}

TEST_CASE("verify_all sweeps and counts cells") {
    const VerificationReport small = verify_all(6, 4);
    CHECK(small.cells_checked == 20);
    CHECK(small.cells_skipped == 0);
    CHECK(small.mismatches.empty());

    const VerificationReport colorless = verify_all(3, 0);
    CHECK(colorless.cells_checked == 1);
    CHECK(colorless.mismatches.empty());

    CHECK_THROWS_AS(verify_all(2, 5), std::invalid_argument);
}

TEST_CASE("verify_all skips over-cap cells") {
    // cap 100: 3^5 = 243 and 4^x cells fall out, k <= 2 cells remain.
    const VerificationReport report = verify_all(5, 4, 100);
    CHECK(report.cells_checked + report.cells_skipped == 15);
    CHECK(report.cells_skipped > 0);
    CHECK(report.mismatches.empty());
}
