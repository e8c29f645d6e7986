#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "value.hpp"

namespace ngon {

// Default ceiling on the number of assignments the brute-force oracle will
// enumerate.
inline constexpr std::uint64_t kDefaultBruteForceCap = 100'000'000;

inline constexpr std::uint64_t kMaxVertexCount = 1'000'000'000'000'000'000; // 10^18

// The problem input: the cycle on n vertices and a palette of k colors.
// n = 2 is accepted as the degenerate base case with count k(k-1).
class CycleInstance {
public:
    CycleInstance(std::uint64_t vertex_count, std::uint64_t color_count);

    std::uint64_t vertex_count() const noexcept { return vertex_count_; }
    std::uint64_t color_count() const noexcept { return color_count_; }

private:
    std::uint64_t vertex_count_;
    std::uint64_t color_count_;
};

enum class StrategyId {
    BruteForce,
    Conventional,
    Proposed,
    ClosedForm,
    MatrixPower,
};

inline constexpr std::array<StrategyId, 5> kAllStrategies = {
    StrategyId::BruteForce,   StrategyId::Conventional, StrategyId::Proposed,
    StrategyId::ClosedForm,   StrategyId::MatrixPower,
};

std::string_view strategy_name(StrategyId id);
std::optional<StrategyId> strategy_from_name(std::string_view name);

struct CountOutcome {
    StrategyId strategy;
    CountValue value;
    std::chrono::nanoseconds elapsed;
};

// One color per vertex, entries in [0, k).
struct Coloring {
    std::vector<std::uint64_t> colors;
};

// True iff no two cyclically adjacent vertices share a color.
bool is_proper(const Coloring& c);

// Ground truth by exhaustive enumeration of all k^n assignments. Throws
// oracle_too_large when k^n exceeds cap.
CountOutcome count_brute_force(const CycleInstance& inst, const CountMode& mode,
                               std::uint64_t cap = kDefaultBruteForceCap);

// p(2) = k(k-1), p(3) = k(k-1)(k-2), then p(i) = k(k-1)^{i-1} - p(i-1) with a
// rolling power. Theta(n) time, O(1) state.
CountOutcome count_conventional(const CycleInstance& inst, const CountMode& mode);

// g(n) = (k-2)g(n-1) + (k-1)g(n-2) from g(2) = k(k-1), g(3) = k(k-1)(k-2),
// iterated with two rolling values. Theta(n) time, O(1) state.
CountOutcome count_proposed(const CycleInstance& inst, const CountMode& mode);

// (k-1)^n + (-1)^n (k-1); O(log n) modular exponentiation in modular mode.
CountOutcome count_closed_form(const CycleInstance& inst, const CountMode& mode);

// Advances the order-2 recurrence by powering its companion matrix
// [[k-2, k-1], [1, 0]]; O(log n) matrix squarings. Agrees with
// count_proposed on all inputs.
CountOutcome count_matrix_power(const CycleInstance& inst, const CountMode& mode);

// Dispatch on strategy. elapsed covers the computation only.
CountOutcome count(const CycleInstance& inst, const CountMode& mode,
                   StrategyId strategy,
                   std::uint64_t brute_force_cap = kDefaultBruteForceCap);

struct VerificationMismatch {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    StrategyId strategy = StrategyId::BruteForce;
    BigInt value;
    BigInt expected;
};

struct VerificationReport {
    std::uint64_t cells_checked = 0;
    std::uint64_t cells_skipped = 0;
    std::vector<VerificationMismatch> mismatches;
};

// Differential sweep: for every 3 <= n <= max_n, 0 <= k <= max_k whose k^n
// fits under cap, runs all five strategies in exact mode against the
// brute-force value. Over-cap cells are counted as skipped. Requires
// max_n >= 3.
VerificationReport verify_all(std::uint64_t max_n, std::uint64_t max_k,
                              std::uint64_t cap = kDefaultBruteForceCap);

// k^n if it is <= cap, nullopt otherwise; never overflows.
std::optional<std::uint64_t> assignments_within_cap(std::uint64_t k,
                                                    std::uint64_t n,
                                                    std::uint64_t cap);

} // namespace ngon
