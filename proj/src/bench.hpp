#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "counting.hpp"

namespace ngon {

struct BenchConfig {
    std::vector<std::uint64_t> n_values;
    std::vector<std::uint64_t> k_values;
    Modulus modulus;
    std::vector<StrategyId> strategies;
    std::uint32_t repeats = 5;
    std::uint32_t warmups = 1;
    std::uint64_t brute_force_cap = kDefaultBruteForceCap;
};

enum class ReportFormat { Markdown, Csv, Json };

std::optional<ReportFormat> format_from_name(std::string_view name);

struct BenchRow {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::optional<Residue> residue; // common value; empty if the cell failed
    // Median elapsed per strategy, in the order the strategies ran.
    std::vector<std::pair<StrategyId, double>> timings_ms;
    bool agreement = false;
    std::string error; // non-empty when the cell failed
};

struct BenchReport {
    Modulus modulus;
    std::uint32_t repeats = 0;
    std::uint32_t warmups = 0;
    std::vector<StrategyId> strategies; // column order for rendering
    std::string timestamp;              // ISO 8601, UTC
    std::vector<BenchRow> rows;
};

// Times every strategy over the cross product n_values x k_values: warmup
// runs untimed, then the median of `repeats` timed runs. Residues are
// cross-checked per cell; a failing cell is recorded and the sweep
// continues. Cells run sequentially on the calling thread.
BenchReport run_bench(const BenchConfig& config);

// The built-in 14-row (n, k) grid at M = 10679. With no override, rows with
// n > 10^7 run only the two logarithmic strategies so the default invocation
// stays fast; pass explicit strategies to apply them to every row.
BenchReport paper_table(const std::vector<StrategyId>& strategies_override = {},
                        std::uint32_t repeats = 5, std::uint32_t warmups = 1);

const std::array<std::pair<std::uint64_t, std::uint64_t>, 14>& paper_grid();

std::string render_report(const BenchReport& report, ReportFormat format);

bool all_rows_agree(const BenchReport& report);

} // namespace ngon
