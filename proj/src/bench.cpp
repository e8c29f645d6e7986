#include "bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <stdexcept>

#include <json.hpp>

namespace ngon {

namespace {

constexpr std::uint32_t kPaperModulus = 10679;
constexpr std::uint64_t kLinearStrategyLimit = 10'000'000;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double median_ms(std::vector<std::chrono::nanoseconds> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    const double ms = 1e-6;
    if (samples.size() % 2 == 1) {
        return static_cast<double>(samples[mid].count()) * ms;
    }
    return (static_cast<double>(samples[mid - 1].count()) +
            static_cast<double>(samples[mid].count())) /
           2.0 * ms;
}

std::string fixed3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

void validate(const BenchConfig& config) {
    if (config.repeats < 1) {
        throw std::invalid_argument("bench repeats must be >= 1");
    }
    if (config.strategies.empty()) {
        throw std::invalid_argument("bench strategy list must be non-empty");
    }
    const bool wants_oracle =
        std::find(config.strategies.begin(), config.strategies.end(),
                  StrategyId::BruteForce) != config.strategies.end();
    if (!wants_oracle) {
        return;
    }
    for (std::uint64_t n : config.n_values) {
        for (std::uint64_t k : config.k_values) {
            if (!assignments_within_cap(k, n, config.brute_force_cap)) {
                throw oracle_too_large(
                    "brute force requested but k^n exceeds the cap at n=" +
                    std::to_string(n) + ", k=" + std::to_string(k));
            }
        }
    }
}

BenchRow run_cell(std::uint64_t n, std::uint64_t k, Modulus modulus,
                  const std::vector<StrategyId>& strategies,
                  std::uint32_t repeats, std::uint32_t warmups,
                  std::uint64_t cap) {
    BenchRow row;
    row.n = n;
    row.k = k;
    try {
        const CycleInstance inst(n, k);
        const CountMode mode = Modular{modulus};
        row.agreement = true;
        for (StrategyId id : strategies) {
            for (std::uint32_t w = 0; w < warmups; ++w) {
                (void)count(inst, mode, id, cap);
            }
            std::vector<std::chrono::nanoseconds> samples;
            samples.reserve(repeats);
            std::optional<Residue> value;
            for (std::uint32_t r = 0; r < repeats; ++r) {
                CountOutcome outcome = count(inst, mode, id, cap);
                samples.push_back(outcome.elapsed);
                value = std::get<Residue>(outcome.value);
            }
            row.timings_ms.emplace_back(id, median_ms(std::move(samples)));
            if (!row.residue) {
                row.residue = value;
            } else if (*value != *row.residue) {
                row.agreement = false;
            }
        }
    } catch (const std::exception& e) {
        row.residue.reset();
        row.agreement = false;
        row.error = e.what();
    }
    return row;
}

} // namespace

std::optional<ReportFormat> format_from_name(std::string_view name) {
    if (name == "md" || name == "markdown") {
        return ReportFormat::Markdown;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    return std::nullopt;
}

BenchReport run_bench(const BenchConfig& config) {
    validate(config);
    BenchReport report{config.modulus, config.repeats, config.warmups,
                       config.strategies, utc_timestamp(), {}};
    for (std::uint64_t n : config.n_values) {
        for (std::uint64_t k : config.k_values) {
            report.rows.push_back(run_cell(n, k, config.modulus,
                                           config.strategies, config.repeats,
                                           config.warmups,
                                           config.brute_force_cap));
        }
    }
    return report;
}

const std::array<std::pair<std::uint64_t, std::uint64_t>, 14>& paper_grid() {
    static const std::array<std::pair<std::uint64_t, std::uint64_t>, 14> grid{{
        {12, 4},
        {10'000, 100},
        {100'000, 100},
        {1'000'000, 100},
        {1'000'000, 1'000},
        {10'000'000, 10},
        {10'000'000, 100},
        {10'000'000, 1'000},
        {10'000'000, 10'000},
        {100'000'000, 10},
        {100'000'000, 100},
        {100'000'000, 1'000},
        {100'000'000, 10'000},
        {1'000'000'000, 10},
    }};
    return grid;
}

BenchReport paper_table(const std::vector<StrategyId>& strategies_override,
                        std::uint32_t repeats, std::uint32_t warmups) {
    if (repeats < 1) {
        throw std::invalid_argument("bench repeats must be >= 1");
    }
    const Modulus modulus(kPaperModulus);
    const std::vector<StrategyId> all_analytic{
        StrategyId::Conventional, StrategyId::Proposed, StrategyId::ClosedForm,
        StrategyId::MatrixPower};
    const std::vector<StrategyId> logarithmic{StrategyId::ClosedForm,
                                              StrategyId::MatrixPower};
    const std::vector<StrategyId>& columns =
        strategies_override.empty() ? all_analytic : strategies_override;
    if (columns.empty()) {
        throw std::invalid_argument("bench strategy list must be non-empty");
    }

    BenchReport report{modulus, repeats, warmups, columns, utc_timestamp(), {}};
    for (const auto& [n, k] : paper_grid()) {
        const bool restricted =
            strategies_override.empty() && n > kLinearStrategyLimit;
        const std::vector<StrategyId>& strategies =
            restricted ? logarithmic : columns;
        report.rows.push_back(run_cell(n, k, modulus, strategies, repeats,
                                       warmups, kDefaultBruteForceCap));
    }
    return report;
}

bool all_rows_agree(const BenchReport& report) {
    return std::all_of(report.rows.begin(), report.rows.end(),
                       [](const BenchRow& row) {
                           return row.agreement && row.error.empty();
                       });
}

namespace {

std::string render_markdown(const BenchReport& report) {
    std::string out = "modulus=" + std::to_string(report.modulus.value()) +
                      " repeats=" + std::to_string(report.repeats) +
                      " warmups=" + std::to_string(report.warmups) +
                      " timestamp=" + report.timestamp + "\n\n";
    out += "| n | k | residue |";
    for (StrategyId id : report.strategies) {
        out += " ";
        out += strategy_name(id);
        out += " (s) |";
    }
    out += "\n|---|---|---|";
    for (std::size_t i = 0; i < report.strategies.size(); ++i) {
        out += "---|";
    }
    out += "\n";
    for (const BenchRow& row : report.rows) {
        out += "| " + std::to_string(row.n) + " | " + std::to_string(row.k) +
               " | ";
        out += row.residue ? std::to_string(row.residue->value())
                           : std::string("error");
        out += " |";
        for (StrategyId id : report.strategies) {
            const auto it = std::find_if(
                row.timings_ms.begin(), row.timings_ms.end(),
                [id](const auto& entry) { return entry.first == id; });
            if (it == row.timings_ms.end()) {
                out += " - |";
            } else {
                out += " " + fixed3(it->second / 1000.0) + " |";
            }
        }
        out += "\n";
        if (!row.error.empty()) {
            out += "<!-- n=" + std::to_string(row.n) +
                   " k=" + std::to_string(row.k) + ": " + row.error + " -->\n";
        }
    }
    return out;
}

std::string render_csv(const BenchReport& report) {
    std::string out = "n,k,modulus,residue,agreement";
    for (StrategyId id : report.strategies) {
        out += ",";
        out += strategy_name(id);
        out += "_ms";
    }
    out += "\n";
    for (const BenchRow& row : report.rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.k) + "," +
               std::to_string(report.modulus.value()) + ",";
        if (row.residue) {
            out += std::to_string(row.residue->value());
        }
        out += row.agreement ? ",true" : ",false";
        for (StrategyId id : report.strategies) {
            const auto it = std::find_if(
                row.timings_ms.begin(), row.timings_ms.end(),
                [id](const auto& entry) { return entry.first == id; });
            out += ",";
            if (it != row.timings_ms.end()) {
                out += fixed3(it->second);
            }
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const BenchReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchRow& row : report.rows) {
        nlohmann::json timings = nlohmann::json::object();
        for (const auto& [id, ms] : row.timings_ms) {
            timings[std::string(strategy_name(id))] = ms;
        }
        nlohmann::json obj = {
            {"n", row.n},
            {"k", row.k},
            {"modulus", report.modulus.value()},
            {"residue", nullptr},
            {"agreement", row.agreement},
            {"timings_ms", timings},
        };
        if (row.residue) {
            obj["residue"] = row.residue->value();
        }
        if (!row.error.empty()) {
            obj["error"] = row.error;
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

} // namespace

std::string render_report(const BenchReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Markdown: return render_markdown(report);
        case ReportFormat::Csv: return render_csv(report);
        case ReportFormat::Json: return render_json(report);
    }
    throw std::invalid_argument("unknown report format");
}

} // namespace ngon
