#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "bench.hpp"

using namespace ngon;

namespace {

BenchConfig small_config() {
    BenchConfig config{
        {12}, {4}, Modulus(10679),
        {StrategyId::ClosedForm, StrategyId::Proposed},
        2, 1, kDefaultBruteForceCap};
    return config;
}

} // namespace

TEST_CASE("run_bench on the first reference row") {
    const BenchReport report = run_bench(small_config());
    REQUIRE(report.rows.size() == 1);
    const BenchRow& row = report.rows[0];
    CHECK(row.n == 12);
    CHECK(row.k == 4);
    REQUIRE(row.residue.has_value());
    CHECK(row.residue->value() == 8173);
    CHECK(row.agreement);
    CHECK(row.error.empty());
    CHECK(row.timings_ms.size() == 2);
    for (const auto& [id, ms] : row.timings_ms) {
        CHECK(ms >= 0.0);
    }
}

TEST_CASE("run_bench with an empty grid yields an empty report") {
    BenchConfig config = small_config();
    config.n_values.clear();
    CHECK(run_bench(config).rows.empty());
}

TEST_CASE("config validation") {
    BenchConfig no_repeats = small_config();
    no_repeats.repeats = 0;
    CHECK_THROWS_AS(run_bench(no_repeats), std::invalid_argument);

    BenchConfig no_strategies = small_config();
    no_strategies.strategies.clear();
    CHECK_THROWS_AS(run_bench(no_strategies), std::invalid_argument);

    BenchConfig oracle_over_cap = small_config();
    oracle_over_cap.n_values = {64};
    oracle_over_cap.strategies = {StrategyId::BruteForce};
    CHECK_THROWS_AS(run_bench(oracle_over_cap), oracle_too_large);
}

TEST_CASE("a failing cell does not abort the sweep") {
    BenchConfig config = small_config();
    config.n_values = {1, 12}; // n = 1 is rejected by the instance
    const BenchReport report = run_bench(config);
    REQUIRE(report.rows.size() == 2);
    CHECK_FALSE(report.rows[0].error.empty());
    CHECK_FALSE(report.rows[0].agreement);
    CHECK_FALSE(report.rows[0].residue.has_value());
    CHECK(report.rows[1].agreement);
    CHECK_FALSE(all_rows_agree(report));
}

TEST_CASE("markdown render mirrors the reference table shape") {
    const std::string text =
        render_report(run_bench(small_config()), ReportFormat::Markdown);
    CHECK(text.find("| n | k | residue | closed-form (s) | proposed (s) |") !=
          std::string::npos);
    CHECK(text.find("| 12 | 4 | 8173 |") != std::string::npos);
}

TEST_CASE("csv render uses the fixed header") {
    const BenchReport report = run_bench(small_config());
    const std::string text = render_report(report, ReportFormat::Csv);
    CHECK(text.rfind("n,k,modulus,residue,agreement,closed-form_ms,proposed_ms\n",
                     0) == 0);
    CHECK(text.find("12,4,10679,8173,true,") != std::string::npos);

    BenchConfig empty = small_config();
    empty.n_values.clear();
    CHECK(render_report(run_bench(empty), ReportFormat::Csv) ==
          "n,k,modulus,residue,agreement,closed-form_ms,proposed_ms\n");
}

TEST_CASE("json render is a schema-stable array") {
    const std::string text =
        render_report(run_bench(small_config()), ReportFormat::Json);
    const nlohmann::json parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    const auto& row = parsed[0];
    CHECK(row["n"] == 12);
    CHECK(row["k"] == 4);
    CHECK(row["modulus"] == 10679);
    CHECK(row["residue"] == 8173);
    CHECK(row["agreement"] == true);
    CHECK(row["timings_ms"].is_object());
    CHECK(row["timings_ms"].contains("closed-form"));
    CHECK(row["timings_ms"].contains("proposed"));
}

TEST_CASE("median with a single repeat is the sample itself") {
    BenchConfig config = small_config();
    config.repeats = 1;
    config.warmups = 0;
    const BenchReport report = run_bench(config);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].timings_ms.size() == 2);
}

TEST_CASE("paper grid is the published 14-row layout") {
    const auto& grid = paper_grid();
    CHECK(grid.front() == std::pair<std::uint64_t, std::uint64_t>{12, 4});
    CHECK(grid.back() ==
          std::pair<std::uint64_t, std::uint64_t>{1'000'000'000, 10});
}

TEST_CASE("paper_table restricted to one strategy is trivially consistent") {
    const BenchReport report =
        paper_table({StrategyId::ClosedForm}, 1, 0);
    REQUIRE(report.rows.size() == 14);
    const std::uint32_t expected[] = {8173, 8014, 9462, 3851, 7761, 9279, 5842,
                                      4684, 10061, 3849, 10005, 3598, 6803,
                                      1134};
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        REQUIRE(report.rows[i].residue.has_value());
        CHECK(report.rows[i].residue->value() == expected[i]);
        CHECK(report.rows[i].agreement);
        CHECK(report.rows[i].timings_ms.size() == 1);
    }
    CHECK(all_rows_agree(report));
}

TEST_CASE("paper_table default policy restricts large rows") {
    const BenchReport report = paper_table({}, 1, 0);
    REQUIRE(report.rows.size() == 14);
    CHECK(report.strategies.size() == 4);
    for (const BenchRow& row : report.rows) {
        if (row.n > 10'000'000) {
            CHECK(row.timings_ms.size() == 2);
        } else {
            CHECK(row.timings_ms.size() == 4);
        }
        CHECK(row.agreement);
    }
    CHECK(all_rows_agree(report));
}

TEST_CASE("residues are deterministic across runs") {
    BenchConfig config = small_config();
    config.n_values = {12, 10'000};
    config.k_values = {4, 100};
    config.repeats = 1;
    config.warmups = 0;
    const BenchReport first = run_bench(config);
    const BenchReport second = run_bench(config);
    REQUIRE(first.rows.size() == second.rows.size());
    for (std::size_t i = 0; i < first.rows.size(); ++i) {
        CHECK(first.rows[i].residue->value() ==
              second.rows[i].residue->value());
    }
}

TEST_CASE("format names parse") {
    CHECK(format_from_name("md") == ReportFormat::Markdown);
    CHECK(format_from_name("markdown") == ReportFormat::Markdown);
    CHECK(format_from_name("csv") == ReportFormat::Csv);
    CHECK(format_from_name("json") == ReportFormat::Json);
    CHECK_FALSE(format_from_name("xml").has_value());
}
