// ngon CLI: count / verify / solve / bench over the shared-library C API.
//
// Exit codes: 0 success, 2 invalid arguments, 3 unsupported instance,
// 4 internal inconsistency (strategy disagreement or a broken exactness
// guarantee).

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngon/ngon.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidArguments = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

int exit_code_for(ngon_status status) {
    switch (status) {
        case NGON_OK: return kExitOk;
        case NGON_ERR_INVALID_ARGUMENT: return kExitInvalidArguments;
        case NGON_ERR_UNSUPPORTED: return kExitUnsupported;
        case NGON_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

int report_failure(ngon_status status) {
    std::cerr << "error (" << ngon_status_name(status)
              << "): " << ngon_last_error() << "\n";
    return exit_code_for(status);
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { ngon_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? "" : ptr; }
};

std::optional<std::vector<std::uint64_t>> parse_u64_list(
    const std::string& text) {
    std::vector<std::uint64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(item, &used);
            if (used != item.size() || item.empty()) {
                return std::nullopt;
            }
            values.push_back(value);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return values;
}

std::optional<std::uint32_t> checked_modulus(std::uint64_t raw) {
    if (raw == 0 || raw > UINT32_MAX) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(raw);
}

struct CountOptions {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t modulus_raw = 0;
    bool has_modulus = false;
    std::string strategy = "closed-form";
    bool all_strategies = false;
    bool json = false;
};

int run_count(const CountOptions& opt) {
    std::optional<std::uint32_t> modulus;
    if (opt.has_modulus) {
        modulus = checked_modulus(opt.modulus_raw);
        if (!modulus) {
            std::cerr << "error: --mod must be in [1, 2^31)\n";
            return kExitInvalidArguments;
        }
    }
    const uint32_t* mod_ptr = modulus ? &*modulus : nullptr;

    const auto run_one = [&](ngon_strategy strategy, std::string* value,
                             double* elapsed) {
        OwnedString out;
        const ngon_status status =
            ngon_count(opt.n, opt.k, mod_ptr, strategy, 0, &out.ptr, elapsed);
        if (status == NGON_OK) {
            *value = out.str();
        }
        return status;
    };

    if (!opt.all_strategies) {
        ngon_strategy strategy;
        if (ngon_strategy_parse(opt.strategy.c_str(), &strategy) != NGON_OK) {
            std::cerr << "error: unknown strategy '" << opt.strategy << "'\n";
            return kExitInvalidArguments;
        }
        std::string value;
        double elapsed_ms = 0.0;
        const ngon_status status = run_one(strategy, &value, &elapsed_ms);
        if (status != NGON_OK) {
            return report_failure(status);
        }
        if (opt.json) {
            nlohmann::json obj = {
                {"n", opt.n},
                {"k", opt.k},
                {"modulus", nullptr},
                {"strategy", ngon_strategy_name(strategy)},
                {"value", value},
                {"elapsed_ms", elapsed_ms},
            };
            if (modulus) {
                obj["modulus"] = *modulus;
            }
            std::cout << obj.dump() << "\n";
        } else {
            std::cout << value << "\n";
        }
        return kExitOk;
    }

    const ngon_strategy all[] = {
        NGON_STRATEGY_BRUTE_FORCE, NGON_STRATEGY_CONVENTIONAL,
        NGON_STRATEGY_PROPOSED, NGON_STRATEGY_CLOSED_FORM,
        NGON_STRATEGY_MATRIX_POWER};
    nlohmann::json results = nlohmann::json::array();
    std::optional<std::string> reference;
    bool disagreement = false;
    for (ngon_strategy strategy : all) {
        std::string value;
        double elapsed_ms = 0.0;
        const ngon_status status = run_one(strategy, &value, &elapsed_ms);
        if (status == NGON_ERR_UNSUPPORTED &&
            strategy == NGON_STRATEGY_BRUTE_FORCE) {
            // Enumeration over the cap is skipped, mirroring the verifier.
            if (!opt.json) {
                std::cout << ngon_strategy_name(strategy) << " skipped\n";
            }
            continue;
        }
        if (status != NGON_OK) {
            return report_failure(status);
        }
        if (opt.json) {
            nlohmann::json obj = {
                {"n", opt.n},
                {"k", opt.k},
                {"modulus", nullptr},
                {"strategy", ngon_strategy_name(strategy)},
                {"value", value},
                {"elapsed_ms", elapsed_ms},
            };
            if (modulus) {
                obj["modulus"] = *modulus;
            }
            results.push_back(std::move(obj));
        } else {
            std::cout << ngon_strategy_name(strategy) << " " << value << "\n";
        }
        if (!reference) {
            reference = value;
        } else if (*reference != value) {
            disagreement = true;
        }
    }
    if (opt.json) {
        std::cout << results.dump() << "\n";
    }
    if (disagreement) {
        std::cerr << "error: strategies disagree\n";
        return kExitInternal;
    }
    return kExitOk;
}

struct VerifyOptions {
    std::uint64_t max_n = 0;
    std::uint64_t max_k = 0;
    std::uint64_t cap = 0;
};

int run_verify(const VerifyOptions& opt) {
    ngon_verify_report* report = nullptr;
    const ngon_status status =
        ngon_verify_run(opt.max_n, opt.max_k, opt.cap, &report);
    if (status != NGON_OK) {
        return report_failure(status);
    }
    const std::unique_ptr<ngon_verify_report, void (*)(ngon_verify_report*)>
        guard(report, ngon_verify_report_free);
    const size_t mismatches = ngon_verify_mismatch_count(report);
    for (size_t i = 0; i < mismatches; ++i) {
        uint64_t n = 0;
        uint64_t k = 0;
        ngon_strategy strategy = NGON_STRATEGY_BRUTE_FORCE;
        OwnedString value;
        OwnedString expected;
        if (ngon_verify_mismatch_at(report, i, &n, &k, &strategy, &value.ptr,
                                    &expected.ptr) == NGON_OK) {
            std::cerr << "mismatch: n=" << n << " k=" << k << " "
                      << ngon_strategy_name(strategy) << "=" << value.str()
                      << " expected=" << expected.str() << "\n";
        }
    }
    std::cout << "checked=" << ngon_verify_cells_checked(report)
              << " skipped=" << ngon_verify_cells_skipped(report)
              << " mismatches=" << mismatches << "\n";
    return mismatches == 0 ? kExitOk : kExitInternal;
}

struct SolveOptions {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::uint64_t start_index = 1;
    std::uint64_t eval_at = 0;
    bool has_eval = false;
};

int run_solve(const SolveOptions& opt) {
    ngon_solution* solution = nullptr;
    const ngon_status status = ngon_solve_order2(
        opt.p, opt.q, opt.start_index, opt.a, opt.b, &solution);
    if (status != NGON_OK) {
        return report_failure(status);
    }
    const std::unique_ptr<ngon_solution, void (*)(ngon_solution*)> guard(
        solution, ngon_solution_free);
    int64_t r1 = 0;
    int64_t r2 = 0;
    ngon_solution_roots(solution, &r1, &r2);
    OwnedString c1;
    OwnedString c2;
    if (ngon_solution_constants(solution, &c1.ptr, &c2.ptr) != NGON_OK) {
        return report_failure(NGON_ERR_INTERNAL);
    }
    if (ngon_solution_is_repeated(solution)) {
        std::cout << "r=" << r1 << " (repeated) C1=" << c1.str()
                  << " C2=" << c2.str() << "\n";
    } else {
        std::cout << "r1=" << r1 << " r2=" << r2 << " C1=" << c1.str()
                  << " C2=" << c2.str() << "\n";
    }
    if (opt.has_eval) {
        OwnedString value;
        const ngon_status eval_status =
            ngon_solution_evaluate(solution, opt.eval_at, nullptr, &value.ptr);
        if (eval_status != NGON_OK) {
            return report_failure(eval_status);
        }
        std::cout << "x(" << opt.eval_at << ") = " << value.str() << "\n";
    }
    return kExitOk;
}

struct BenchOptions {
    std::string n_list;
    std::string k_list;
    std::uint64_t modulus_raw = 10679;
    std::string strategies = "conventional,proposed,closed-form,matrix-power";
    std::uint32_t repeats = 5;
    std::uint32_t warmups = 1;
    std::string format = "md";
    bool paper_table = false;
    bool strategies_given = false;
};

int run_bench_cmd(const BenchOptions& opt) {
    ngon_format format = NGON_FORMAT_MARKDOWN;
    if (opt.format == "md") {
        format = NGON_FORMAT_MARKDOWN;
    } else if (opt.format == "csv") {
        format = NGON_FORMAT_CSV;
    } else if (opt.format == "json") {
        format = NGON_FORMAT_JSON;
    } else {
        std::cerr << "error: --format must be md, csv or json\n";
        return kExitInvalidArguments;
    }

    std::vector<ngon_strategy> strategies;
    if (!opt.strategies.empty()) {
        std::size_t pos = 0;
        while (pos <= opt.strategies.size()) {
            const std::size_t comma = opt.strategies.find(',', pos);
            const std::string name = opt.strategies.substr(
                pos, comma == std::string::npos ? std::string::npos
                                                : comma - pos);
            ngon_strategy strategy;
            if (ngon_strategy_parse(name.c_str(), &strategy) != NGON_OK) {
                std::cerr << "error: unknown strategy '" << name << "'\n";
                return kExitInvalidArguments;
            }
            strategies.push_back(strategy);
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }

    ngon_bench_report* report = nullptr;
    ngon_status status = NGON_OK;
    if (opt.paper_table) {
        // An explicit --strategies list overrides the default per-row policy.
        const bool custom = opt.strategies_given;
        status = ngon_bench_paper_table(custom ? strategies.data() : nullptr,
                                        custom ? strategies.size() : 0,
                                        opt.repeats, opt.warmups, &report);
    } else {
        const auto n_values = parse_u64_list(opt.n_list);
        const auto k_values = parse_u64_list(opt.k_list);
        if (!n_values || !k_values || n_values->empty() || k_values->empty()) {
            std::cerr
                << "error: --n-list and --k-list need comma-separated naturals\n";
            return kExitInvalidArguments;
        }
        const auto modulus = checked_modulus(opt.modulus_raw);
        if (!modulus) {
            std::cerr << "error: --mod must be in [1, 2^31)\n";
            return kExitInvalidArguments;
        }
        status = ngon_bench_run(n_values->data(), n_values->size(),
                                k_values->data(), k_values->size(), *modulus,
                                strategies.data(), strategies.size(),
                                opt.repeats, opt.warmups, 0, &report);
    }
    if (status != NGON_OK) {
        return report_failure(status);
    }
    const std::unique_ptr<ngon_bench_report, void (*)(ngon_bench_report*)>
        guard(report, ngon_bench_report_free);
    OwnedString text;
    status = ngon_bench_render(report, format, &text.ptr);
    if (status != NGON_OK) {
        return report_failure(status);
    }
    std::cout << text.str();
    if (!ngon_bench_all_agree(report)) {
        std::cerr << "error: benchmark rows disagree or failed\n";
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts proper k-colorings of the n-cycle by cross-checked "
                 "strategies"};
    app.require_subcommand(1);

    CountOptions count_opt;
    CLI::App* count_cmd =
        app.add_subcommand("count", "Count colorings of one instance");
    count_cmd->add_option("--n", count_opt.n, "Number of vertices (>= 2)")
        ->required();
    count_cmd->add_option("--k", count_opt.k, "Number of colors")->required();
    CLI::Option* count_mod =
        count_cmd->add_option("--mod", count_opt.modulus_raw,
                              "Report the count modulo this value");
    CLI::Option* strategy_opt = count_cmd->add_option(
        "--strategy", count_opt.strategy,
        "One of brute-force, conventional, proposed, closed-form, "
        "matrix-power (default closed-form)");
    count_cmd
        ->add_flag("--all-strategies", count_opt.all_strategies,
                   "Run every strategy and cross-check")
        ->excludes(strategy_opt);
    count_cmd->add_flag("--json", count_opt.json, "Emit JSON");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Differential sweep of all strategies against enumeration");
    verify_cmd->add_option("--max-n", verify_opt.max_n, "Largest cycle (>= 3)")
        ->required();
    verify_cmd->add_option("--max-k", verify_opt.max_k, "Largest color count")
        ->required();
    verify_cmd->add_option("--cap", verify_opt.cap,
                           "Enumeration cap (default 10^8 assignments)");

    SolveOptions solve_opt;
    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "Solve x_{n+2} = p x_{n+1} + q x_n by characteristic roots");
    solve_cmd->add_option("--p", solve_opt.p, "Coefficient of x_{n+1}")
        ->required();
    solve_cmd->add_option("--q", solve_opt.q, "Coefficient of x_n (nonzero)")
        ->required();
    solve_cmd->add_option("--a", solve_opt.a, "Value at the start index")
        ->required();
    solve_cmd->add_option("--b", solve_opt.b, "Value at start index + 1")
        ->required();
    solve_cmd->add_option("--start-index", solve_opt.start_index,
                          "Index of the first anchor value (default 1)");
    CLI::Option* eval_opt = solve_cmd->add_option(
        "--eval", solve_opt.eval_at, "Also evaluate the term at this index");

    BenchOptions bench_opt;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Time strategies over an (n, k) grid");
    bench_cmd->add_option("--n-list", bench_opt.n_list,
                          "Comma-separated vertex counts");
    bench_cmd->add_option("--k-list", bench_opt.k_list,
                          "Comma-separated color counts");
    bench_cmd->add_option("--mod", bench_opt.modulus_raw,
                          "Modulus (default 10679)");
    CLI::Option* bench_strategies = bench_cmd->add_option(
        "--strategies", bench_opt.strategies,
        "Comma-separated strategies to time");
    bench_cmd->add_option("--repeats", bench_opt.repeats,
                          "Timed runs per cell (default 5)");
    bench_cmd->add_option("--warmups", bench_opt.warmups,
                          "Untimed runs per cell (default 1)");
    bench_cmd->add_option("--format", bench_opt.format, "md, csv or json");
    bench_cmd->add_flag("--paper-table", bench_opt.paper_table,
                        "Run the built-in 14-row reference grid at M=10679");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidArguments;
    }

    count_opt.has_modulus = count_mod->count() > 0;
    solve_opt.has_eval = eval_opt->count() > 0;
    bench_opt.strategies_given = bench_strategies->count() > 0;

    if (count_cmd->parsed()) {
        return run_count(count_opt);
    }
    if (verify_cmd->parsed()) {
        return run_verify(verify_opt);
    }
    if (solve_cmd->parsed()) {
        return run_solve(solve_opt);
    }
    if (bench_cmd->parsed()) {
        return run_bench_cmd(bench_opt);
    }
    return kExitInvalidArguments;
}
