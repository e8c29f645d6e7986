#include "ngon/ngon.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "bench.hpp"
#include "counting.hpp"
#include "recurrence.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, translating exceptions into status codes and recording the
// message for ngon_last_error.
template <class F>
ngon_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return NGON_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return NGON_ERR_INVALID_ARGUMENT;
    } catch (const ngon::unsupported_error& e) {
        g_last_error = e.what();
        return NGON_ERR_UNSUPPORTED;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NGON_ERR_INTERNAL;
    }
}

ngon_status fail_invalid(const char* message) {
    g_last_error = message;
    return NGON_ERR_INVALID_ARGUMENT;
}

ngon::CountMode make_mode(const uint32_t* modulus) {
    if (modulus == nullptr) {
        return ngon::Exact{};
    }
    return ngon::Modular{ngon::Modulus(*modulus)};
}

ngon::StrategyId to_strategy(ngon_strategy strategy) {
    switch (strategy) {
        case NGON_STRATEGY_BRUTE_FORCE: return ngon::StrategyId::BruteForce;
        case NGON_STRATEGY_CONVENTIONAL: return ngon::StrategyId::Conventional;
        case NGON_STRATEGY_PROPOSED: return ngon::StrategyId::Proposed;
        case NGON_STRATEGY_CLOSED_FORM: return ngon::StrategyId::ClosedForm;
        case NGON_STRATEGY_MATRIX_POWER: return ngon::StrategyId::MatrixPower;
    }
    throw std::invalid_argument("unknown strategy value " +
                                std::to_string(static_cast<int>(strategy)));
}

ngon_strategy from_strategy(ngon::StrategyId id) {
    switch (id) {
        case ngon::StrategyId::BruteForce: return NGON_STRATEGY_BRUTE_FORCE;
        case ngon::StrategyId::Conventional: return NGON_STRATEGY_CONVENTIONAL;
        case ngon::StrategyId::Proposed: return NGON_STRATEGY_PROPOSED;
        case ngon::StrategyId::ClosedForm: return NGON_STRATEGY_CLOSED_FORM;
        case ngon::StrategyId::MatrixPower: return NGON_STRATEGY_MATRIX_POWER;
    }
    return NGON_STRATEGY_BRUTE_FORCE;
}

} // namespace

struct ngon_verify_report {
    ngon::VerificationReport report;
};

struct ngon_solution {
    ngon::ClosedFormSolution solution;
};

struct ngon_bench_report {
    ngon::BenchReport report;
};

extern "C" {

const char* ngon_status_name(ngon_status status) {
    switch (status) {
        case NGON_OK: return "ok";
        case NGON_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case NGON_ERR_UNSUPPORTED: return "unsupported";
        case NGON_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* ngon_last_error(void) { return g_last_error.c_str(); }

void ngon_string_free(char* s) { delete[] s; }

const char* ngon_strategy_name(ngon_strategy strategy) {
    switch (strategy) {
        case NGON_STRATEGY_BRUTE_FORCE:
        case NGON_STRATEGY_CONVENTIONAL:
        case NGON_STRATEGY_PROPOSED:
        case NGON_STRATEGY_CLOSED_FORM:
        case NGON_STRATEGY_MATRIX_POWER:
            return ngon::strategy_name(to_strategy(strategy)).data();
    }
    return "unknown";
}

ngon_status ngon_strategy_parse(const char* name, ngon_strategy* out) {
    if (name == nullptr || out == nullptr) {
        return fail_invalid("name and out must be non-NULL");
    }
    const auto id = ngon::strategy_from_name(name);
    if (!id) {
        g_last_error = "unknown strategy name: " + std::string(name);
        return NGON_ERR_INVALID_ARGUMENT;
    }
    *out = from_strategy(*id);
    g_last_error.clear();
    return NGON_OK;
}

ngon_status ngon_count(uint64_t n, uint64_t k, const uint32_t* modulus,
                       ngon_strategy strategy, uint64_t brute_force_cap,
                       char** value_out, double* elapsed_ms_out) {
    if (value_out == nullptr) {
        return fail_invalid("value_out must be non-NULL");
    }
    return guarded([&] {
        const ngon::CountMode mode = make_mode(modulus);
        const ngon::CycleInstance inst(n, k);
        const std::uint64_t cap =
            brute_force_cap == 0 ? ngon::kDefaultBruteForceCap : brute_force_cap;
        ngon::CountOutcome outcome =
            ngon::count(inst, mode, to_strategy(strategy), cap);
        *value_out = dup_string(ngon::value_to_string(outcome.value));
        if (elapsed_ms_out != nullptr) {
            *elapsed_ms_out =
                static_cast<double>(outcome.elapsed.count()) / 1e6;
        }
    });
}

ngon_status ngon_verify_run(uint64_t max_n, uint64_t max_k, uint64_t cap,
                            ngon_verify_report** out) {
    if (out == nullptr) {
        return fail_invalid("out must be non-NULL");
    }
    return guarded([&] {
        const std::uint64_t effective_cap =
            cap == 0 ? ngon::kDefaultBruteForceCap : cap;
        auto* handle = new ngon_verify_report{
            ngon::verify_all(max_n, max_k, effective_cap)};
        *out = handle;
    });
}

uint64_t ngon_verify_cells_checked(const ngon_verify_report* report) {
    return report == nullptr ? 0 : report->report.cells_checked;
}

uint64_t ngon_verify_cells_skipped(const ngon_verify_report* report) {
    return report == nullptr ? 0 : report->report.cells_skipped;
}

size_t ngon_verify_mismatch_count(const ngon_verify_report* report) {
    return report == nullptr ? 0 : report->report.mismatches.size();
}

ngon_status ngon_verify_mismatch_at(const ngon_verify_report* report,
                                    size_t index, uint64_t* n_out,
                                    uint64_t* k_out,
                                    ngon_strategy* strategy_out,
                                    char** value_out, char** expected_out) {
    if (report == nullptr || index >= report->report.mismatches.size()) {
        return fail_invalid("mismatch index out of range");
    }
    const auto& mismatch = report->report.mismatches[index];
    if (n_out != nullptr) {
        *n_out = mismatch.n;
    }
    if (k_out != nullptr) {
        *k_out = mismatch.k;
    }
    if (strategy_out != nullptr) {
        *strategy_out = from_strategy(mismatch.strategy);
    }
    if (value_out != nullptr) {
        *value_out = dup_string(ngon::to_decimal(mismatch.value));
    }
    if (expected_out != nullptr) {
        *expected_out = dup_string(ngon::to_decimal(mismatch.expected));
    }
    g_last_error.clear();
    return NGON_OK;
}

void ngon_verify_report_free(ngon_verify_report* report) { delete report; }

ngon_status ngon_solve_order2(int64_t p, int64_t q, uint64_t start_index,
                              int64_t a, int64_t b, ngon_solution** out) {
    if (out == nullptr) {
        return fail_invalid("out must be non-NULL");
    }
    return guarded([&] {
        const ngon::Order2Recurrence rec(p, q, start_index, a, b);
        *out = new ngon_solution{ngon::solve_order2(rec)};
    });
}

int ngon_solution_is_repeated(const ngon_solution* solution) {
    return solution != nullptr && solution->solution.repeated() ? 1 : 0;
}

void ngon_solution_roots(const ngon_solution* solution, int64_t* r1,
                         int64_t* r2) {
    if (solution == nullptr) {
        return;
    }
    if (r1 != nullptr) {
        *r1 = solution->solution.root1();
    }
    if (r2 != nullptr) {
        *r2 = solution->solution.root2();
    }
}

ngon_status ngon_solution_constants(const ngon_solution* solution,
                                    char** c1_out, char** c2_out) {
    if (solution == nullptr) {
        return fail_invalid("solution must be non-NULL");
    }
    if (c1_out != nullptr) {
        *c1_out = dup_string(ngon::to_decimal(solution->solution.coeff1()));
    }
    if (c2_out != nullptr) {
        *c2_out = dup_string(ngon::to_decimal(solution->solution.coeff2()));
    }
    g_last_error.clear();
    return NGON_OK;
}

ngon_status ngon_solution_evaluate(const ngon_solution* solution, uint64_t n,
                                   const uint32_t* modulus, char** value_out) {
    if (solution == nullptr || value_out == nullptr) {
        return fail_invalid("solution and value_out must be non-NULL");
    }
    return guarded([&] {
        const ngon::CountMode mode = make_mode(modulus);
        const ngon::CountValue value =
            ngon::evaluate_solution(solution->solution, n, mode);
        *value_out = dup_string(ngon::value_to_string(value));
    });
}

void ngon_solution_free(ngon_solution* solution) { delete solution; }

ngon_status ngon_bench_run(const uint64_t* n_values, size_t n_count,
                           const uint64_t* k_values, size_t k_count,
                           uint32_t modulus, const ngon_strategy* strategies,
                           size_t strategy_count, uint32_t repeats,
                           uint32_t warmups, uint64_t brute_force_cap,
                           ngon_bench_report** out) {
    if (out == nullptr) {
        return fail_invalid("out must be non-NULL");
    }
    if ((n_values == nullptr && n_count > 0) ||
        (k_values == nullptr && k_count > 0) ||
        (strategies == nullptr && strategy_count > 0)) {
        return fail_invalid("array arguments must be non-NULL when non-empty");
    }
    return guarded([&] {
        ngon::BenchConfig config{
            std::vector<std::uint64_t>(n_values, n_values + n_count),
            std::vector<std::uint64_t>(k_values, k_values + k_count),
            ngon::Modulus(modulus),
            {},
            repeats,
            warmups,
            brute_force_cap == 0 ? ngon::kDefaultBruteForceCap
                                 : brute_force_cap,
        };
        config.strategies.reserve(strategy_count);
        for (size_t i = 0; i < strategy_count; ++i) {
            config.strategies.push_back(to_strategy(strategies[i]));
        }
        *out = new ngon_bench_report{ngon::run_bench(config)};
    });
}

ngon_status ngon_bench_paper_table(const ngon_strategy* strategies,
                                   size_t strategy_count, uint32_t repeats,
                                   uint32_t warmups, ngon_bench_report** out) {
    if (out == nullptr) {
        return fail_invalid("out must be non-NULL");
    }
    if (strategies == nullptr && strategy_count > 0) {
        return fail_invalid("strategies must be non-NULL when non-empty");
    }
    return guarded([&] {
        std::vector<ngon::StrategyId> override_list;
        override_list.reserve(strategy_count);
        for (size_t i = 0; i < strategy_count; ++i) {
            override_list.push_back(to_strategy(strategies[i]));
        }
        *out = new ngon_bench_report{
            ngon::paper_table(override_list, repeats, warmups)};
    });
}

size_t ngon_bench_row_count(const ngon_bench_report* report) {
    return report == nullptr ? 0 : report->report.rows.size();
}

ngon_status ngon_bench_row(const ngon_bench_report* report, size_t index,
                           uint64_t* n_out, uint64_t* k_out,
                           uint32_t* residue_out, int* agreement_out) {
    if (report == nullptr || index >= report->report.rows.size()) {
        return fail_invalid("row index out of range");
    }
    const ngon::BenchRow& row = report->report.rows[index];
    if (n_out != nullptr) {
        *n_out = row.n;
    }
    if (k_out != nullptr) {
        *k_out = row.k;
    }
    if (residue_out != nullptr) {
        *residue_out = row.residue ? row.residue->value() : UINT32_MAX;
    }
    if (agreement_out != nullptr) {
        *agreement_out = row.agreement ? 1 : 0;
    }
    g_last_error.clear();
    return NGON_OK;
}

int ngon_bench_all_agree(const ngon_bench_report* report) {
    return report != nullptr && ngon::all_rows_agree(report->report) ? 1 : 0;
}

ngon_status ngon_bench_render(const ngon_bench_report* report,
                              ngon_format format, char** text_out) {
    if (report == nullptr || text_out == nullptr) {
        return fail_invalid("report and text_out must be non-NULL");
    }
    return guarded([&] {
        ngon::ReportFormat fmt;
        switch (format) {
            case NGON_FORMAT_MARKDOWN: fmt = ngon::ReportFormat::Markdown; break;
            case NGON_FORMAT_CSV: fmt = ngon::ReportFormat::Csv; break;
            case NGON_FORMAT_JSON: fmt = ngon::ReportFormat::Json; break;
            default:
                throw std::invalid_argument(
                    "unknown format value " +
                    std::to_string(static_cast<int>(format)));
        }
        *text_out = dup_string(ngon::render_report(report->report, fmt));
    });
}

void ngon_bench_report_free(ngon_bench_report* report) { delete report; }

} // extern "C"
