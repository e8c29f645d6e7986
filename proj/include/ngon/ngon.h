/* ngon — counting proper k-colorings of an n-cycle.
 *
 * C interface to the ngon core. All functions return ngon_status; results
 * come back through out-parameters. Strings returned through char** are
 * heap-allocated and must be released with ngon_string_free. Opaque handles
 * must be released with their matching *_free function.
 *
 * On failure, ngon_last_error() returns a thread-local description of the
 * most recent failing call on this thread.
 */

#ifndef NGON_H
#define NGON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NGON_API __declspec(dllexport)
#else
#define NGON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ngon_status {
    NGON_OK = 0,
    /* Malformed input: n < 2, modulus outside [1, 2^31), bad enum value. */
    NGON_ERR_INVALID_ARGUMENT = 1,
    /* Instance outside what the operation supports: enumeration over the
     * cap, characteristic roots that are not integers, a singular anchor
     * system. */
    NGON_ERR_UNSUPPORTED = 2,
    /* An internal exactness guarantee failed. */
    NGON_ERR_INTERNAL = 3,
} ngon_status;

typedef enum ngon_strategy {
    NGON_STRATEGY_BRUTE_FORCE = 0,
    NGON_STRATEGY_CONVENTIONAL = 1,
    NGON_STRATEGY_PROPOSED = 2,
    NGON_STRATEGY_CLOSED_FORM = 3,
    NGON_STRATEGY_MATRIX_POWER = 4,
} ngon_strategy;

typedef enum ngon_format {
    NGON_FORMAT_MARKDOWN = 0,
    NGON_FORMAT_CSV = 1,
    NGON_FORMAT_JSON = 2,
} ngon_format;

NGON_API const char* ngon_status_name(ngon_status status);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call. */
NGON_API const char* ngon_last_error(void);

NGON_API void ngon_string_free(char* s);

/* Flag-style names: "brute-force", "conventional", "proposed",
 * "closed-form", "matrix-power". */
NGON_API const char* ngon_strategy_name(ngon_strategy strategy);
NGON_API ngon_status ngon_strategy_parse(const char* name,
                                         ngon_strategy* out);

/* ---- counting ---------------------------------------------------------- */

/* Number of proper k-colorings of the n-cycle, n >= 2.
 *
 * modulus: NULL for exact arbitrary-precision counting, otherwise a pointer
 * to M in [1, 2^31). brute_force_cap limits the enumeration strategy
 * (0 selects the default of 10^8 assignments). value_out receives the count
 * in decimal. elapsed_ms_out (optional) receives the time spent inside the
 * strategy. */
NGON_API ngon_status ngon_count(uint64_t n, uint64_t k,
                                const uint32_t* modulus,
                                ngon_strategy strategy,
                                uint64_t brute_force_cap, char** value_out,
                                double* elapsed_ms_out);

/* ---- differential verification ----------------------------------------- */

typedef struct ngon_verify_report ngon_verify_report;

/* Checks every strategy against brute-force enumeration over the grid
 * 3 <= n <= max_n, 0 <= k <= max_k, skipping cells whose k^n exceeds cap
 * (0 selects the default). Requires max_n >= 3. */
NGON_API ngon_status ngon_verify_run(uint64_t max_n, uint64_t max_k,
                                     uint64_t cap, ngon_verify_report** out);
NGON_API uint64_t ngon_verify_cells_checked(const ngon_verify_report* report);
NGON_API uint64_t ngon_verify_cells_skipped(const ngon_verify_report* report);
NGON_API size_t ngon_verify_mismatch_count(const ngon_verify_report* report);
/* value_out/expected_out are optional (pass NULL to skip). */
NGON_API ngon_status ngon_verify_mismatch_at(const ngon_verify_report* report,
                                             size_t index, uint64_t* n_out,
                                             uint64_t* k_out,
                                             ngon_strategy* strategy_out,
                                             char** value_out,
                                             char** expected_out);
NGON_API void ngon_verify_report_free(ngon_verify_report* report);

/* ---- order-2 recurrence solver ------------------------------------------ */

typedef struct ngon_solution ngon_solution;

/* Solves x_{n+2} = p x_{n+1} + q x_n with x_s = a, x_{s+1} = b (q != 0) by
 * integer characteristic roots and exact rational constants. */
NGON_API ngon_status ngon_solve_order2(int64_t p, int64_t q,
                                       uint64_t start_index, int64_t a,
                                       int64_t b, ngon_solution** out);
NGON_API int ngon_solution_is_repeated(const ngon_solution* solution);
/* For a repeated root both outputs receive the same value. */
NGON_API void ngon_solution_roots(const ngon_solution* solution, int64_t* r1,
                                  int64_t* r2);
/* Exact constants as decimal strings, "num/den" when the denominator is
 * not 1. */
NGON_API ngon_status ngon_solution_constants(const ngon_solution* solution,
                                             char** c1_out, char** c2_out);
/* Term at index n (n >= start_index), exact decimal; reduced mod *modulus
 * when modulus is non-NULL. */
NGON_API ngon_status ngon_solution_evaluate(const ngon_solution* solution,
                                            uint64_t n,
                                            const uint32_t* modulus,
                                            char** value_out);
NGON_API void ngon_solution_free(ngon_solution* solution);

/* ---- benchmark harness --------------------------------------------------- */

typedef struct ngon_bench_report ngon_bench_report;

/* Times the given strategies over the cross product of n_values x k_values
 * modulo `modulus`. Each cell runs `warmups` untimed rounds, then the median
 * of `repeats` timed rounds is recorded and residues are cross-checked. */
NGON_API ngon_status ngon_bench_run(const uint64_t* n_values, size_t n_count,
                                    const uint64_t* k_values, size_t k_count,
                                    uint32_t modulus,
                                    const ngon_strategy* strategies,
                                    size_t strategy_count, uint32_t repeats,
                                    uint32_t warmups, uint64_t brute_force_cap,
                                    ngon_bench_report** out);

/* The built-in 14-row reference grid at M = 10679. Pass strategies = NULL
 * (and strategy_count = 0) for the default policy, which restricts rows
 * with n > 10^7 to the two logarithmic strategies; an explicit strategy
 * list applies to every row. */
NGON_API ngon_status ngon_bench_paper_table(const ngon_strategy* strategies,
                                            size_t strategy_count,
                                            uint32_t repeats, uint32_t warmups,
                                            ngon_bench_report** out);

NGON_API size_t ngon_bench_row_count(const ngon_bench_report* report);
/* residue_out receives UINT32_MAX if the cell failed. Outputs optional. */
NGON_API ngon_status ngon_bench_row(const ngon_bench_report* report,
                                    size_t index, uint64_t* n_out,
                                    uint64_t* k_out, uint32_t* residue_out,
                                    int* agreement_out);
NGON_API int ngon_bench_all_agree(const ngon_bench_report* report);
NGON_API ngon_status ngon_bench_render(const ngon_bench_report* report,
                                       ngon_format format, char** text_out);
NGON_API void ngon_bench_report_free(ngon_bench_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NGON_H */
