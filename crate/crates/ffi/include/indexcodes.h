#ifndef INDEXCODES_H
#define INDEXCODES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum {
  IC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  IC_STATUS_NULL_POINTER = 1,
  /**
   * An argument was outside its domain (bad enum value, zero K, ...).
   */
  IC_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Case preconditions (divisibility and ranges) do not hold.
   */
  IC_STATUS_INVALID_PARAMETERS = 3,
  /**
   * Operand dimensions disagree.
   */
  IC_STATUS_DIMENSION_MISMATCH = 4,
  /**
   * A bounded search gave up; the result is unknown, not wrong.
   */
  IC_STATUS_INCONCLUSIVE = 5,
} ic_status;

/**
 * Case selector for [`ic_code_new`] and [`ic_problem_new_case`].
 */
typedef enum {
  IC_CASE_I = 1,
  IC_CASE_II = 2,
  IC_CASE_III = 3,
  IC_CASE_IV = 4,
  IC_CASE_V = 5,
  IC_CASE_VI = 6,
  IC_CASE_VII = 7,
  IC_CASE_VIII = 8,
  IC_CASE_IX = 9,
  IC_CASE_X = 10,
} ic_case;

/**
 * Opaque code handle: the generator matrix plus its parameters.
 */
typedef struct ic_code ic_code;

/**
 * Opaque side-information pattern handle.
 */
typedef struct ic_problem ic_problem;

/**
 * Opaque per-receiver verification report.
 */
typedef struct ic_report ic_report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread. Valid until the next failing
 * call on the same thread; never null.
 */
const char *ic_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *ic_version(void);

/**
 * Capacity per message of the general neighboring pattern, as an exact
 * reduced fraction.
 */
ic_status ic_capacity(uint32_t k,
                      uint32_t u,
                      uint32_t d,
                      uint64_t *numerator,
                      uint64_t *denominator);

/**
 * Builds the side-information pattern of one of the ten cases. Pass
 * lambda = 0 for cases I..IV.
 */
ic_status ic_problem_new_case(ic_case case_,
                              uint32_t k,
                              uint32_t d,
                              uint32_t lambda,
                              ic_problem **out);

/**
 * Builds the full one-sided pattern: receiver k knows the next D messages.
 */
ic_status ic_problem_new_one_sided(uint32_t k, uint32_t d, ic_problem **out);

/**
 * Builds the pattern with no side information at all.
 */
ic_status ic_problem_new_empty(uint32_t k, ic_problem **out);

/**
 * Releases a problem handle. Null is ignored.
 */
void ic_problem_free(ic_problem *problem);

/**
 * Number of side-information edges of the pattern.
 */
ic_status ic_problem_edge_count(const ic_problem *problem, uint64_t *out);

/**
 * Constructs the optimal code for a case. Pass lambda = 0 for cases I..IV.
 */
ic_status ic_code_new(ic_case case_, uint32_t k, uint32_t d, uint32_t lambda, ic_code **out);

/**
 * Releases a code handle. Null is ignored.
 */
void ic_code_free(ic_code *code);

/**
 * Number of messages K.
 */
ic_status ic_code_message_count(const ic_code *code, uint32_t *out);

/**
 * Code length N (number of transmissions).
 */
ic_status ic_code_length(const ic_code *code, uint32_t *out);

/**
 * Generator matrix entry at 1-based (row, col); writes 0 or 1.
 */
ic_status ic_code_matrix_entry(const ic_code *code, uint32_t row, uint32_t col, uint8_t *out);

/**
 * Generator matrix in the text format ("K N" header then 0/1 rows). The
 * returned string must be released with [`ic_string_free`].
 */
ic_status ic_code_matrix_text(const ic_code *code, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void ic_string_free(char *text);

/**
 * Verifies a code against a pattern. Pass max_cardinality = 0 for the
 * default cap on the fallback transmission-count search.
 */
ic_status ic_verify(const ic_problem *problem,
                    const ic_code *code,
                    uint32_t max_cardinality,
                    ic_report **out);

/**
 * Releases a report handle. Null is ignored.
 */
void ic_report_free(ic_report *report);

/**
 * True iff every receiver can decode.
 */
ic_status ic_report_all_decodable(const ic_report *report, uint8_t *out);

/**
 * Per-receiver result (1-based k). Writes decodable as 0/1 and the exact
 * minimum transmission count, or 0 when it is unknown or the receiver
 * cannot decode.
 */
ic_status ic_report_receiver(const ic_report *report,
                             uint32_t k,
                             uint8_t *decodable,
                             uint32_t *min_tx);

/**
 * True iff the code length equals the capacity denominator K-D.
 */
ic_status ic_check_optimal_length(const ic_code *code, uint8_t *out);

/**
 * Exact minrank of the pattern. Pass 0 budgets for the defaults. Returns
 * `Inconclusive` when a budget is exhausted.
 */
ic_status ic_minrank(const ic_problem *problem,
                     uint32_t max_edges,
                     uint64_t max_nodes,
                     uint32_t *value,
                     uint64_t *explored);

/**
 * Whether every edge of the pattern is critical for the minrank. Pass 0
 * budgets for the defaults.
 */
ic_status ic_critical(const ic_problem *problem,
                      uint32_t max_edges,
                      uint64_t max_nodes,
                      uint8_t *overall);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INDEXCODES_H */
