/* C interface to the embedding-dimension bound engines.
 *
 * Objects are opaque and owned by the caller once returned; release them with
 * the matching *_free function. Strings returned through char** are heap
 * allocated and released with embound_string_free. Every function returning
 * embound_status leaves a message for embound_last_error() on failure; the
 * message is per thread. */
#ifndef EMBOUND_EMBOUND_H
#define EMBOUND_EMBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(EMBOUND_BUILDING_LIBRARY)
#define EMBOUND_API __attribute__((visibility("default")))
#else
#define EMBOUND_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum embound_status {
  EMBOUND_OK = 0,
  EMBOUND_ERR_DOMAIN = 1,       /* argument outside the mathematical domain */
  EMBOUND_ERR_CAPABILITY = 2,   /* beyond a documented size cap */
  EMBOUND_ERR_INCONCLUSIVE = 3, /* no decision at the maximum precision */
  EMBOUND_ERR_LOOKUP = 4,       /* unknown name (engine, group, suite, preset, mutation) */
  EMBOUND_ERR_INVALID_ARGUMENT = 5, /* null pointer or index out of range */
  EMBOUND_ERR_INTERNAL = 6
} embound_status;

typedef enum embound_format { EMBOUND_FORMAT_JSON = 0, EMBOUND_FORMAT_TEXT = 1 } embound_format;

typedef struct embound_report embound_report;
typedef struct embound_suite_result embound_suite_result;

EMBOUND_API const char* embound_version(void);
EMBOUND_API const char* embound_status_name(embound_status status);
/* Message of the last failure on this thread; empty if none. */
EMBOUND_API const char* embound_last_error(void);
EMBOUND_API void embound_string_free(char* s);

/* group: "alt" or "sym". engines: comma-separated engine names, or NULL for
 * the default set. precision: fractional bits, 0 for the default. Engine
 * failures do not fail the call; they are reported per engine. */
EMBOUND_API embound_status embound_analyze(unsigned block_bits, const char* group, const char* engines,
                                           unsigned precision, embound_report** out);
EMBOUND_API void embound_report_free(embound_report* report);
EMBOUND_API embound_status embound_report_render(const embound_report* report, embound_format format, char** out);
/* EMBOUND_ERR_LOOKUP when no engine completed. */
EMBOUND_API embound_status embound_report_m_final(const embound_report* report, uint64_t* out);
/* EMBOUND_ERR_LOOKUP when the engine was not run or did not complete. */
EMBOUND_API embound_status embound_report_engine_m_min(const embound_report* report, const char* engine, uint64_t* out);
EMBOUND_API int embound_report_any_inconclusive(const embound_report* report);
EMBOUND_API int embound_report_any_unsupported(const embound_report* report);

/* suite: "all", "lemma31", "thm43" or "oracles". mutation: NULL for the
 * reference formulas, else a name from embound_mutation_name. induction_n_max:
 * 0 for the default 128. Check failures are data, not a failed call. */
EMBOUND_API embound_status embound_verify(const char* suite, const char* mutation, unsigned induction_n_max,
                                          embound_suite_result** out);
EMBOUND_API void embound_suite_result_free(embound_suite_result* result);
EMBOUND_API size_t embound_suite_check_count(const embound_suite_result* result);
/* Borrowed strings, valid until the result is freed. */
EMBOUND_API embound_status embound_suite_check(const embound_suite_result* result, size_t index, const char** name,
                                               int* passed, const char** detail);
EMBOUND_API int embound_suite_all_passed(const embound_suite_result* result);

EMBOUND_API size_t embound_mutation_count(void);
/* NULL when index is out of range. */
EMBOUND_API const char* embound_mutation_name(size_t index);

/* Borrowed strings, valid for the lifetime of the process. */
EMBOUND_API embound_status embound_preset(const char* name, unsigned* block_bits, const char** group,
                                          const char** citation);
EMBOUND_API embound_status embound_preset_render(const char* name, char** json_out);

/* Exhaustive scan of GL(dimension, 2), 1 <= dimension <= 5. */
EMBOUND_API embound_status embound_oracle_gl(unsigned dimension, uint64_t* invertible_count, uint64_t* max_order,
                                             uint64_t* max_even_order);
/* Decimal maximum order over partitions of points (<= 80) with the given constraints; "0" if none qualifies. */
EMBOUND_API embound_status embound_oracle_landau(unsigned points, int even_parity, int even_order, char** decimal_out);

#ifdef __cplusplus
}
#endif

#endif /* EMBOUND_EMBOUND_H */
