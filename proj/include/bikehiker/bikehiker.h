#ifndef BIKEHIKER_BIKEHIKER_H
#define BIKEHIKER_BIKEHIKER_H

/* C interface to the bikehiker library. Every handle is opaque and owned by
 * the caller; release it with the matching *_free function. Functions that
 * can fail return bh_status and leave a message in bh_last_error(). Indices
 * are 0-based; boundary b sits between stage b and stage b + 1. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BIKEHIKER_BUILDING_LIBRARY)
#    define BH_API __declspec(dllexport)
#  else
#    define BH_API __declspec(dllimport)
#  endif
#else
#  define BH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bh_scheme bh_scheme;
typedef struct bh_plan bh_plan;
typedef struct bh_trace bh_trace;
typedef struct bh_enum_report bh_enum_report;

typedef enum bh_status {
  BH_OK = 0,
  BH_ERR_PARSE,
  BH_ERR_INVALID_ARGUMENT,
  BH_ERR_NOT_SQUARE,
  BH_ERR_NOT_UNIFORM,
  BH_ERR_NOT_OPTIMAL,
  BH_ERR_INVALID_PLAN,
  BH_ERR_GUARD,
  BH_ERR_IO,
  BH_ERR_INTERNAL
} bh_status;

/* Message of the last failure on this thread; empty after a success. */
BH_API const char* bh_last_error(void);
BH_API const char* bh_status_name(bh_status status);
BH_API const char* bh_version(void);

/* Strings returned through char** are released with bh_string_free. */
BH_API void bh_string_free(char* s);

/* ---- schemes ---- */

BH_API bh_status bh_scheme_parse(const char* text, bh_scheme** out);
BH_API bh_status bh_scheme_load(const char* path, bh_scheme** out);
BH_API bh_status bh_scheme_save(const bh_scheme* m, const char* path);
BH_API bh_status bh_scheme_to_text(const bh_scheme* m, char** out);
/* bits is row-major, one byte per entry, each 0 or 1. */
BH_API bh_status bh_scheme_from_bits(size_t rows, size_t cols, const unsigned char* bits,
                                     bh_scheme** out);
BH_API bh_status bh_scheme_clone(const bh_scheme* m, bh_scheme** out);
BH_API void bh_scheme_free(bh_scheme* m);

BH_API size_t bh_scheme_rows(const bh_scheme* m);
BH_API size_t bh_scheme_cols(const bh_scheme* m);
BH_API int bh_scheme_at(const bh_scheme* m, size_t row, size_t col);
BH_API int bh_scheme_equal(const bh_scheme* a, const bh_scheme* b);

typedef enum bh_kind {
  BH_KIND_CYCLIC = 0,
  BH_KIND_TRANSPOSE_CYCLIC,
  BH_KIND_CIRCULANT,
  BH_KIND_BLOCK
} bh_kind;

/* Accepts "cyclic", "transpose-cyclic", "circulant" and "block". */
BH_API bh_status bh_kind_parse(const char* name, bh_kind* out);
/* r is only read for BH_KIND_BLOCK. */
BH_API bh_status bh_generate(bh_kind kind, size_t n, size_t k, size_t r, bh_scheme** out);

typedef enum bh_transform_kind {
  BH_REVERSE_STAGES = 0,
  BH_REVERSE_ROWS,
  BH_BINARY_DUAL,
  BH_TRANSPOSE
} bh_transform_kind;

BH_API bh_status bh_transform(const bh_scheme* m, bh_transform_kind kind, bh_scheme** out);
/* Row i of the result is row pi[i] of m. */
BH_API bh_status bh_permute_rows(const bh_scheme* m, const size_t* pi, size_t len, bh_scheme** out);
BH_API bh_status bh_swap_columns(const bh_scheme* m, size_t a, size_t b, bh_scheme** out);

/* ---- optimality ---- */

typedef enum bh_tie_order {
  BH_TIES_DROPPERS_FIRST = 0,
  BH_TIES_PICKERS_FIRST
} bh_tie_order;

typedef enum bh_verdict_reason {
  BH_REASON_OPTIMAL = 0,
  BH_REASON_NOT_UNIFORM,
  BH_REASON_NON_DYCK
} bh_verdict_reason;

typedef struct bh_verdict {
  int optimal;
  bh_verdict_reason reason;
  int uniform;
  size_t k;
  size_t l;
  int has_failing_boundary;
  size_t failing_boundary;
  char* failing_word; /* NULL unless has_failing_boundary; see bh_verdict_clear */
  size_t boundaries_checked;
} bh_verdict;

BH_API bh_status bh_decide(const bh_scheme* m, int use_skip_rule, bh_tie_order ties, bh_verdict* out);
BH_API void bh_verdict_clear(bh_verdict* v);

/* Canonical word at a boundary over {'a','b'}; requires a uniform scheme. */
BH_API bh_status bh_canonical_word(const bh_scheme* m, size_t boundary, bh_tie_order ties, char** out);
BH_API int bh_is_dyck(const char* word);

BH_API bh_status bh_plan_build(const bh_scheme* m, bh_plan** out);
BH_API void bh_plan_free(bh_plan* p);
BH_API size_t bh_plan_boundaries(const bh_plan* p);
/* Returns 1 and sets *image when the plan maps row at this boundary. */
BH_API int bh_plan_image(const bh_plan* p, size_t boundary, size_t row, size_t* image);

typedef struct bh_plan_check {
  int valid;
  const char* violation; /* static string, NULL when valid */
  size_t boundary;
  size_t row;
} bh_plan_check;

BH_API bh_status bh_plan_verify(const bh_scheme* m, const bh_plan* p, bh_plan_check* out);
BH_API bh_status bh_plan_complementary(const bh_scheme* m, const bh_plan* p, bh_plan** out);

/* ---- handovers and rides ---- */

BH_API bh_status bh_reduce(const bh_scheme* m, bh_scheme** out, size_t* removed);
BH_API bh_status bh_excess_handovers(const bh_scheme* m, size_t* out);
/* per_traveller may be NULL; otherwise it must hold bh_scheme_rows(m) entries. */
BH_API bh_status bh_rides(const bh_scheme* m, size_t* total, size_t* per_traveller);
/* mounts must hold `capacity` entries; *bikes receives the bicycle count. */
BH_API bh_status bh_bike_mounts(const bh_scheme* m, const bh_plan* p, size_t* mounts, size_t capacity,
                                size_t* bikes);

/* ---- simulation ---- */

typedef struct bh_rational {
  int64_t num;
  int64_t den;
} bh_rational;

typedef struct bh_speeds {
  bh_rational walk;
  bh_rational cycle;
} bh_speeds;

typedef enum bh_policy {
  BH_POLICY_GREEDY = 0,
  BH_POLICY_PLAN
} bh_policy;

typedef struct bh_stall {
  size_t traveller;
  size_t post;
  bh_rational begin;
  bh_rational wait;
  size_t ride_ordinal;
} bh_stall;

typedef struct bh_handover {
  size_t post;
  size_t from;
  size_t to;
  size_t bike;
  bh_rational time;
} bh_handover;

typedef struct bh_cohorts {
  size_t max_positions;
  bh_rational max_gap;    /* between adjacent distinct positions */
  bh_rational max_spread; /* between leader and last traveller */
  size_t samples;
  size_t mixed_mode_samples;
} bh_cohorts;

/* Accepts "p/q" or "p". */
BH_API bh_status bh_rational_parse(const char* text, bh_rational* out);

/* speeds NULL means walk 1, cycle 2; plan is required for BH_POLICY_PLAN. */
BH_API bh_status bh_simulate(const bh_scheme* m, const bh_speeds* speeds, bh_policy policy,
                             const bh_plan* plan, bh_trace** out);
BH_API void bh_trace_free(bh_trace* t);

BH_API int bh_trace_stall_free(const bh_trace* t);
BH_API int bh_trace_simultaneous_finish(const bh_trace* t);
BH_API bh_rational bh_trace_makespan(const bh_trace* t);
BH_API bh_rational bh_trace_arrival(const bh_trace* t, size_t traveller, size_t post);
BH_API size_t bh_trace_stall_count(const bh_trace* t);
BH_API bh_status bh_trace_stall(const bh_trace* t, size_t index, bh_stall* out);
BH_API size_t bh_trace_handover_count(const bh_trace* t);
BH_API bh_status bh_trace_handover(const bh_trace* t, size_t index, bh_handover* out);
BH_API bh_status bh_trace_write_csv(const bh_trace* t, const char* path);
BH_API bh_status bh_trace_cohorts(const bh_trace* t, bh_cohorts* out);

BH_API bh_status bh_stall_free(const bh_scheme* m, const bh_speeds* speeds, int* out);
/* *has is 0 when the greedy run never stalls. */
BH_API bh_status bh_first_stall_ordinal(const bh_scheme* m, const bh_speeds* speeds, int* has,
                                        size_t* ordinal);

/* ---- ground truth ---- */

typedef struct bh_enum_options {
  int cross_validate;
  size_t max_examples;
  int force;
} bh_enum_options;

BH_API bh_status bh_enumerate(size_t n, size_t k, const bh_enum_options* options, bh_enum_report** out);
BH_API void bh_enum_report_free(bh_enum_report* r);
BH_API size_t bh_enum_total(const bh_enum_report* r);
BH_API size_t bh_enum_optimal(const bh_enum_report* r);
BH_API size_t bh_enum_nonoptimal(const bh_enum_report* r);
BH_API size_t bh_enum_mismatches(const bh_enum_report* r);
BH_API size_t bh_enum_example_count(const bh_enum_report* r);
BH_API bh_status bh_enum_example(const bh_enum_report* r, size_t index, bh_scheme** out);

/* Exact determinant as a decimal string. */
BH_API bh_status bh_determinant(const bh_scheme* m, char** out);

BH_API bh_status bh_valid_stage_counts(size_t n, size_t k, size_t m, int* valid, size_t* r, size_t* l);
BH_API bh_status bh_is_single_ride_cyclic(const bh_scheme* m, int* out);

#ifdef __cplusplus
}
#endif

#endif /* BIKEHIKER_BIKEHIKER_H */
