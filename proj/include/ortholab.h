/*
 * ortholab — desk-scale laboratory for weighted partial-sum functionals of
 * orthonormal expansions on functions of bounded variation.
 *
 * C interface of the shared library. All entry points return an ol_status;
 * results travel through out-parameters. Handles are opaque and freed with
 * their matching *_free call. On failure, ol_last_error() returns a
 * thread-local description of the most recent error in the calling thread.
 */

#ifndef ORTHOLAB_H
#define ORTHOLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ORTHOLAB_BUILD)
#define OL_API __declspec(dllexport)
#else
#define OL_API __declspec(dllimport)
#endif
#else
#define OL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ol_status {
  OL_OK = 0,
  OL_E_INVALID = 1,              /* malformed argument or configuration */
  OL_E_DOMAIN = 2,               /* evaluation point outside [0,1] */
  OL_E_INDEX = 3,                /* basis index < 1 */
  OL_E_UNSUPPORTED = 4,          /* operation undefined for this system */
  OL_E_INSUFFICIENT_WEIGHTS = 5, /* custom weight list shorter than requested */
  OL_E_NOT_AC = 6,               /* A-norm of a function with jumps */
  OL_E_DEGENERATE = 7,           /* statistic over an empty candidate set */
  OL_E_PARSE = 8,                /* JSON parse failure */
  OL_E_IO = 9,                   /* file i/o failure */
  OL_E_INTERNAL = 10
} ol_status;

typedef enum ol_system {
  OL_SYSTEM_TRIG = 0,
  OL_SYSTEM_WALSH = 1,
  OL_SYSTEM_HAAR = 2
} ol_system;

typedef enum ol_format { OL_FORMAT_CSV = 0, OL_FORMAT_JSON = 1 } ol_format;

typedef struct ol_bv ol_bv;       /* piecewise-affine function on [0,1] */
typedef struct ol_plan ol_plan;   /* weight sequence pair d, a */
typedef struct ol_table ol_table; /* scan result table */

/* ---- diagnostics ---- */

OL_API const char* ol_last_error(void);
OL_API void ol_string_free(char* s);

/* ---- orthonormal systems ---- */

OL_API ol_status ol_basis_eval(ol_system s, int64_t k, double x, double* out);
OL_API ol_status ol_basis_primitive(ol_system s, int64_t k, double x, double* out);
OL_API ol_status ol_basis_primitive_sup(ol_system s, int64_t k, double* out);
/* Two-call pattern: pass buf=NULL to query the length. */
OL_API ol_status ol_basis_breakpoints(ol_system s, int64_t k, double* buf, size_t cap,
                                      size_t* len);
OL_API ol_status ol_basis_inner_product(ol_system s, int64_t k, int64_t l, double* out);

/* ---- bounded-variation functions ---- */

/* segments: nseg rows of [left, right, slope, intercept], flattened. */
OL_API ol_status ol_bv_new(const double* segments, size_t nseg, double value_at_1,
                           ol_bv** out);
OL_API ol_status ol_bv_builtin(const char* name, ol_bv** out); /* "x" | "ramp" | "step2" */
OL_API ol_status ol_bv_from_json(const char* json, ol_bv** out);
OL_API ol_status ol_bv_to_json(const ol_bv* f, char** out);
OL_API void ol_bv_free(ol_bv* f);

OL_API ol_status ol_bv_eval(const ol_bv* f, double x, double* out);
OL_API ol_status ol_bv_total_variation(const ol_bv* f, double* out);
OL_API ol_status ol_bv_norm_a(const ol_bv* f, double* variation, double* sup_norm,
                              double* a_norm);
OL_API ol_status ol_bv_integrate_against(const ol_bv* f, ol_system s, int64_t k, double* out);

/* Parses a JSON array of function objects. Two-call pattern: with handles=NULL
 * only *count is written. Otherwise fills up to cap handles and names; names
 * are released with ol_string_free, handles with ol_bv_free. */
OL_API ol_status ol_bv_list_from_json(const char* json, size_t* count, ol_bv** handles,
                                      char** names, size_t cap);

/* ---- weight plans ---- */

OL_API ol_status ol_plan_preset(const char* d_name, const char* a_name, int64_t length_hint,
                                ol_plan** out);
OL_API ol_status ol_plan_from_json(const char* json, int64_t length_hint, ol_plan** out);
OL_API ol_status ol_plan_to_json(const ol_plan* plan, char** out);
OL_API void ol_plan_free(ol_plan* plan);
OL_API ol_status ol_admissibility_statistic(const ol_plan* plan, int64_t n, double* out);

/* ---- functionals ---- */

OL_API ol_status ol_fourier_coefficient(const ol_bv* f, ol_system s, int64_t k, double* out);
/* Q_n(x) and its prefix integral over [0,x]. */
OL_API ol_status ol_kernel_value(const ol_plan* plan, ol_system s, int64_t n, double x,
                                 double* out);
OL_API ol_status ol_kernel_prefix(const ol_plan* plan, ol_system s, int64_t n, double x,
                                  double* out);
/* max over i/n, 1 <= i < n, of |prefix integral|; smallest argmax on ties. */
OL_API ol_status ol_prefix_max(const ol_plan* plan, ol_system s, int64_t n, double* value,
                               int64_t* argmax);
/* U_n(f) through coefficient linearity, and by direct integration. */
OL_API ol_status ol_functional(const ol_bv* f, const ol_plan* plan, ol_system s, int64_t n,
                               double* out);
OL_API ol_status ol_functional_direct(const ol_bv* f, const ol_plan* plan, ol_system s,
                                      int64_t n, double* out);
OL_API ol_status ol_weighted_coeff_sum(const ol_bv* f, const ol_plan* plan, ol_system s,
                                       int64_t n, double* out);
OL_API ol_status ol_mr_sum(const double* c, size_t len, double* out);

/* ---- grid decomposition and sharpness ---- */

/* Three-term split of integral(f*h) on the grid {i/n}; h is either the basis
 * element phi_k or the weighted kernel Q_m. Outputs a1, a2, a3 and the direct
 * integral. */
OL_API ol_status ol_decompose_basis(const ol_bv* f, ol_system s, int64_t k, int64_t n,
                                    double* a1, double* a2, double* a3, double* lhs);
OL_API ol_status ol_decompose_weighted(const ol_bv* f, const ol_plan* plan, ol_system s,
                                       int64_t kernel_n, int64_t grid_n, double* a1, double* a2,
                                       double* a3, double* lhs);
OL_API ol_status ol_sharpness_ramp(int64_t n, int64_t i_n, ol_bv** out);
OL_API ol_status ol_sharpness_probe(const ol_plan* plan, ol_system s, int64_t n, double* b_n,
                                    int64_t* argmax_i, double* u_n, double* slack);

/* ---- scans ---- */

OL_API ol_status ol_scan_bounded(ol_system s, const ol_plan* plan, const int64_t* schedule,
                                 size_t schedule_len, const ol_bv* const* functions,
                                 const char* const* names, size_t nfunctions, ol_table** out);
OL_API ol_status ol_scan_decay(ol_system s, int64_t k_max, ol_table** out);
OL_API ol_status ol_scan_sharpness(ol_system s, const ol_plan* plan, const int64_t* schedule,
                                   size_t schedule_len, ol_table** out);
OL_API ol_status ol_criteria_json(const ol_bv* f, const ol_plan* plan, ol_system s,
                                  const int64_t* schedule, size_t schedule_len, char** out);
/* Randomized identity check; exit-style: *failures == 0 means pass. */
OL_API ol_status ol_identity_check(uint64_t seed, int64_t cases, int64_t* failures,
                                   double* max_rel_residual);

/* ---- tables ---- */

OL_API size_t ol_table_num_rows(const ol_table* t);
OL_API size_t ol_table_num_columns(const ol_table* t);
OL_API const char* ol_table_column_name(const ol_table* t, size_t i);
OL_API ol_status ol_table_value(const ol_table* t, size_t row, const char* column, double* out);
/* Row label ("" when the table has no label column). */
OL_API const char* ol_table_label(const ol_table* t, size_t row);
OL_API size_t ol_table_num_meta(const ol_table* t);
OL_API const char* ol_table_meta_key(const ol_table* t, size_t i);
OL_API const char* ol_table_meta_value(const ol_table* t, size_t i);
OL_API ol_status ol_table_render(const ol_table* t, ol_format f, char** out);
OL_API ol_status ol_table_write(const ol_table* t, ol_format f, const char* path);
OL_API void ol_table_free(ol_table* t);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ORTHOLAB_H */
