/*
 * apx: exact computation of 2-variable Apostol-type polynomials, power sums
 * and their symmetry identities.
 *
 * Every object crossing this boundary is an opaque handle released with its
 * matching *_free function. Strings returned by the library are owned by the
 * handle they came from and stay valid until that handle is freed or the same
 * accessor is called again. Rationals travel as text: "p/q", or "p" when the
 * denominator is 1.
 */
#ifndef APX_APX_H
#define APX_APX_H

#include <stddef.h>

#if defined(APX_BUILDING_LIBRARY)
#define APX_API __attribute__((visibility("default")))
#else
#define APX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum apx_status {
    APX_OK = 0,
    APX_VERIFY_FAILED = 1, /* a report has failing or errored points */
    APX_ERR_USAGE = 2,     /* malformed argument, unknown tag, bad grid */
    APX_ERR_DOMAIN = 3,    /* mathematically undefined request */
    APX_ERR_INTERNAL = 4
} apx_status;

typedef enum apx_format { APX_FORMAT_JSON = 0, APX_FORMAT_CSV = 1, APX_FORMAT_TEXT = 2 } apx_format;

typedef struct apx_context apx_context;
typedef struct apx_sequence apx_sequence;
typedef struct apx_scalar apx_scalar;
typedef struct apx_report apx_report;

APX_API apx_context* apx_context_new(void);
APX_API void apx_context_free(apx_context* ctx);

/* Worker threads for grid verification; 0 means one per hardware thread. */
APX_API void apx_context_set_threads(apx_context* ctx, unsigned threads);

/* Message for the last failing call on this context, or "". */
APX_API const char* apx_last_error(const apx_context* ctx);

/* Parses "json", "csv" or "text". */
APX_API apx_status apx_parse_format(const char* name, apx_format* out);

/*
 * Family selection for apx_expand. Text fields are NUL-terminated.
 *   family  "atp" | "bernoulli" | "euler" | "genocchi"
 *   base    "unit" | "exp" | "gould_hopper" | "laguerre" | "trunc_exp"
 *   degree  s or r for the last three bases
 *   x, y    rational text, or "sym" to keep the argument symbolic
 * mu and nu are only read for "atp".
 */
typedef struct apx_family_spec {
    const char* family;
    unsigned m;
    const char* lambda;
    int mu;
    unsigned nu;
    const char* base;
    unsigned degree;
    const char* x;
    const char* y;
} apx_family_spec;

/* Entries F_0..F_n. */
APX_API apx_status apx_expand(apx_context* ctx, const apx_family_spec* spec, unsigned n, apx_sequence** out);
APX_API size_t apx_sequence_size(const apx_sequence* seq);
APX_API const char* apx_sequence_entry(const apx_sequence* seq, size_t index);
APX_API int apx_sequence_is_symbolic(const apx_sequence* seq);
APX_API const char* apx_sequence_render(apx_sequence* seq, apx_format format);
APX_API void apx_sequence_free(apx_sequence* seq);

/* kind is "S", "M", "genS" or "genM"; lambda is read only by the gen kinds
 * and may be NULL otherwise. */
APX_API apx_status apx_power_sum(apx_context* ctx, const char* kind, unsigned k, unsigned n, const char* lambda,
                                 apx_scalar** out);
APX_API const char* apx_scalar_value(const apx_scalar* value);
APX_API const char* apx_scalar_render(apx_scalar* value, apx_format format);
APX_API void apx_scalar_free(apx_scalar* value);

/*
 * Verifies an identity over a grid. grid_json is a JSON array of points, or
 * NULL for the compiled-in default grid. Returns APX_OK when every point
 * passes and APX_VERIFY_FAILED otherwise; *out is set in both cases.
 */
APX_API apx_status apx_verify(apx_context* ctx, const char* identity, const char* grid_json, apx_report** out);
APX_API size_t apx_report_total(const apx_report* report);
APX_API size_t apx_report_passed(const apx_report* report);
APX_API size_t apx_report_failed(const apx_report* report);
APX_API size_t apx_report_errored(const apx_report* report);
/* Per-point access in report order. status is "pass", "fail" or "error";
 * lhs and rhs are NULL for errored points. */
APX_API const char* apx_report_status(const apx_report* report, size_t index);
APX_API const char* apx_report_lhs(const apx_report* report, size_t index);
APX_API const char* apx_report_rhs(const apx_report* report, size_t index);
APX_API const char* apx_report_render(apx_report* report, apx_format format, int failures_only);
APX_API void apx_report_free(apx_report* report);

/* Identity catalog, sorted by tag. */
APX_API size_t apx_identity_count(void);
APX_API const char* apx_identity_tag(size_t index);
APX_API const char* apx_catalog_render(apx_context* ctx, apx_format format);

#ifdef __cplusplus
}
#endif

#endif /* APX_APX_H */
