#ifndef HBRACES_H
#define HBRACES_H

/* C interface to the higher-braces engine.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions report failures through hb_status; the
 * message of the most recent failure on the calling thread is available from
 * hb_last_error(). Strings returned through char** are heap allocated and
 * must be released with hb_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(HBRACES_BUILDING_LIBRARY)
#define HB_API __attribute__((visibility("default")))
#else
#define HB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
    HB_OK = 0,
    HB_USAGE_ERROR = 1,
    HB_CONTRACT_VIOLATION = 2,
    HB_SINGULAR_SERIES = 3,
    HB_INSUFFICIENT_ORDER = 4,
    HB_PARSE_ERROR = 5,
    HB_INTERNAL_ERROR = 6
} hb_status;

typedef enum hb_flavor { HB_COMMUTATIVE = 0, HB_NONCOMMUTATIVE = 1 } hb_flavor;
typedef enum hb_convention { HB_FACTORIAL = 0, HB_PLAIN = 1 } hb_convention;
typedef enum hb_format { HB_TEXT = 0, HB_LATEX = 1, HB_JSON = 2 } hb_format;
typedef enum hb_brace_kind { HB_KOSZUL = 0, HB_BORJESON = 1, HB_GENERAL = 2 } hb_brace_kind;

typedef struct hb_expr hb_expr;
typedef struct hb_series hb_series;
typedef struct hb_coeffs hb_coeffs;
typedef struct hb_report hb_report;

HB_API const char* hb_last_error(void);
HB_API void hb_string_free(char* s);

/* Name lookups; unknown names give HB_USAGE_ERROR. */
HB_API hb_status hb_parse_format(const char* name, hb_format* out);
HB_API hb_status hb_parse_convention(const char* name, hb_convention* out);

/* ---- series ---- */
HB_API hb_status hb_series_preset(const char* name, size_t order, hb_convention convention, hb_series** out);
/* Coefficients f_1..f_count as "p/q" or integer strings, zero-padded up to
 * order (order 0 means order = count). */
HB_API hb_status hb_series_from_strings(const char* const* coeffs, size_t count, size_t order,
                                        hb_convention convention, hb_series** out);
HB_API hb_status hb_series_invert(const hb_series* f, hb_series** out);
HB_API hb_status hb_series_compose(const hb_series* outer, const hb_series* inner, hb_series** out);
HB_API size_t hb_series_order(const hb_series* s);
HB_API hb_status hb_series_coefficient(const hb_series* s, size_t k, char** out);
HB_API void hb_series_free(hb_series* s);

/* ---- pullback coefficients ---- */
/* c_0..c_{r_max} (factorial f) or d(p, q), p + q <= r_max (plain f), from f
 * and its inverse. */
HB_API hb_status hb_coeffs_from_series(const hb_series* f, size_t r_max, hb_coeffs** out);
HB_API hb_convention hb_coeffs_convention(const hb_coeffs* c);
HB_API size_t hb_coeffs_max_index(const hb_coeffs* c);
HB_API hb_status hb_coeffs_split(const hb_coeffs* c, size_t p, size_t q, char** out);
HB_API void hb_coeffs_free(hb_coeffs* c);

/* ---- braces ---- */
/* Brace on a_1..a_n with degree(a_i) = degrees[i]. HB_GENERAL needs f and
 * the flavor; koszul and borjeson ignore both. */
HB_API hb_status hb_brace(hb_brace_kind kind, size_t n, const int* degrees, const hb_series* f, hb_flavor flavor,
                          hb_expr** out);
HB_API hb_status hb_pullback(size_t n, const int* degrees, const hb_series* f, hb_flavor flavor, hb_expr** out);

HB_API hb_status hb_expr_render(const hb_expr* e, hb_format format, char** out);
HB_API hb_status hb_expr_parse_json(const char* text, hb_expr** out);
HB_API int hb_expr_equal(const hb_expr* a, const hb_expr* b);
HB_API size_t hb_expr_term_count(const hb_expr* e);
HB_API void hb_expr_free(hb_expr* e);

/* ---- verification ---- */
typedef struct hb_verify_options {
    size_t n_max;         /* 0: suite default */
    size_t r_max;         /* 0: suite default */
    size_t order;         /* series truncation order */
    size_t samples;       /* random series per flavor */
    uint64_t seed;
    const char* family;   /* NULL or "": suite default */
    const char* mutation; /* NULL or "": none */
} hb_verify_options;

HB_API void hb_verify_options_init(hb_verify_options* options);
/* suite: pullback-koszul | pullback-borjeson | pullback-general | linf |
 * ainf | c-identity | series-inverse. A failed check is not an error: the
 * call returns HB_OK and hb_report_passed() is 0. */
HB_API hb_status hb_verify(const char* suite, const hb_verify_options* options, hb_report** out);
HB_API int hb_report_passed(const hb_report* r);
HB_API size_t hb_report_instances(const hb_report* r);
HB_API hb_status hb_report_summary(const hb_report* r, char** out);
/* Empty string when the report passed. */
HB_API hb_status hb_report_failure(const hb_report* r, hb_format format, char** out);
HB_API void hb_report_free(hb_report* r);

#ifdef __cplusplus
}
#endif

#endif /* HBRACES_H */
