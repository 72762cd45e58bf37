#ifndef WITTKERNEL_H
#define WITTKERNEL_H

/*
 * wittkernel C API.
 *
 * Exact-arithmetic decision procedures for function fields of conics,
 * quadric surfaces and Severi-Brauer varieties over Q, plus genus-one
 * torsor isogeny arithmetic.  All objects are opaque handles; every
 * function returns a status code and writes results through out
 * parameters.  On failure wk_last_error() holds a message for the
 * calling thread.
 *
 * Text conventions (shared with the CLI):
 *   rationals       "3", "-2", "3/5"
 *   forms           comma-separated rationals: "1,-2,3/5"
 *   places          "inf" or a prime: "2", "7"
 *   Brauer classes  "7:1/3,13:2/3", "2:1/2,inf:1/2", "0" for the zero class
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WITTKERNEL_API __declspec(dllexport)
#else
#define WITTKERNEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wk_status {
    WK_OK = 0,
    WK_EPARSE = 2,   /* malformed input text */
    WK_EDOMAIN = 3,  /* input outside an operation's domain */
    WK_ETHEOREM = 4, /* internal consistency check failed: report a bug */
    WK_EINVAL = 5    /* null pointer or invalid handle */
} wk_status;

WITTKERNEL_API const char* wk_version(void);

/* Message for the most recent failure on this thread; never NULL. */
WITTKERNEL_API const char* wk_last_error(void);

/* Free any string returned through a char** out parameter. */
WITTKERNEL_API void wk_string_free(char* s);

/* ---- scalar number theory ------------------------------------------- */

/* Squarefree representative of r in Q^x/Q^x2, as decimal text. */
WITTKERNEL_API wk_status wk_square_class(const char* r, char** out);

/* Ascending prime factors with multiplicity, comma-separated. */
WITTKERNEL_API wk_status wk_factorize(int64_t n, char** out);

/* 1 iff r is a square in the completion of Q at the place. */
WITTKERNEL_API wk_status wk_is_local_square(const char* r, const char* place, int* out);

/* Hilbert symbol (a,b) at the place, +1 or -1. */
WITTKERNEL_API wk_status wk_hilbert_symbol(const char* a, const char* b,
                                           const char* place, int* out);

/* Brute-force solvability oracle for the same symbol. */
WITTKERNEL_API wk_status wk_hilbert_oracle(const char* a, const char* b,
                                           const char* place, int* out);

/* 1 iff the product of symbols over the relevant places is +1 (always,
 * for a correct build; 0 signals a library bug). */
WITTKERNEL_API wk_status wk_reciprocity_check(const char* a, const char* b, int* out);

/* ---- quadratic forms ------------------------------------------------- */

typedef struct wk_form wk_form;

WITTKERNEL_API wk_status wk_form_parse(const char* text, wk_form** out);
WITTKERNEL_API void wk_form_free(wk_form* f);
WITTKERNEL_API wk_status wk_form_rank(const wk_form* f, int* out);
WITTKERNEL_API wk_status wk_form_to_string(const wk_form* f, char** out);
WITTKERNEL_API wk_status wk_form_discriminant(const wk_form* f, char** out);
WITTKERNEL_API wk_status wk_form_is_isotropic(const wk_form* f, int* out);
WITTKERNEL_API wk_status wk_forms_equivalent(const wk_form* f, const wk_form* g, int* out);
WITTKERNEL_API wk_status wk_forms_similar(const wk_form* f, const wk_form* g, int* out);

/* ---- classification reports ------------------------------------------ */

typedef struct wk_report wk_report;

WITTKERNEL_API void wk_report_free(wk_report* r);
WITTKERNEL_API wk_status wk_report_json(const wk_report* r, char** out);
WITTKERNEL_API wk_status wk_report_text(const wk_report* r, char** out);

WITTKERNEL_API wk_status wk_cmd_hilbert(const char* a, const char* b,
                                        const char* place_or_null, wk_report** out);
WITTKERNEL_API wk_status wk_cmd_conic_classify(const char* a, const char* b,
                                               wk_report** out);
WITTKERNEL_API wk_status wk_cmd_conic_compare(const char* a, const char* b,
                                              const char* a2, const char* b2,
                                              wk_report** out);
WITTKERNEL_API wk_status wk_cmd_quadric_classify(const char* form, wk_report** out);
WITTKERNEL_API wk_status wk_cmd_quadric_compare(const char* form1, const char* form2,
                                                wk_report** out);
WITTKERNEL_API wk_status wk_cmd_quadric_kernel(const char* form,
                                               const char* ext_or_null, wk_report** out);
WITTKERNEL_API wk_status wk_cmd_sb_compare(const char* cls1, const char* cls2,
                                           int64_t dim, wk_report** out);
WITTKERNEL_API wk_status wk_cmd_sb_vs_quadric(const char* cls, const char* form,
                                              wk_report** out);
WITTKERNEL_API wk_status wk_cmd_genus1_orbit(int64_t modulus, int64_t residue,
                                             wk_report** out);
WITTKERNEL_API wk_status wk_cmd_genus1_gate(int64_t period, int non_cm,
                                            int isolated_or_finite, wk_report** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WITTKERNEL_H */
