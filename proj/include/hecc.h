#ifndef HECC_H
#define HECC_H

/*
 * C interface to the hyperelliptic divisor / cohomology engine.
 *
 * Curves are opaque handles created from a spec text (see the README for the
 * format). Every other exchange is text: divisor literals in, reports and
 * certificates (JSON) out. Returned strings are heap-allocated; release them
 * with hecc_free_string. All functions are safe to call from multiple
 * threads on distinct handles; a failure message for the calling thread is
 * available via hecc_last_error until the thread's next hecc_* call.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hecc_curve hecc_curve;

/* status codes; the CLI maps these onto its exit codes */
enum hecc_status {
    HECC_OK = 0,
    HECC_ERR_CHECK = 1,      /* a certificate check failed or disagreed */
    HECC_ERR_SEARCH = 2,     /* a documented search budget was exhausted */
    HECC_ERR_PARSE = 3,      /* parse or validation failure in any input */
    HECC_ERR_INTERNAL = 4
};

const char* hecc_version(void);

/* Parse and validate a curve spec (key = value lines). On success stores a
 * new handle in *out and returns HECC_OK. */
int hecc_curve_parse(const char* spec_text, hecc_curve** out);
void hecc_curve_free(hecc_curve* curve);

/* genus of the curve; -1 on a null handle */
int hecc_curve_genus(const hecc_curve* curve);

/* Reports. as_json != 0 selects machine-readable output. */
int hecc_genus_report(const hecc_curve* curve, int as_json, char** out);
int hecc_rr_report(const hecc_curve* curve, const char* divisor, int as_json, char** out);
int hecc_h1_report(const hecc_curve* curve, const char* divisor, int as_json, char** out);

/* Flatness evaluation of bundle expressions from a definitions script. */
int hecc_flat_report(const hecc_curve* curve, const char* definitions, int as_json, char** out);

/* Run the construction and verification pipeline. The certificate JSON is
 * stored in *cert_json whenever the pipeline completes, including when a
 * check fails (status HECC_ERR_CHECK then). The curve spec's seed is used
 * unless seed >= 0 overrides it. */
int hecc_construct(const hecc_curve* curve_spec_handle, long long seed, char** cert_json);

/* Recompute every check of a certificate from its recorded inputs and
 * compare with the recorded outcomes. HECC_OK only when everything agrees
 * and the construction passes. A human-readable report is stored in *report
 * when non-NULL. */
int hecc_check(const char* cert_json, char** report);

const char* hecc_last_error(void);
void hecc_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HECC_H */
