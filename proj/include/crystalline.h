/* C interface to the crystalline workbench shared library.
 *
 * All report functions take UTF-8 JSON input text and return newly allocated
 * strings through out-parameters; release them with crx_string_free(). On a
 * nonzero status, crx_last_error() describes the failure (thread-local).
 */
#ifndef CRYSTALLINE_H
#define CRYSTALLINE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crx_status {
    CRX_OK = 0,
    CRX_E_PARSE = 1,          /* malformed or ill-typed input */
    CRX_E_NOT_A_CRYSTAL = 2,  /* determinant vanishes at the working precision */
    CRX_E_PRECISION = 3,      /* precision cap exhausted or insufficient */
    CRX_E_CAP = 4,            /* configured resource cap exceeded */
    CRX_E_INVALID = 5,        /* invalid argument or precondition */
    CRX_E_INTERNAL = 6
} crx_status;

/* Opaque option set; keys mirror the CLI flags. */
typedef struct crx_options crx_options;

crx_options* crx_options_new(void);
void crx_options_free(crx_options* opt);

/* Integer keys: "degree", "jobs", "precision", "precision_cap", "seed",
 * "plot" (0/1), "cross_check" (0/1), "step1" (0/1), "step1_a", "step1_b".
 * Unknown key -> CRX_E_INVALID. */
crx_status crx_options_set_int(crx_options* opt, const char* key, long long value);

/* String keys: "suite" (may be set repeatedly to accumulate suites). */
crx_status crx_options_set_str(crx_options* opt, const char* key, const char* value);

/* Last error message on this thread; empty string if none. */
const char* crx_last_error(void);

/* Hodge/Newton/break-point/p-rank report for a crystal file. */
crx_status crx_polygon_report(const char* input_json, const crx_options* opt, char** out_json);

/* Stratification report for a family file. out_svg may be NULL; with the
 * "plot" option set it receives the overlaid polygon drawing. */
crx_status crx_strata_report(const char* input_json, const crx_options* opt,
                             char** out_json, char** out_svg);

/* Artin-Schreier dimension (instance input) or Y_t strata (family input). */
crx_status crx_asdim_report(const char* input_json, const crx_options* opt, char** out_json);

/* Run verification suites; *out_passed is 1 when every suite passed. */
crx_status crx_verify_run(const crx_options* opt, char** out_json, int* out_passed);

/* JSON array of the registered suite names. */
crx_status crx_suite_list(char** out_json);

void crx_string_free(char* s);

const char* crx_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CRYSTALLINE_H */
