/* C interface to the pastrev library: exact rational vectors, matrices and
 * the paste/reverse calculus, behind opaque handles and status codes.
 *
 * Conventions:
 *   - Every fallible call returns pr_status; PR_OK is 0.
 *   - Output handles/strings are written through out-parameters and are only
 *     valid when the call returned PR_OK. The caller owns them and releases
 *     them with the matching pr_*_free / pr_string_free.
 *   - pr_last_error() returns a thread-local message for the most recent
 *     failing call on this thread.
 *   - Values travel as JSON text; rationals are canonical "p" / "p/q"
 *     strings. Matrix: {"rows":n,"cols":m,"data":[["1","1/2"],...]},
 *     vector: {"data":[...]}, polynomial: {"coeffs":[...]} ascending.
 */

#ifndef PASTREV_H
#define PASTREV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pr_matrix pr_matrix;
typedef struct pr_vector pr_vector;
typedef struct pr_poly pr_poly;

typedef enum pr_status {
  PR_OK = 0,
  PR_ERR_NULL_ARG,
  PR_ERR_PARSE,
  PR_ERR_SHAPE,
  PR_ERR_LENGTH_MISMATCH,
  PR_ERR_INDEX,
  PR_ERR_INVALID_DIMENSION,
  PR_ERR_NOT_SQUARE,
  PR_ERR_SINGULAR,
  PR_ERR_NOT_EIGENVALUE,
  PR_ERR_ZERO_STATE,
  PR_ERR_DIVIDE_BY_ZERO,
  PR_ERR_NO_MEMORY,
  PR_ERR_INTERNAL
} pr_status;

typedef enum pr_axis { PR_AXIS_ROWS = 0, PR_AXIS_COLS = 1, PR_AXIS_FULL = 2 } pr_axis;

typedef enum pr_paste_mode {
  PR_PASTE_ROWS = 0,
  PR_PASTE_COLS = 1,
  PR_PASTE_BLOCKS = 2
} pr_paste_mode;

const char* pr_status_name(pr_status status);
const char* pr_last_error(void);
void pr_string_free(char* text);

/* ------------------------------------------------------------------ */
/* matrices                                                            */

pr_status pr_matrix_from_json(const char* text, pr_matrix** out);
/* indent < 0 emits compact JSON, otherwise pretty-printed. */
pr_status pr_matrix_to_json(const pr_matrix* m, int indent, char** out);
void pr_matrix_free(pr_matrix* m);

pr_status pr_matrix_shape(const pr_matrix* m, int* rows, int* cols);
/* 0-based indices; the entry is returned as a rational string. */
pr_status pr_matrix_entry(const pr_matrix* m, int row, int col, char** out);
pr_status pr_matrix_equal(const pr_matrix* a, const pr_matrix* b, int* out);

pr_status pr_matrix_reverse(const pr_matrix* m, pr_axis axis, pr_matrix** out);
pr_status pr_matrix_paste(const pr_matrix* a, const pr_matrix* b, pr_paste_mode mode,
                          pr_matrix** out);
pr_status pr_matrix_transpose(const pr_matrix* m, pr_matrix** out);

/* Palindromic/antipalindromic projection pair along an axis. */
pr_status pr_matrix_decompose(const pr_matrix* m, pr_axis axis, pr_matrix** palindromic,
                              pr_matrix** antipalindromic);
/* Joint column/row parity components pp, pa, ap, aa (sum to the input). */
pr_status pr_matrix_quad_decompose(const pr_matrix* m, pr_matrix** pp, pr_matrix** pa,
                                   pr_matrix** ap, pr_matrix** aa);

pr_status pr_matrix_det(const pr_matrix* m, char** out);
pr_status pr_matrix_trace(const pr_matrix* m, char** out);
pr_status pr_matrix_inverse(const pr_matrix* m, pr_matrix** out);
pr_status pr_matrix_adjugate(const pr_matrix* m, pr_matrix** out);
pr_status pr_matrix_charpoly(const pr_matrix* m, pr_poly** out);

/* The n x n exchange (anti-identity) matrix. */
pr_status pr_reversing_matrix(int n, pr_matrix** out);
/* Its eigenstructure: diagonal J of +-1 blocks and symmetric P with
 * P J P^-1 equal to the exchange matrix. */
pr_status pr_reversing_jordan(int n, pr_matrix** j, pr_matrix** p);

/* ------------------------------------------------------------------ */
/* vectors                                                             */

pr_status pr_vector_from_json(const char* text, pr_vector** out);
pr_status pr_vector_to_json(const pr_vector* v, int indent, char** out);
void pr_vector_free(pr_vector* v);

pr_status pr_vector_size(const pr_vector* v, int* out);
pr_status pr_vector_reverse(const pr_vector* v, pr_vector** out);
pr_status pr_vector_paste(const pr_vector* a, const pr_vector* b, pr_vector** out);
pr_status pr_vector_decompose(const pr_vector* v, pr_vector** palindromic,
                              pr_vector** antipalindromic);

/* ------------------------------------------------------------------ */
/* polynomials                                                         */

pr_status pr_poly_to_json(const pr_poly* p, int indent, char** out);
void pr_poly_free(pr_poly* p);

/* ------------------------------------------------------------------ */
/* randomized verification suite                                       */

typedef struct pr_verify_config {
  uint64_t seed;
  int trials_per_property;
  int max_dim;
  int entry_bound;
  /* comma-separated check ids, NULL or "" for everything */
  const char* only;
  /* nonzero enables the deliberately-false negative controls */
  int negative_controls;
} pr_verify_config;

/* Runs the registered identity checks; writes the JSON report and sets
 * *overall_pass to 1 when no executed check failed. */
pr_status pr_verify_run(const pr_verify_config* config, int indent, char** report_json,
                        int* overall_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PASTREV_H */
