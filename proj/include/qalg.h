/*
 * C interface to the quantized function algebra library. All functions
 * return a qalg_status; results come back through out-parameters. Element
 * handles are opaque and must be released with qalg_elem_free; strings
 * returned by *_json / *_pretty calls are heap-allocated and must be
 * released with qalg_string_free. On failure the out-parameters are left
 * untouched and qalg_last_error() describes the problem for the calling
 * thread.
 */
#ifndef QALG_H
#define QALG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qalg_elem qalg_elem;

typedef enum qalg_status {
  QALG_OK = 0,
  QALG_ERR_INDEX_OUT_OF_RANGE = 1,
  QALG_ERR_SIZE_MISMATCH = 2,
  QALG_ERR_DIVISION_BY_ZERO = 3,
  QALG_ERR_NOT_DIVISIBLE = 4,
  QALG_ERR_SYNTAX = 5,
  QALG_ERR_NEGATIVE_POWER_OF_GENERATOR = 6,
  QALG_ERR_NOT_COINVARIANT = 7,
  QALG_ERR_INCONSISTENT_CONVENTION = 8,
  QALG_ERR_BAD_ARGUMENT = 9,
  QALG_ERR_INTERNAL = 10
} qalg_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* qalg_last_error(void);

void qalg_elem_free(qalg_elem* e);
void qalg_string_free(char* s);

/* --- construction ----------------------------------------------------- */

/* Expression grammar: x[i,j], detq, q, rationals a/b, + - * ^, parens. */
qalg_status qalg_parse(const char* text, int n, qalg_elem** out);
qalg_status qalg_elem_from_json(const char* json_text, qalg_elem** out);
qalg_status qalg_det(int n, qalg_elem** out);
/* Quantum minor [rows|cols]; rows/cols are k indices each, 1-based. */
qalg_status qalg_minor(int n, const int* rows, const int* cols, int k,
                       qalg_elem** out);
qalg_status qalg_sigma(int n, int i, qalg_elem** out);
qalg_status qalg_tau(int n, int i, qalg_elem** out);

/* --- arithmetic and comparison ---------------------------------------- */

qalg_status qalg_add(const qalg_elem* a, const qalg_elem* b, qalg_elem** out);
qalg_status qalg_sub(const qalg_elem* a, const qalg_elem* b, qalg_elem** out);
qalg_status qalg_mul(const qalg_elem* a, const qalg_elem* b, qalg_elem** out);
qalg_status qalg_equal(const qalg_elem* a, const qalg_elem* b, int* out);
/* Equality in the quotient identifying det_q with 1. */
qalg_status qalg_sl_equal(const qalg_elem* a, const qalg_elem* b, int* out);
int qalg_elem_n(const qalg_elem* e);

/* --- rendering --------------------------------------------------------- */

qalg_status qalg_elem_to_json(const qalg_elem* e, char** out);
qalg_status qalg_elem_pretty(const qalg_elem* e, char** out);

/* --- coactions and coinvariants ---------------------------------------- */

/* kind: lambda | rho | alpha | beta | alpha_bar | beta_bar.
 * target: gl | sl. Output is the tensor JSON. */
qalg_status qalg_coact_json(const qalg_elem* e, const char* kind,
                            const char* target, char** out);
qalg_status qalg_is_coinvariant(const qalg_elem* e, const char* kind,
                                const char* target, int* out);
/* {"degree": d, "dim": k, "basis": [element JSON, ...]} */
qalg_status qalg_coinv_basis_json(const char* kind, const char* target, int n,
                                  int degree, char** out);
/* JSON integer array dims[0..max_degree]. */
qalg_status qalg_hilbert_json(const char* kind, const char* target, int n,
                              int max_degree, char** out);
/* JSON array of element JSON, the truncated minimal generating set. */
qalg_status qalg_generators_json(const char* kind, const char* target, int n,
                                 int max_degree, char** out);

/* --- embedding ---------------------------------------------------------- */

/* {"components": {"<z-degree>": element JSON}} for iota. */
qalg_status qalg_embed_json(const qalg_elem* e, char** out);

/* --- property suites ----------------------------------------------------- */

/* Runs one named check suite (relations, hopf, coact, rform, coinv,
 * embed, pi-cocomm, all). JSON report in *out; *all_pass is 1/0. */
qalg_status qalg_check_suite_json(const char* suite, int n,
                                  unsigned long seed, char** out,
                                  int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* QALG_H */
