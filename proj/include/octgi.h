/* octgi: exact computation with graded Cayley-Dickson algebras over Q.
 *
 * C interface over the C++ core: opaque context handle, integer status
 * codes, malloc'd output strings released with octgi_string_free. All
 * functions are safe to call from multiple threads on distinct contexts.
 *
 * Status codes:
 *   OCTGI_OK             operation succeeded; boolean queries answered yes
 *   OCTGI_CHECKED_FALSE  the query ran and answered no (non-identity,
 *                        non-member, deficit found, acceptance failure)
 *   OCTGI_ERR_PARSE      malformed expression or config
 *   OCTGI_ERR_ARG        invalid argument or precondition violation
 *   OCTGI_ERR_INTERNAL   internal invariant breach
 */
#ifndef OCTGI_H
#define OCTGI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define OCTGI_OK 0
#define OCTGI_CHECKED_FALSE 1
#define OCTGI_ERR_PARSE 2
#define OCTGI_ERR_ARG 4
#define OCTGI_ERR_INTERNAL 3

typedef struct octgi_ctx octgi_ctx;

/* Creates a context from a line-oriented `key=value` config (rank,
 * alpha1..alpha3, grading). NULL or empty config gives the split octonions
 * (rank 3, all alphas 1). Returns NULL on error; the message is then
 * available from octgi_last_error(). */
octgi_ctx* octgi_ctx_new(const char* config_text);
void octgi_ctx_free(octgi_ctx* ctx);

/* Message of the most recent failure on this thread. */
const char* octgi_last_error(void);

void octgi_string_free(char* s);
const char* octgi_version(void);

/* Default grading of the context ("z2_3" or "z2_2"), from the config. */
const char* octgi_default_grading(octgi_ctx* ctx);

/* Normal form of an expression under the grading ("z2_3" or "z2_2").
 * *out receives the canonical result; with trace != 0 it is followed by
 * one "ruleName @ position" line per rewrite step. A non-normal result
 * (budget exhausted) is flagged on the first line. */
int octgi_normalize(octgi_ctx* ctx, const char* grading, const char* expr, int trace,
                    char** out);

/* OCTGI_OK if the expression is a graded identity of the context algebra,
 * OCTGI_CHECKED_FALSE with a witness description in *witness_out if not. */
int octgi_check_identity(octgi_ctx* ctx, const char* grading, const char* expr,
                         char** witness_out);

/* Membership of a multilinear expression in the T-ideal span of a
 * generator set: "I" for (5)-(14), "I16" for (5)-(14)+(16), "z2_3" for
 * (1)-(4). max_degree caps the multidegree (0 means the library cap). */
int octgi_member(octgi_ctx* ctx, const char* gens, const char* expr, int max_degree);

/* Certification sweep: consequence span vs identity kernel for every grade
 * assignment of degrees 1..max_degree. *tsv_out receives the TSV report
 * (grades, dim_ambient, dim_cons, dim_id, equal). Returns
 * OCTGI_CHECKED_FALSE when any assignment shows a deficit. use_orbits != 0
 * computes one representative per grade multiset. */
int octgi_certify(octgi_ctx* ctx, const char* grading, const char* gens, int max_degree,
                  int use_orbits, char** tsv_out);

/* Structure-constant table. as_quadruples == 0: 2^k x 2^k tab-separated
 * signed basis labels; != 0: "i<TAB>j<TAB>coefficient<TAB>basis" rows. */
int octgi_mult_table(octgi_ctx* ctx, int as_quadruples, char** out);

/* The Z2-graded M_2 coda report (restricted rules, memberships, the
 * split-quaternion isomorphism table). */
int octgi_derive_m2(octgi_ctx* ctx, char** out);

/* Runs the acceptance suite; *report_out gets one pass/fail line per
 * criterion. OCTGI_OK iff all criteria pass. */
int octgi_selftest(octgi_ctx* ctx, uint64_t seed, int include_degree5, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* OCTGI_H */
