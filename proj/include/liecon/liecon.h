/*
 * C API for the Lie-algebra contraction toolkit.
 *
 * All analysis objects are opaque handles; reports come back as
 * heap-allocated JSON (and CSV where noted) strings that the caller frees
 * with liecon_string_free. Return codes follow the CLI exit convention:
 * LIECON_OK means the computation ran and the verdict is positive,
 * LIECON_VERDICT_FAIL means it ran but the verdict is negative (not a
 * realization, infeasible, a failed trend), LIECON_ERROR means the inputs
 * could not be processed; liecon_last_error() then describes why.
 */
#ifndef LIECON_H
#define LIECON_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    LIECON_OK = 0,
    LIECON_VERDICT_FAIL = 1,
    LIECON_ERROR = 2
} liecon_rc;

typedef struct liecon_algebra liecon_algebra;
typedef struct liecon_family liecon_family;

/* Thread-local message for the most recent LIECON_ERROR. */
const char* liecon_last_error(void);

void liecon_string_free(char* s);

/* `spec` is a builtin name ("a:5", "a0:6", "abelian:4", "heisenberg")
 * or the path of a JSON algebra file. */
liecon_rc liecon_algebra_load(const char* spec, liecon_algebra** out);
void liecon_algebra_free(liecon_algebra* a);
int liecon_algebra_dim(const liecon_algebra* a);

/* `spec` is "builtin:paper" (uses dim_for_builtin) or a JSON family file. */
liecon_rc liecon_family_load(const char* spec, int dim_for_builtin, liecon_family** out);
void liecon_family_free(liecon_family* f);

/* Jacobi membership; OK iff no defects. */
liecon_rc liecon_check(const liecon_algebra* a, char** json_out);

/* Realization verdict and boundedness for the family `u`. */
liecon_rc liecon_verify(const liecon_algebra* from, const liecon_algebra* to,
                        const liecon_family* u, char** json_out);

/* Diagonal (generalized Inonu-Wigner) feasibility; `require` is an
 * optional comma-separated list of extra rows like "a5>=0" (NULL for
 * none). VERDICT_FAIL when infeasible or when a required row is forced
 * to fail. */
liecon_rc liecon_giw(const liecon_algebra* from, const liecon_algebra* to, const char* require,
                     char** json_out);

/* Full unboundedness certificate for (a(n), a0(n)) along the eps
 * schedule (rational strings, strictly decreasing in (0, 1]).
 * csv_out may be NULL. */
liecon_rc liecon_certify(const liecon_family* u, int n, const char* const* eps, int n_eps,
                         double tol, char** json_out, char** csv_out);

/* Derivation and center dimensions. */
liecon_rc liecon_invariants(const liecon_algebra* a, char** json_out);

/* Bounded-radius residual scan; config_json mirrors the experiment
 * config file (NULL for defaults with radii {10, 100, 1000}).
 * csv_out may be NULL. */
liecon_rc liecon_experiment(const liecon_algebra* from, const liecon_algebra* to,
                            const char* config_json, char** json_out, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* LIECON_H */
