/* nswopt: Nash-social-welfare optimization under capacity constraints.
 *
 * C interface over the solver core. All objects are opaque handles created
 * and destroyed through this API; every function that can fail returns an
 * nsw_status and leaves a thread-local message readable via nsw_last_error().
 * Strings returned through char** are heap-allocated; release them with
 * nsw_string_free().
 */
#ifndef NSWOPT_H
#define NSWOPT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nsw_status {
  NSW_OK = 0,
  NSW_ERROR_INVALID_INPUT = 1, /* malformed arguments, files, or model mismatch */
  NSW_ERROR_INFEASIBLE = 2,    /* structurally unsolvable input */
  NSW_ERROR_RESOURCE = 3,      /* enumeration or column budget exceeded */
  NSW_ERROR_INTERNAL = 4
} nsw_status;

typedef struct nsw_instance nsw_instance;
typedef struct nsw_result nsw_result;

/* ---- Instances ------------------------------------------------------- */

/* Parses the JSON instance format (see README). */
nsw_status nsw_instance_from_json(const char* json_text, nsw_instance** out);
nsw_status nsw_instance_from_file(const char* path, nsw_instance** out);

/* Deterministic generation from a JSON parameter object, e.g.
 * {"family":"one-sided","n":3,"m":6,"kind":"additive","seed":7} or
 * {"preset":"footnote","n":3,"k":2,"c":"5"}. */
nsw_status nsw_instance_generate(const char* params_json, nsw_instance** out);

nsw_status nsw_instance_to_json(const nsw_instance* inst, char** out_json);
void nsw_instance_free(nsw_instance* inst);

/* ---- Solvers --------------------------------------------------------- */

/* options_json: {"alg":"one-sided"|"two-sided"|"ptas"|"weighted"|"combined",
 *                "eps":0.1, "seed":7, "trials":100}
 * The algorithm must match the instance model. */
nsw_status nsw_solve(const nsw_instance* inst, const char* options_json, nsw_result** out);

/* Brute-force optimum; options_json: {"budget":10000000} (also settable via
 * the NSWOPT_BUDGET environment variable). */
nsw_status nsw_exact(const nsw_instance* inst, const char* options_json, nsw_result** out);

/* Runs the solver, then re-derives its optimality conditions independently
 * (local optimality / residual cycles / dual feasibility). The result JSON
 * carries one entry per check. */
nsw_status nsw_verify(const nsw_instance* inst, const char* options_json, nsw_result** out);

/* ---- Results --------------------------------------------------------- */

nsw_status nsw_result_to_json(const nsw_result* result, char** out_json);
double nsw_result_objective(const nsw_result* result); /* NSW of the solution */
void nsw_result_free(nsw_result* result);

/* ---- Misc ------------------------------------------------------------ */

const char* nsw_last_error(void); /* message of the last failure on this thread */
const char* nsw_status_name(nsw_status status);
void nsw_string_free(char* text);
const char* nsw_version(void);

#ifdef __cplusplus
}
#endif

#endif /* NSWOPT_H */
