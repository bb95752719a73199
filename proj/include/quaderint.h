/* quaderint.h — C interface to the quaderint measure-and-integration engine.
 *
 * Usage: create a job for a subcommand, attach structured-text documents and
 * numeric parameters, run it, read the CSV result:
 *
 *     qi_job* job = qi_job_new("integrate");
 *     qi_job_set_input(job, "stepfn",  "stepfn ambient [0,1] term 1 on [0,1]");
 *     qi_job_set_input(job, "measure", "measure volume(1)");
 *     if (qi_job_run(job) == QI_OK) puts(qi_job_output(job));
 *     else fprintf(stderr, "%s\n", qi_last_error());
 *     qi_job_free(job);
 *
 * Document formats and per-subcommand slots/columns are described in the
 * project README. Output is byte-identical for identical (inputs, params,
 * seed). All functions are thread-safe as long as each job is used by one
 * thread at a time.
 */
#ifndef QUADERINT_H
#define QUADERINT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QI_BUILDING_SHARED)
#define QI_API __attribute__((visibility("default")))
#else
#define QI_API
#endif

/* Status codes. */
#define QI_OK 0
#define QI_ERR_CONTRACT 1 /* violated precondition (named in qi_last_error) */
#define QI_ERR_PARSE 2    /* malformed document text (line/column in message) */

typedef struct qi_job qi_job;

QI_API const char* qi_version(void);

/* Creates a job for one subcommand: integrate, bracket, fubini, jordan,
 * stieltjes, discrete, lp-norm, ineq-check, gram-schmidt, fourier, project,
 * fixpoint, neumann, specrad, gauge, abspoly. Unknown names are reported by
 * qi_job_run. Returns NULL only on allocation failure. Free with
 * qi_job_free (NULL-safe). */
QI_API qi_job* qi_job_new(const char* subcommand);
QI_API void qi_job_free(qi_job* job);

/* Attaches a document under a slot name: stepfn, measure, oracle, elements,
 * contraction, matrix, halfspaces, points, region, or suite (the suite slot
 * takes a bare suite name, not a document). Re-setting a slot replaces it. */
QI_API int qi_job_set_input(qi_job* job, const char* slot, const char* text);

/* Numeric parameters: depth, kmax, p, q, tol. Unset parameters take the
 * subcommand's documented default. */
QI_API int qi_job_set_param(qi_job* job, const char* name, double value);
QI_API int qi_job_set_seed(qi_job* job, uint64_t seed);

/* Runs the job. Returns QI_OK, QI_ERR_CONTRACT, or QI_ERR_PARSE. */
QI_API int qi_job_run(qi_job* job);

/* CSV output of the most recent successful run, owned by the job and valid
 * until the next qi_job_run or qi_job_free. Empty string if the job has not
 * run successfully. */
QI_API const char* qi_job_output(const qi_job* job);

/* Message for the most recent failure on this thread; never NULL. Reset to
 * the empty string by any successful call. */
QI_API const char* qi_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* QUADERINT_H */
