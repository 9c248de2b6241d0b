/* C interface to the subalgebra-basis library.
 *
 * All objects are opaque handles; every function returns a status code.
 * Result text is UTF-8, NUL-terminated, owned by the result handle.
 */
#ifndef SUBALG_H
#define SUBALG_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  SUBALG_OK = 0,
  SUBALG_PARSE_ERROR = 2,    /* parse or validation failure */
  SUBALG_ITERATION_CAP = 3,  /* construction hit the pass cap */
  SUBALG_INTERNAL_ERROR = 5
};

typedef struct subalg_problem subalg_problem;
typedef struct subalg_result subalg_result;

typedef struct subalg_options {
  int json;          /* nonzero: JSON report instead of text */
  int trail;         /* nonzero: include per-pass trail */
  int certificates;  /* nonzero: include certificates */
  int max_passes;    /* 0: problem file value or the built-in default */
  const char* poly;  /* member/reduce query; may be NULL */
} subalg_options;

/* Parse a problem from text or a file. On success *out must be freed with
 * subalg_problem_free. On failure *out is NULL and subalg_last_error()
 * describes the problem. */
int subalg_problem_parse(const char* text, subalg_problem** out);
int subalg_problem_parse_file(const char* path, subalg_problem** out);
void subalg_problem_free(subalg_problem* p);

/* Run one of: "sagbi", "sg", "syz", "reduce", "member". opts may be NULL.
 * Returns SUBALG_OK or SUBALG_ITERATION_CAP with *out set (free with
 * subalg_result_free), or an error code with *out NULL. */
int subalg_run(const subalg_problem* p, const char* command, const subalg_options* opts,
               subalg_result** out);

const char* subalg_result_text(const subalg_result* r);
int subalg_result_status(const subalg_result* r);
void subalg_result_free(subalg_result* r);

/* Most recent error in this thread. Line/column are 0 when not applicable. */
const char* subalg_last_error(void);
int subalg_last_error_line(void);
int subalg_last_error_column(void);

const char* subalg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SUBALG_H */
