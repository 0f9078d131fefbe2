/* blochcomp - numerical analysis of composition operators on harmonic Bloch
 * spaces of the unit disk.
 *
 * C interface to the shared library: opaque handles, integer status codes,
 * library-owned strings. All functions are thread-safe for distinct handles;
 * a handle must not be used concurrently from multiple threads.
 */
#ifndef BLOCHCOMP_H
#define BLOCHCOMP_H

#ifdef __cplusplus
extern "C" {
#endif

#define BLOCHCOMP_API_VERSION 1

typedef enum bc_status {
  BC_OK = 0,
  BC_ERR_ARGUMENT = 1, /* null pointer or bad option value */
  BC_ERR_PARSE = 2,    /* malformed or semantically invalid spec document */
  BC_ERR_DOMAIN = 3,   /* refused input: unknown command, not a self-map, ... */
  BC_ERR_INTERNAL = 4
} bc_status;

/* A parsed and validated map-specification document (JSON text). */
typedef struct bc_document bc_document;

/* The outcome of one command: report text, named CSV artifacts, exit code. */
typedef struct bc_result bc_result;

/* Optional overrides; call bc_options_init first, then set has_* = 1 for each
 * field you assign. */
typedef struct bc_options {
  double alpha;
  double c;
  double r;
  double r0;
  int kmax;
  int has_alpha;
  int has_c;
  int has_r;
  int has_r0;
  int has_kmax;
} bc_options;

void bc_options_init(bc_options* options);

/* Parses a spec document. On failure returns a non-OK status and, when
 * error_message is non-null, stores a message to free with bc_string_free. */
bc_status bc_document_parse(const char* json_text, bc_document** out,
                            char** error_message);
void bc_document_free(bc_document* doc);

/* Runs one of: "classify", "tau-profile", "omega", "closed-range",
 * "seminorm", "net-check". options may be null. */
bc_status bc_run(const bc_document* doc, const char* command,
                 const bc_options* options, bc_result** out,
                 char** error_message);

/* 0 = definite outcome, 2 = inconclusive at the given budget. */
int bc_result_exit_code(const bc_result* result);

/* Report text (UTF-8, newline terminated). Owned by the result. */
const char* bc_result_text(const bc_result* result);

int bc_result_artifact_count(const bc_result* result);
const char* bc_result_artifact_name(const bc_result* result, int index);
const char* bc_result_artifact_data(const bc_result* result, int index);

void bc_result_free(bc_result* result);
void bc_string_free(char* text);

const char* bc_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BLOCHCOMP_H */
