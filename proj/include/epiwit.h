/* epiwit: exact witness certificates for low-dimensional epimorphic
 * subgroups of simple algebraic groups, with a replayable verifier.
 *
 * All functions return an epw_status code; on any non-EPW_OK return,
 * epw_last_error() describes the problem (thread-local storage).
 * Strings returned through out-parameters are owned by the caller and
 * released with epw_free_string; handles with epw_cert_free /
 * epw_report_free.
 */
#ifndef EPIWIT_H
#define EPIWIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum epw_status {
  EPW_OK = 0,
  EPW_EINVAL = 1,       /* invalid arguments (bad type/rank/prime/level) */
  EPW_REDIRECT = 2,     /* valid input served by a different construction */
  EPW_OUT_OF_SCOPE = 3, /* valid input outside the constructions' scope */
  EPW_ESCHEMA = 4,      /* certificate JSON violates the schema */
  EPW_EVERIFY = 5,      /* verification ran and failed */
  EPW_EGUARD = 6,       /* an internal guard blocked a requested check */
  EPW_EINTERNAL = 7     /* unexpected internal error */
} epw_status;

typedef struct epw_cert epw_cert;
typedef struct epw_report epw_report;

/* Thread-local message for the most recent failing call. */
const char* epw_last_error(void);

/* Construct the witness certificate for (type, rank, p, a).
 * type in {'A'..'G'}, p prime, a >= 1.  Uncovered-but-valid inputs return
 * EPW_REDIRECT or EPW_OUT_OF_SCOPE with the explanation in
 * epw_last_error(). */
epw_status epw_build(char type, int rank, long long p, long long a, epw_cert** out);

/* Canonical JSON (sorted keys, two-space indent, LF). */
epw_status epw_cert_to_json(const epw_cert* cert, char** out_json);
epw_status epw_cert_from_json(const char* json_text, epw_cert** out);

/* Seed recorded in the certificate and echoed into reports. */
epw_status epw_cert_set_seed(epw_cert* cert, long long seed);

/* level: "symbolic", "matrix", or "all".  max_field_bits <= 0 selects the
 * default guard (64, or the EPIWIT_MAX_FIELD_BITS environment variable). */
epw_status epw_verify(const epw_cert* cert, const char* level, long long max_field_bits,
                      epw_report** out);

int epw_report_pass(const epw_report* rep); /* 1 pass, 0 fail, -1 bad handle */
int epw_report_check_count(const epw_report* rep);
/* Pointers remain valid for the lifetime of the report. */
epw_status epw_report_check(const epw_report* rep, int index, const char** name,
                            const char** status, const char** detail);
epw_status epw_report_to_json(const epw_report* rep, char** out_json);

/* Deterministic fault injection: a copy of cert with one seeded corruption
 * that the symbolic verifier is guaranteed to reject. */
epw_status epw_mutate(const epw_cert* cert, unsigned long long seed, epw_cert** out);

/* The representation-theoretic identities behind the exceptional cases,
 * as a JSON array of {name, status, detail}. */
epw_status epw_char_suite_json(char** out_json);

/* Covered (type, rank <= max_rank, p in {2,3,5,7}) triples as a JSON array
 * of {type, rank, p}. */
epw_status epw_grid_json(int max_rank, char** out_json);

void epw_cert_free(epw_cert* cert);
void epw_report_free(epw_report* rep);
void epw_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* EPIWIT_H */
