/* simcore — simultaneous core partitions, abacus diagrams, q-Catalan
 * polynomials and Shi-arrangement alcoves, behind a C interface.
 *
 * Conventions: functions return a simcore_status; every out-parameter is
 * written only on SIMCORE_OK.  Strings returned through char** are heap
 * allocated and must be released with simcore_string_free.  On failure,
 * simcore_last_error() describes what went wrong (thread-local).
 */
#ifndef SIMCORE_H
#define SIMCORE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SIMCORE_OK = 0,
    SIMCORE_ERR_BADARG = 1,   /* malformed input */
    SIMCORE_ERR_DOMAIN = 2,   /* input violates a precondition */
    SIMCORE_ERR_LIMIT = 3,    /* request exceeds the configured resource caps */
    SIMCORE_ERR_OVERFLOW = 4, /* exact arithmetic would overflow */
    SIMCORE_ERR_INTERNAL = 5  /* a library invariant failed */
} simcore_status;

/* Opaque handle to an integer partition. */
typedef struct simcore_partition simcore_partition;

const char* simcore_last_error(void);
void simcore_string_free(char* s);

/* ---- partitions ---- */

/* Parses "5,4,2,1,1"; the empty string is the empty partition. */
simcore_status simcore_partition_parse(const char* comma_separated, simcore_partition** out);
simcore_status simcore_partition_from_parts(const int64_t* parts, int len,
                                            simcore_partition** out);
void simcore_partition_free(simcore_partition* p);

/* JSON array of parts, e.g. "[5,4,2,1,1]"; "[]" for the empty partition. */
simcore_status simcore_partition_json(const simcore_partition* p, char** out);
int64_t simcore_partition_size(const simcore_partition* p);
int simcore_partition_length(const simcore_partition* p);
simcore_status simcore_partition_conjugate(const simcore_partition* p, simcore_partition** out);
simcore_status simcore_partition_is_core(const simcore_partition* p, int64_t a, int* out);
/* The a-core of p (repeated rim a-hook removal). */
simcore_status simcore_partition_core_reduce(const simcore_partition* p, int64_t a,
                                             simcore_partition** out);
/* {partition, ell, sl, sl_prime, maj_a?, maj_c?} for an (a,b)-core, a < b. */
simcore_status simcore_partition_stats_json(const simcore_partition* p, int64_t a, int64_t b,
                                            char** out);

/* ---- core families ---- */

simcore_status simcore_cores_count(int64_t a, int64_t b, int self_conjugate,
                                   int64_t* formula_count, int64_t* enumerated_count);
/* format: "json" or "csv"; with_stats switches the JSON listing to records. */
simcore_status simcore_cores_list(int64_t a, int64_t b, int self_conjugate, int with_stats,
                                  const char* format, char** out);

/* ---- rational q-Catalan ---- */

/* JSON coefficient array of Cat_q(a,b). */
simcore_status simcore_qcatalan_json(int64_t a, int64_t b, char** out);
simcore_status simcore_qcatalan_eval(int64_t a, int64_t b, int64_t q0, int64_t* out);

/* ---- Shi arrangement ---- */

/* family: 'A' or 'C'; which: "minimal" or "bounded"; format: "json" or
 * "text".  Lists windows with coordinates, flush flags and cores. */
simcore_status simcore_shi_alcoves(char family, int rank, int m, const char* which,
                                   const char* format, char** out);
/* Coordinates and right descents of one dominant window, e.g. "-4,-2,7,9". */
simcore_status simcore_shi_coords(char family, int rank, const char* window_csv, char** out);

/* ---- verification harness ---- */

/* claim: all|counts|avg|max|maj|skew|qt|sieving|shi.  Nonpositive grid
 * arguments select the default grids.  all_ok is 1 iff no claim produced a
 * counterexample; out receives the JSON report array. */
simcore_status simcore_verify(const char* claim, int max_ab, int max_n, int max_m, int* all_ok,
                              char** out);

#ifdef __cplusplus
}
#endif

#endif /* SIMCORE_H */
