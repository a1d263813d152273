#ifndef DERN_H
#define DERN_H

/* Exact-arithmetic structure theory for real semisimple Lie algebras:
 * catalog construction, restricted-root data, H-type checks, and the
 * derivation solver for the Iwasawa nilpotent part.
 *
 * Every function returns a dern_status value; on failure a human-readable
 * message is available from dern_last_error() until the next call on the
 * same thread. Strings handed out through char** are owned by the caller
 * and must be released with dern_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dern_algebra dern_algebra;

enum dern_status {
  DERN_OK = 0,
  DERN_PARSE_ERROR = 1,
  DERN_AMBIENT_MISMATCH = 2,
  DERN_NOT_COMMUTING = 3,
  DERN_NOT_DIAGONALIZABLE_OVER_Q = 4,
  DERN_ALGEBRA_MISMATCH = 5,
  DERN_THETA_NOT_INVOLUTIVE = 6,
  DERN_NOT_CLOSED = 7,
  DERN_JACOBI_FAILS = 8,
  DERN_NON_POSITIVE_C = 9,
  DERN_NOT_POSITIVE_DEFINITE = 10,
  DERN_UNSUPPORTED_FAMILY = 11,
  DERN_RANK_OUT_OF_RANGE = 12,
  DERN_UNSUPPORTED_TYPE = 13,
  DERN_NOT_A_ROOT = 14,
  DERN_DECOMPOSABLE_SYSTEM = 15,
  DERN_NOT_SIMPLE = 16,
  DERN_NOT_ORTHOGONAL = 17,
  DERN_NOT_H_TYPE = 18,
  DERN_NOT_A_DERIVATION = 19,
  DERN_NOT_SYMMETRIC = 20,
  DERN_TRANSPOSE_NOT_DERIVATION = 21,
  DERN_E_IDENTITY_FAILS = 22,
  DERN_INCONSISTENT_EXTENSION = 23,
  DERN_NO_SOLUTION = 24,
  DERN_INTERNAL_ERROR = 25,
  DERN_BAD_ARGUMENT = 100
};

const char* dern_version(void);
const char* dern_status_name(int status);

/* Message from the most recent failing call on this thread; empty string
 * when the last call succeeded. The pointer stays valid until the next
 * library call on the same thread. */
const char* dern_last_error(void);

/* Catalog name like "sl3R", "so(1,4)", "su(2,3)", "sp(1,2)", "split-G2". */
int dern_build(const char* name, dern_algebra** out);

/* dern-algebra JSON documents; to_json output feeds back into from_json
 * byte-exactly. */
int dern_algebra_from_json(const char* text, dern_algebra** out);
int dern_algebra_to_json(const dern_algebra* g, char** out);

/* -1 when g is null. */
int dern_algebra_dim(const dern_algebra* g);

void dern_algebra_free(dern_algebra* g);

/* Restricted-root decomposition report. */
int dern_roots_report(const dern_algebra* g, char** out);

/* Derivations of the Iwasawa n; mode is "all", "grading", or "rootspace". */
int dern_solve_report(const dern_algebra* g, const char* mode, char** out);

/* Dimension comparison of Der(n) against ad(m + a), with the expected
 * verdict for catalog families. */
int dern_verify_report(const dern_algebra* g, char** out);

/* Kaplan / Clifford verdict for a dern-two-step JSON document; the seed
 * drives the sampled part of the report. */
int dern_htype_check(const char* two_step_json, unsigned long long seed, char** out);

void dern_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
