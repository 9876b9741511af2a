/* ineq — cover, entropy and sumset inequality toolkit.
 *
 * C interface to the shared library. Objects are opaque handles created from
 * JSON texts (the same file formats the CLI reads); results come back as
 * malloc'd JSON strings released with ineq_string_free. Every call returns
 * INEQ_OK or an error code, with a thread-local message available from
 * ineq_last_error.
 *
 * Subsets of {1,...,n} cross this boundary as uint32_t bitmasks where bit
 * (i-1) stands for element i.
 */
#ifndef INEQ_H
#define INEQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ineq_status {
  INEQ_OK = 0,
  INEQ_ERR_PARSE = 1,
  INEQ_ERR_INVALID_ARGUMENT = 2,
  INEQ_ERR_EMPTY_SET = 3,
  INEQ_ERR_NESTED_PAIR = 4,
  INEQ_ERR_NOT_A_COVER = 5,
  INEQ_ERR_NOT_UNIFORM_COVER = 6,
  INEQ_ERR_NOT_COMPARABLE = 7,
  INEQ_ERR_NOT_IN_SUMSET = 8,
  INEQ_ERR_C_NOT_CONTAINED = 9,
  INEQ_ERR_UNORDERED_CONTEXT = 10,
  INEQ_ERR_INSTANCE_TOO_LARGE = 11,
  INEQ_ERR_OVERFLOW = 12,
  INEQ_ERR_IO = 13,
  INEQ_ERR_UNKNOWN = 99
} ineq_status;

typedef struct ineq_family ineq_family;     /* multiset of subsets of [n] */
typedef struct ineq_dist ineq_dist;         /* exact joint distribution */
typedef struct ineq_lattice ineq_lattice;   /* finite subset of Z^n */
typedef struct ineq_instance ineq_instance; /* group context + element sets */

const char* ineq_version(void);
const char* ineq_last_error(void);
void ineq_string_free(char* s);

/* ---- set families ---- */

ineq_status ineq_family_parse(const char* json, ineq_family** out);
void ineq_family_free(ineq_family* fam);
ineq_status ineq_family_to_json(const ineq_family* fam, char** out_json);

/* cover profile, k-cover and uniform k-cover flags */
ineq_status ineq_family_check(const ineq_family* fam, int k, char** out_json);

/* minimal compression (the inclusion chain with the same profile) */
ineq_status ineq_family_sharp(const ineq_family* fam, char** out_json);

/* one elementary compression on the 1-based members i and j */
ineq_status ineq_family_compress(const ineq_family* fam, int i, int j, char** out_json);

/* compression-order relation: equal / strictly_compresses / incomparable */
ineq_status ineq_family_relation(const ineq_family* from, const ineq_family* to, char** out_json);

/* ---- entropy ---- */

ineq_status ineq_dist_parse(const char* json, ineq_dist** out);
void ineq_dist_free(ineq_dist* d);

/* H(X_A) in bits */
ineq_status ineq_entropy_value(const ineq_dist* d, uint32_t subset, double* out_bits);

ineq_status ineq_entropy_submodularity(const ineq_dist* d, uint32_t a, uint32_t b, double tol,
                                       char** out_json);
ineq_status ineq_entropy_shearer(const ineq_dist* d, const ineq_family* fam, int k, double tol,
                                 char** out_json);
ineq_status ineq_entropy_madiman_tetali(const ineq_dist* d, const ineq_family* fam, int k,
                                        double tol, char** out_json);
ineq_status ineq_entropy_gen1(const ineq_dist* d, const ineq_family* from, const ineq_family* to,
                              double tol, char** out_json);
ineq_status ineq_entropy_gen2(const ineq_dist* d, const ineq_family* fam, double tol,
                              char** out_json);
ineq_status ineq_entropy_box(const ineq_dist* d, double tol, char** out_json);

/* ---- lattice projections ---- */

ineq_status ineq_lattice_parse(const char* json, ineq_lattice** out);
void ineq_lattice_free(ineq_lattice* s);
ineq_status ineq_lattice_project(const ineq_lattice* s, uint32_t subset, char** out_json);
ineq_status ineq_lattice_cover(const ineq_lattice* s, const ineq_family* fam, int k,
                               char** out_json);

/* the five-point set violating the compressed-family product bound */
ineq_status ineq_lattice_counterexample(char** out_json);

/* ---- sumsets ---- */

/* instance file {"group":..., "sets":...}, or group and sets texts apart */
ineq_status ineq_instance_parse(const char* json, ineq_instance** out);
ineq_status ineq_instance_parse_parts(const char* group_json, const char* sets_json,
                                      ineq_instance** out);
void ineq_instance_free(ineq_instance* inst);

ineq_status ineq_sumset_cover(const ineq_instance* inst, const ineq_family* fam, int k, double tol,
                              char** out_json);

/* gymr_json = {"A":[...], "B":[[...],...], "C":[...]} over the integers */
ineq_status ineq_sumset_gymr(const char* gymr_json, char** out_json);

ineq_status ineq_sumset_marking(const ineq_instance* inst, const ineq_family* fam, int k,
                                char** out_json);
ineq_status ineq_sumset_cd(const ineq_instance* inst, char** out_json);

/* conjecture = "6.1" | "6.2" */
ineq_status ineq_conjecture_check(const ineq_instance* inst, const char* conjecture, double tol,
                                  char** out_json);

/* ---- counterexample search ---- */

typedef void (*ineq_emit_fn)(const char* json_line, void* user);

/* budget caps the number of instances (0 emits nothing; UINT64_MAX runs the
 * full enumeration); sampling requires a finite budget */
ineq_status ineq_search_run(const char* conjecture, const char* catalog_json, int n,
                            int set_size_max, uint64_t seed, uint64_t budget, int sample,
                            ineq_emit_fn emit, void* user, char** out_summary_json);

#ifdef __cplusplus
}
#endif

#endif /* INEQ_H */
