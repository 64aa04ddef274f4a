/* C interface to the symip solver library.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return a status code; reports are returned as JSON documents in a
 * malloc'd string that the caller releases with symip_string_free().
 * Rational values appear in reports as exact fraction strings "p/q".
 */
#ifndef SYMIP_H
#define SYMIP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct symip_instance symip_instance;
typedef struct symip_group symip_group;

enum {
  SYMIP_OK = 0,
  SYMIP_ERR_PARSE = 1,
  SYMIP_ERR_IO = 2,
  SYMIP_ERR_DIMENSION = 3,
  SYMIP_ERR_CAP = 4,
  SYMIP_ERR_INVALID = 5,
  SYMIP_ERR_INTERNAL = 6
};

/* Solver status values mirrored into report JSON ("status" field). */
#define SYMIP_STATUS_OPTIMAL "optimal"
#define SYMIP_STATUS_INFEASIBLE "infeasible"
#define SYMIP_STATUS_UNBOUNDED "unbounded"
#define SYMIP_STATUS_NOT_APPLICABLE "not_applicable"

/* errbuf may be NULL; otherwise it receives a NUL-terminated message. */
int symip_instance_parse(const char* text, symip_instance** out,
                         char* errbuf, size_t errlen);
int symip_instance_load(const char* path, symip_instance** out,
                        char* errbuf, size_t errlen);
void symip_instance_free(symip_instance* inst);
int symip_instance_dim(const symip_instance* inst);
int symip_instance_rows(const symip_instance* inst);
/* Round-trip serialization of the instance file format. */
int symip_instance_serialize(const symip_instance* inst, char** out_text,
                             char* errbuf, size_t errlen);

/* Generator file text: one cycle-notation permutation per line. */
int symip_group_parse(const char* text, int degree, symip_group** out,
                      char* errbuf, size_t errlen);
int symip_group_load(const char* path, int degree, symip_group** out,
                     char* errbuf, size_t errlen);
/* Full symmetry-group detection; fails with SYMIP_ERR_CAP when n > cap. */
int symip_group_detect(const symip_instance* inst, int cap, symip_group** out,
                       char* errbuf, size_t errlen);
void symip_group_free(symip_group* group);

/* Sifting solver. Report JSON: {"status", "value", "point",
 * "layer", "layers_visited", "feasibility_checks", "applicability",
 * "witness_layer"?, "note"?}. */
int symip_solve(const symip_instance* inst, const symip_group* group,
                int assume_applicable, char** out_json,
                char* errbuf, size_t errlen);

/* Brute-force solver over [lo_i, hi_i]^n; lo/hi arrays of length n, or both
 * NULL for the default box. */
int symip_oracle_solve(const symip_instance* inst, const long long* lo,
                       const long long* hi, long long cap, char** out_json,
                       char* errbuf, size_t errlen);

/* Runs both solvers and reports agreement, including per-layer detail. */
int symip_cross_validate(const symip_instance* inst, const symip_group* group,
                         const long long* lo, const long long* hi,
                         long long cap, char** out_json,
                         char* errbuf, size_t errlen);

/* Generators, order (when enumerable), verified transitivity and
 * homogeneity degrees. */
int symip_symmetry_report(const symip_instance* inst, const symip_group* group,
                          char** out_json, char* errbuf, size_t errlen);

/* Layer listing for k in [from_k, to_k]: index, parameter t, center,
 * utility, neighbor count. */
int symip_layers_report(const symip_instance* inst, long long from_k,
                        long long to_k, char** out_json,
                        char* errbuf, size_t errlen);

/* Neighbor enumeration for one layer; with a group, the orbit partition. */
int symip_neighbors_report(const symip_instance* inst,
                           const symip_group* group_or_null, long long k,
                           long long cap, char** out_json,
                           char* errbuf, size_t errlen);

void symip_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SYMIP_H */
