/*
 * C interface to the specker library: boolean powers of a totally ordered
 * domain over finite boolean algebras, their two representations, de Vries
 * proximities and their lifts, and morphisms between them.
 *
 * Every object is an opaque handle released by its *_free function. Calls
 * return a specker_status; on failure specker_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * allocated by the library and released with specker_string_free.
 */
#ifndef SPECKER_SPECKER_H
#define SPECKER_SPECKER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SPECKER_API __declspec(dllexport)
#else
#define SPECKER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum specker_status {
  SPECKER_OK = 0,
  SPECKER_ERR_INVALID_ARGUMENT = 1,
  SPECKER_ERR_PARSE = 2,
  SPECKER_ERR_ALGEBRA_MISMATCH = 3,
  SPECKER_ERR_DOMAIN = 4,
  SPECKER_ERR_TOO_LARGE = 5,
  SPECKER_ERR_UNBOUND_NAME = 6,
  SPECKER_ERR_NO_WITNESS = 7,
  SPECKER_ERR_NOT_DEVRIES = 8,
  SPECKER_ERR_INTERNAL = 9,
  SPECKER_ERR_NULL_ARGUMENT = 10
} specker_status;

typedef enum specker_rep { SPECKER_REP_PERP = 0, SPECKER_REP_FLAT = 1 } specker_rep;

typedef enum specker_binop {
  SPECKER_OP_ADD = 0,
  SPECKER_OP_SUB = 1,
  SPECKER_OP_MUL = 2,
  SPECKER_OP_MEET = 3,
  SPECKER_OP_JOIN = 4
} specker_binop;

typedef enum specker_order {
  SPECKER_ORDER_EQUAL = 0,
  SPECKER_ORDER_LEQ = 1,
  SPECKER_ORDER_GEQ = 2,
  SPECKER_ORDER_INCOMPARABLE = 3
} specker_order;

typedef struct specker_sample_config {
  size_t samples;
  long coeff_bound;
  uint64_t seed;
} specker_sample_config;

typedef struct specker_algebra specker_algebra;
typedef struct specker_element specker_element;
typedef struct specker_proximity specker_proximity;
typedef struct specker_morphism specker_morphism;
typedef struct specker_report specker_report;

SPECKER_API const char* specker_version(void);
/* Message for the last failed call on this thread, or "" if none. */
SPECKER_API const char* specker_last_error(void);
SPECKER_API const char* specker_status_name(specker_status status);
SPECKER_API void specker_string_free(char* s);
/* 200 samples, coefficients in [-10, 10], seed 0. */
SPECKER_API specker_sample_config specker_default_config(void);

/* Algebras: {"atoms":[...]} or {"free_generators":n}, optional "domain". */
SPECKER_API specker_status specker_algebra_from_json(const char* json, specker_algebra** out);
SPECKER_API specker_status specker_algebra_to_json(const specker_algebra* alg, char** out);
SPECKER_API specker_status specker_algebra_element_count(const specker_algebra* alg, uint64_t* out);
SPECKER_API void specker_algebra_free(specker_algebra* alg);

/* Elements in either representation. */
SPECKER_API specker_status specker_element_from_json(const specker_algebra* alg, const char* json,
                                                     specker_element** out);
SPECKER_API specker_status specker_element_from_expr(const specker_algebra* alg, const char* expr,
                                                     specker_element** out);
SPECKER_API specker_status specker_element_rep(const specker_element* e, specker_rep* out);
SPECKER_API specker_status specker_element_to_text(const specker_element* e, char** out);
SPECKER_API specker_status specker_element_to_json(const specker_element* e, char** out);
/* Atom values, e.g. "{p↦2, q↦0}". */
SPECKER_API specker_status specker_element_pointwise(const specker_element* e, char** out);
SPECKER_API specker_status specker_element_convert(const specker_element* e, specker_rep rep,
                                                   specker_element** out);
/* The result has the representation of a; b is converted if needed. */
SPECKER_API specker_status specker_element_binary(specker_binop op, const specker_element* a,
                                                  const specker_element* b, specker_element** out);
SPECKER_API specker_status specker_element_scalar_mul(const char* scalar, const specker_element* e,
                                                      specker_element** out);
SPECKER_API specker_status specker_element_compare(const specker_element* a, const specker_element* b,
                                                   specker_order* out);
SPECKER_API void specker_element_free(specker_element* e);

/* Proximities: "leq", {"pairs":[[e,f],...]}, or either under "proximity". */
SPECKER_API specker_status specker_proximity_from_json(const specker_algebra* alg, const char* json,
                                                       specker_proximity** out);
SPECKER_API specker_status specker_proximity_to_json(const specker_proximity* rel, char** out);
SPECKER_API specker_status specker_proximity_is_devries(const specker_proximity* rel, int* out);
/* Exhaustive D1–D7. */
SPECKER_API specker_status specker_proximity_check(const specker_proximity* rel, specker_report** out);
/* JSON array of every de Vries proximity on a small algebra. */
SPECKER_API specker_status specker_proximity_enumerate(const specker_algebra* alg, size_t* count, char** json);
SPECKER_API specker_status specker_proximity_lift_check(const specker_proximity* rel, const specker_element* s,
                                                        const specker_element* t, int* out);
/* Sampled P1–P10 for the lifted relation. */
SPECKER_API specker_status specker_proximity_sample(const specker_proximity* rel, specker_sample_config config,
                                                    specker_report** out);
SPECKER_API void specker_proximity_free(specker_proximity* rel);

/* Morphisms: {"source":{...}, "target":{...}, "map":{...}}. */
SPECKER_API specker_status specker_morphism_from_json(const char* json, specker_morphism** out);
SPECKER_API specker_status specker_morphism_to_json(const specker_morphism* m, char** out);
/* Source algebra of the morphism (a new handle, shared with it). */
SPECKER_API specker_status specker_morphism_source(const specker_morphism* m, specker_algebra** out);
/* Exhaustive M1–M4. */
SPECKER_API specker_status specker_morphism_check(const specker_morphism* m, specker_report** out);
/* Sampled M1–M7 for the lift. */
SPECKER_API specker_status specker_morphism_check_lift(const specker_morphism* m, specker_sample_config config,
                                                       specker_report** out);
/* Lifted action; the result is in flat form over the target algebra. */
SPECKER_API specker_status specker_morphism_apply(const specker_morphism* m, const specker_element* e,
                                                  specker_element** out);
/* second ⋆ first. */
SPECKER_API specker_status specker_morphism_compose(const specker_morphism* second, const specker_morphism* first,
                                                    specker_morphism** out);
SPECKER_API specker_status specker_morphism_naturality(const specker_morphism* m, specker_sample_config config,
                                                       specker_report** out);
SPECKER_API void specker_morphism_free(specker_morphism* m);

/* Id/Sp round trips and identity laws for one de Vries algebra. */
SPECKER_API specker_status specker_equivalence_check(const specker_proximity* rel, specker_sample_config config,
                                                     specker_report** out);

/* Differential run against the pointwise model; JSON lines in *jsonl. */
SPECKER_API specker_status specker_oracle_diff(const specker_algebra* alg, specker_sample_config config,
                                               int* passed, char** jsonl);

SPECKER_API int specker_report_passed(const specker_report* r);
SPECKER_API specker_status specker_report_summary(const specker_report* r, char** out);
SPECKER_API specker_status specker_report_to_json(const specker_report* r, char** out);
SPECKER_API void specker_report_free(specker_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SPECKER_SPECKER_H */
