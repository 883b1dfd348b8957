#ifndef BQKZ_H
#define BQKZ_H

#include <stddef.h>

#if defined(BQKZ_BUILDING_LIBRARY)
#define BQKZ_API __attribute__((visibility("default")))
#else
#define BQKZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bqkz_status {
  BQKZ_OK = 0,
  BQKZ_ERR_INVALID_ARGUMENT = 1,
  /* Singular point or value outside the domain of a formula. */
  BQKZ_ERR_DOMAIN = 2,
  BQKZ_ERR_UNKNOWN_SUITE = 3,
  BQKZ_ERR_INTERNAL = 4
} bqkz_status;

/* Opaque table of homogeneous ground-state components. */
typedef struct bqkz_table bqkz_table;

/* Strings returned through char** are owned by the caller and released with bqkz_string_free. */
BQKZ_API void bqkz_string_free(char* s);
BQKZ_API const char* bqkz_version(void);
/* Message of the last failing call on this thread, or "" after success. */
BQKZ_API const char* bqkz_last_error(void);

/* formula: "general", "tau1", "bar" or "tau_general"; symbolic != 0 keeps tau as a variable.
   Uses the on-disk cache in $BQKZ_CACHE. */
BQKZ_API bqkz_status bqkz_components(int n_sites, const char* formula, int symbolic, bqkz_table** out);
BQKZ_API void bqkz_table_free(bqkz_table* t);
BQKZ_API int bqkz_table_sites(const bqkz_table* t);
BQKZ_API size_t bqkz_table_size(const bqkz_table* t);
BQKZ_API bqkz_status bqkz_table_json(const bqkz_table* t, char** out);
/* One row per component: positions, then coefficients of x^0..x^d (tau = 1) or the polynomial (symbolic). */
BQKZ_API bqkz_status bqkz_table_csv(const bqkz_table* t, char** out);
/* Components at a rational x ("p/q"), tau = 1; JSON object keyed by positions. */
BQKZ_API bqkz_status bqkz_table_evaluate(const bqkz_table* t, const char* x, char** out);

/* JSON {"E0": exact}; with numeric != 0 also the lowest sector eigenvalues and the gap. */
BQKZ_API bqkz_status bqkz_energy(int n_sites, const char* x, int numeric, char** out);
/* F_N(x, alpha); general_tau != 0 uses the f-polynomial determinant. JSON {"F": polynomial}. */
BQKZ_API bqkz_status bqkz_scalar_product(int n_sites, int general_tau, char** out);
/* JSON {"overlap", "conjectured"} for the composition parts[0..count). */
BQKZ_API bqkz_status bqkz_overlap(const int* parts, size_t count, const char* x, char** out);

enum { BQKZ_TSASM_COUNT = 0, BQKZ_TSASM_GENFUN = 1, BQKZ_TSASM_LIST = 2 };
BQKZ_API bqkz_status bqkz_tsasm(int m, int mode, char** out);

/* JSON array of {"name", "summary", "default_max"}. */
BQKZ_API bqkz_status bqkz_list_suites(char** out);
/* Runs a suite ("all" for every suite). max_sites < 0 selects the default bound.
   *passed receives 1 iff every asserted check passed. */
BQKZ_API bqkz_status bqkz_run_suite(const char* name, int max_sites, unsigned long long seed, int trials,
                                    int betabar_sign, int* passed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
