#ifndef ASEPK_ASEPK_H
#define ASEPK_ASEPK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asepk_status {
  ASEPK_OK = 0,
  ASEPK_ERR_USAGE = 1,
  ASEPK_ERR_STRUCTURAL = 2,
  ASEPK_ERR_POLE = 3,
  ASEPK_ERR_LIMIT_UNDEFINED = 4,
  ASEPK_ERR_DEGENERATE = 5,
  ASEPK_ERR_INTERNAL = 6,
  ASEPK_ERR_NULL_ARGUMENT = 7
} asepk_status;

typedef struct asepk_model asepk_model;
typedef struct asepk_result asepk_result;

/* Message for the last failing call on this thread; empty after success. */
const char* asepk_last_error(void);
const char* asepk_status_name(asepk_status s);

/* Model: n sites, rank r, parameters t, a, b, c, d as exact fractions ("1/2").
   Defaults: n = 1, r = 1, t = 1/2, a = -3, b = -5, c = 1/3, d = 1/5, no cutoffs,
   magnitude convention, symbolic q. */
asepk_status asepk_model_new(asepk_model** out);
void asepk_model_free(asepk_model* m);
asepk_status asepk_model_set_size(asepk_model* m, int n, int r);
/* name is one of "t", "a", "b", "c", "d", "q"; value NULL for q restores symbolic q. */
asepk_status asepk_model_set_param(asepk_model* m, const char* name, const char* value);
asepk_status asepk_model_set_cutoffs(asepk_model* m, int rl, int rr);
/* "magnitude" or "mirror" */
asepk_status asepk_model_set_convention(asepk_model* m, const char* convention);

/* Result: JSON text plus a pass flag (1 when every check in the report held). */
const char* asepk_result_json(const asepk_result* res);
int asepk_result_passed(const asepk_result* res);
void asepk_result_free(asepk_result* res);

/* Generator L as a sparse operator; passes when the rate, block and transfer
   constructions agree and the columns sum to zero. */
asepk_status asepk_build_generator(const asepk_model* m, asepk_result** out);

/* T(w; x) at rational w and inhomogeneities x (x may be NULL for all ones). */
asepk_status asepk_transfer(const asepk_model* m, const char* w, const char* const* x, size_t nx, asepk_result** out);

/* Identity suite: "all", "core", or a comma-separated list of identity names. */
asepk_status asepk_verify(const asepk_model* m, const char* suite, uint64_t seed, int points, asepk_result** out);

/* Sector and composition arguments are comma-separated integers, e.g. "1,0". */
asepk_status asepk_nonsymmetric(const asepk_model* m, const char* lambda, asepk_result** out);
asepk_status asepk_koornwinder(const asepk_model* m, const char* lambda, asepk_result** out);
asepk_status asepk_stationary(const asepk_model* m, const char* sector, asepk_result** out);
asepk_status asepk_theorem(const asepk_model* m, const char* sector, asepk_result** out);
asepk_status asepk_factorise(const asepk_model* m, const char* lambda, int check_polynomial, asepk_result** out);
asepk_status asepk_generalised(const asepk_model* m, const char* sector, asepk_result** out);

typedef struct asepk_sim_options {
  uint64_t events;
  uint64_t burn_in;
  uint64_t seed;
  uint64_t thin;
  int trajectories;
  int batches;
  const char* initial; /* NULL: the sector representative */
  /* Exact boundary rates overriding the (a, b, c, d) map; NULL keeps the map. */
  const char* alpha;
  const char* beta;
  const char* gamma;
  const char* delta;
  double tolerance; /* pass threshold on the TV distance; <= 0 uses the 3 sigma batch bound */
} asepk_sim_options;

void asepk_sim_options_default(asepk_sim_options* opts);
asepk_status asepk_simulate(const asepk_model* m, const char* sector, const asepk_sim_options* opts, asepk_result** out);

#ifdef __cplusplus
}
#endif

#endif
