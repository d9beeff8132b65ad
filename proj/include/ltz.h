/* Copyright 2026 The ltz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the ltz lattice theta / Epstein zeta toolkit.
 *
 * All entry points are thread-compatible: contexts are cheap and not
 * shareable across threads while a call is in flight; evaluations behind
 * them are pure. Every function returns LTZ_OK or a status code;
 * ltz_last_error(ctx) holds a message for the last failing call on that
 * context.
 */

#ifndef LTZ_H
#define LTZ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ltz_status {
    LTZ_OK = 0,
    LTZ_ERR_DOMAIN = 1,        /* parameter outside the operation's domain */
    LTZ_ERR_TOLERANCE = 2,     /* truncation cap hit before the tolerance */
    LTZ_ERR_DEGENERATE = 3,    /* denominator within noise of zero */
    LTZ_ERR_NOT_CONVERGED = 4, /* iteration/evaluation budget exceeded */
    LTZ_ERR_BAD_ARGUMENT = 5,  /* null pointer, unknown name, bad option */
    LTZ_ERR_INTERNAL = 6
} ltz_status;

typedef struct ltz_ctx ltz_ctx;       /* evaluation context (tolerances, threads) */
typedef struct ltz_report ltz_report; /* claim-run report */

ltz_ctx* ltz_ctx_new(void);
void ltz_ctx_free(ltz_ctx* ctx);
ltz_status ltz_ctx_set_abs_tol(ltz_ctx* ctx, double abs_tol);
ltz_status ltz_ctx_set_max_terms(ltz_ctx* ctx, int max_terms);
ltz_status ltz_ctx_set_threads(ltz_ctx* ctx, int threads);

const char* ltz_status_str(ltz_status st);
const char* ltz_last_error(const ltz_ctx* ctx);

/* 1-d theta function and derivatives. deriv: 0 -> value, 1 -> d/dY,
 * 2 -> d2/dXdY, 3 -> d3/dX2dY, 4 -> d/dX. */
ltz_status ltz_theta1d(ltz_ctx* ctx, int deriv, double X, double Y, double* value, double* err);

typedef enum ltz_fn {
    LTZ_THETA = 0,
    LTZ_THETA_X,
    LTZ_THETA_Y,
    LTZ_THETA_XY,
    LTZ_THETA_XYY,
    LTZ_ZETA,
    LTZ_ZETA_X,
    LTZ_ZETA_Y,
    LTZ_ZETA_XY,
    LTZ_ZETA_XYY
} ltz_fn;

/* Lattice theta/zeta evaluation at z = x + iy; param is alpha (theta family,
 * > 0) or s (zeta family, > 1). */
ltz_status ltz_eval(ltz_ctx* ctx, ltz_fn fn, double param, double x, double y, double* value,
                    double* err);

/* Auxiliary tail series; kind in {"mu","nu","omega","mu_hat","nu_hat","omega_hat"}. */
ltz_status ltz_aux_series(ltz_ctx* ctx, const char* kind, double X, double* value, double* err);

/* The six composite constants together with their usual 4-digit quotes.
 * Either output array may be NULL. pass (optional) reports whether all rows
 * except the first agree within 2e-3. */
ltz_status ltz_constants(ltz_ctx* ctx, double computed[6], double quoted[6], int* pass);

/* Reduction to the fundamental domain; word receives the generator sequence
 * ("id" when empty) if word_cap > 0. */
ltz_status ltz_reduce(ltz_ctx* ctx, double x, double y, double* rx, double* ry, char* word,
                      size_t word_cap);
ltz_status ltz_contains(ltz_ctx* ctx, double x, double y, int closed, int* result);

/* Minimization over the fundamental domain closure. fn must be LTZ_THETA or
 * LTZ_ZETA. evals (optional) receives the objective evaluation count. */
ltz_status ltz_minimize(ltz_ctx* ctx, ltz_fn fn, double param, double start_x, double start_y,
                        double* min_x, double* min_y, double* min_value, long* evals);

/* Run a named certification claim. options_json may be NULL or a JSON object
 * with any of: grid (int), inset, ycap, tol, resolution (numbers),
 * alphas, svals (arrays), dump (bool), threads (int).
 * On success *out owns the report until ltz_report_free. A failed
 * certification still returns LTZ_OK with ltz_report_passed(*out) == 0. */
ltz_status ltz_certify(ltz_ctx* ctx, const char* claim, const char* options_json,
                       ltz_report** out);

int ltz_report_passed(const ltz_report* rep);
const char* ltz_report_json(const ltz_report* rep);
/* CSV rows "x,y,value,err" (header included) when the claim was run with
 * dump=true; NULL otherwise. */
const char* ltz_report_csv(const ltz_report* rep);
void ltz_report_free(ltz_report* rep);

/* Names of the supported claims as a NULL-terminated array. */
const char* const* ltz_claim_names(void);

#ifdef __cplusplus
}
#endif

#endif /* LTZ_H */
