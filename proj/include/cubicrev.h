/*
 * cubicrev C API: exact and numeric computations on the cubic surface of
 * revolution x^3 + y^3 + z^3 - 3xyz = 1.
 *
 * Conventions:
 *   - every function returns a status code (CUBICREV_OK on success);
 *   - textual results are returned through an opaque cubicrev_buf that the
 *     caller releases with cubicrev_buf_free;
 *   - exact rationals cross the boundary as strings ("a/b", "a", or decimals);
 *   - mathematical verdicts (on-surface, in-family, invariant) are reported
 *     through int out-parameters, not through the status code.
 */
#ifndef CUBICREV_H
#define CUBICREV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    CUBICREV_OK = 0,
    CUBICREV_ERR_USAGE = 2,    /* malformed input / invalid arguments */
    CUBICREV_ERR_INTERNAL = 3, /* certificate failure or internal error */
};

typedef struct cubicrev_buf cubicrev_buf;

const char *cubicrev_buf_data(const cubicrev_buf *buf);
size_t cubicrev_buf_size(const cubicrev_buf *buf);
void cubicrev_buf_free(cubicrev_buf *buf);

const char *cubicrev_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char *cubicrev_last_error(void);

/* Exact evaluation of x^3+y^3+z^3-rho*xyz-1 at a rational point.
 * point: "x,y,z"; rho: rational string or NULL for 3.
 * *on_surface: 1 iff the value is exactly zero. */
int cubicrev_eval(const char *point, const char *rho, int as_json, int *on_surface,
                  cubicrev_buf **out);

/* OBJ mesh of the surface on a geometric t-grid with a welded theta seam. */
int cubicrev_mesh_obj(double t_min, double t_max, int n_t, int n_theta, cubicrev_buf **out);

/* CSV samples (header x,y,z) of the meridian curve, t log-spaced. */
int cubicrev_meridian_csv(double t_min, double t_max, int count, cubicrev_buf **out);

/* Meridian point at a single rational t; exact coordinates when sqrt(t) is
 * rational, floating otherwise. */
int cubicrev_meridian_at(const char *t, int as_json, cubicrev_buf **out);

/* The slice circle at rational t > 0 (center, radii^2, plane constant; exact). */
int cubicrev_slice(const char *t, int as_json, cubicrev_buf **out);

/* Rotation between surface coordinates and revolution coordinates.
 * inverse = 0: (x,y,z) -> (X,Y,Z) plus the canonical residual;
 * inverse = 1: (X,Y,Z) -> (x,y,z). *on_axis only meaningful for inverse = 0. */
int cubicrev_rotate(const char *point, int inverse, int as_json, int *on_axis,
                    cubicrev_buf **out);

/* The (u, r) rational point with its exact on-surface certificate. */
int cubicrev_rational_gen(const char *u, const char *r, int as_json, cubicrev_buf **out);

/* Inverse of the generator. *in_family: 1 iff the point has a (u, r) preimage. */
int cubicrev_rational_member(const char *point, int as_json, int *in_family,
                             cubicrev_buf **out);

/* Height-bounded enumeration of rational points (CSV or JSON). */
int cubicrev_rational_enum(int height_bound, int as_json, cubicrev_buf **out);

/* Singular-point catalog ("hcubic", "canon", "rotated-scaled", or "all"); JSON. */
int cubicrev_analyze_singular(const char *surface, cubicrev_buf **out);

/* The three lines at infinity plus randomized finite-line rejection; JSON. */
int cubicrev_analyze_lines(int trials, uint64_t seed, cubicrev_buf **out);

/* Full certificate suite. *all_passed: 1 iff every check passed.
 * Text mode prints one pass/fail line per check; JSON mode the full report. */
int cubicrev_verify(uint64_t seed, int as_json, int *all_passed, cubicrev_buf **out);

/* Rotation-invariance sampling for x^3+y^3+z^3-rho*xyz=1 about x=y=z.
 * *invariant: 1 iff the max relative residual stayed within tol. */
int cubicrev_revolution_check(const char *rho, int samples, double tol, uint64_t seed,
                              int *invariant, cubicrev_buf **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CUBICREV_H */
