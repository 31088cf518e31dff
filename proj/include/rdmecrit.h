#ifndef RDMECRIT_H
#define RDMECRIT_H

/* rdmecrit - mesoscopic vs microscopic association kinetics on Cartesian
 * lattices: exact mean first-passage solves, event-driven pair simulation,
 * mesh-dependent reaction-rate corrections and critical-mesh-size location.
 *
 * C interface to the rdmecrit core. Handles are opaque; every call returns
 * an rdmec_status and leaves a human-readable message in rdmec_last_error()
 * on failure. All quantities are SI (metres, seconds).
 */

#include <stdint.h>

#if defined(_WIN32)
#define RDMEC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RDMEC_API __attribute__((visibility("default")))
#else
#define RDMEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdmec_status {
  RDMEC_OK = 0,
  RDMEC_ERR_INVALID_ARGUMENT = 1,
  RDMEC_ERR_UNSUPPORTED = 2,     /* model not defined for these inputs */
  RDMEC_ERR_DOMAIN = 3,          /* input outside a model's validity domain */
  RDMEC_ERR_BELOW_CRITICAL = 4,  /* mesh below h*: no matching rate exists */
  RDMEC_ERR_NO_CONVERGENCE = 5,  /* iterative solver ran out of iterations */
  RDMEC_ERR_STEP_BUDGET = 6,     /* a trajectory exceeded its event budget */
  RDMEC_ERR_IO = 7,
  RDMEC_ERR_CONFIG = 8,
  RDMEC_ERR_VALIDATION = 9,      /* validation suite reported failures */
  RDMEC_ERR_INTERNAL = 10
} rdmec_status;

typedef enum rdmec_boundary {
  RDMEC_PERIODIC = 0,
  RDMEC_REFLECTIVE = 1
} rdmec_boundary;

typedef enum rdmec_unit {
  RDMEC_UNIT_STEPS = 0,   /* jump-event counts (dimensionless) */
  RDMEC_UNIT_SECONDS = 1
} rdmec_unit;

typedef enum rdmec_start {
  RDMEC_START_UNIFORM_ALL = 0,        /* uniform over every voxel */
  RDMEC_START_UNIFORM_NON_TARGET = 1, /* uniform excluding the target voxel */
  RDMEC_START_FIXED = 2               /* a caller-supplied voxel index */
} rdmec_start;

RDMEC_API const char *rdmec_version(void);
RDMEC_API const char *rdmec_status_name(rdmec_status s);
/* Thread-local message for the most recent failure on this thread. */
RDMEC_API const char *rdmec_last_error(void);
RDMEC_API void rdmec_free_string(char *s);

/* ---------------------------------------------------------------------
 * Physical parameters of the pair problem.
 * dim: 2 or 3; rho: sum of reaction radii (m); diff: relative diffusion
 * constant (m^2/s); k_r: microscopic association rate (m^dim/s), pass
 * INFINITY for the perfectly absorbing limit; box: domain side length (m).
 */
typedef struct rdmec_params rdmec_params;
RDMEC_API rdmec_status rdmec_params_create(int dim, double rho, double diff,
                                           double k_r, double box,
                                           rdmec_params **out);
RDMEC_API void rdmec_params_destroy(rdmec_params *p);

/* ---------------------------------------------------------------------
 * Cartesian lattice with n_per_side voxels per axis, voxel size box/n.
 * target < 0 places the stationary molecule in the centre voxel.
 */
typedef struct rdmec_lattice rdmec_lattice;
RDMEC_API rdmec_status rdmec_lattice_create(int dim, int n_per_side, double box,
                                            rdmec_boundary bc, int64_t target,
                                            rdmec_lattice **out);
RDMEC_API void rdmec_lattice_destroy(rdmec_lattice *l);
RDMEC_API int64_t rdmec_lattice_voxels(const rdmec_lattice *l);
RDMEC_API double rdmec_lattice_h(const rdmec_lattice *l);
RDMEC_API int64_t rdmec_lattice_target(const rdmec_lattice *l);
/* Total diffusive jump rate out of a voxel, 2*dim*diff/h^2 (1/s). */
RDMEC_API rdmec_status rdmec_total_jump_rate(const rdmec_lattice *l,
                                             double diff, double *out);

/* ---------------------------------------------------------------------
 * Exact per-voxel mean first-passage / mean association times, from the
 * hitting-time linear system solved matrix-free to a relative max-norm
 * residual <= tol.
 */
typedef struct rdmec_field rdmec_field;
RDMEC_API rdmec_status rdmec_solve_hitting(const rdmec_lattice *l, double diff,
                                           double tol, rdmec_field **out);
/* k_meso: per-voxel reaction propensity (1/s); INFINITY reduces to the
 * hitting problem. */
RDMEC_API rdmec_status rdmec_solve_absorption(const rdmec_lattice *l,
                                              double diff, double k_meso,
                                              double tol, rdmec_field **out);
RDMEC_API void rdmec_field_destroy(rdmec_field *f);
RDMEC_API rdmec_status rdmec_field_values(const rdmec_field *f, rdmec_unit unit,
                                          double *buf, int64_t buf_len);
RDMEC_API rdmec_status rdmec_field_mean(const rdmec_field *f,
                                        int include_target, rdmec_unit unit,
                                        double *out);
/* Mean step count to reach the target from one voxel away (direction-
 * averaged over the target's jump destinations). Hitting fields only. */
RDMEC_API rdmec_status rdmec_field_steps_one(const rdmec_field *f, double *out);
RDMEC_API double rdmec_field_residual(const rdmec_field *f);

/* ---------------------------------------------------------------------
 * Association-rate models and critical mesh sizes.
 */
/* Diffusion-limited rate 4*pi*rho*D*k_r/(4*pi*rho*D + k_r), 3D only. */
RDMEC_API rdmec_status rdmec_conventional_ka(const rdmec_params *p, double *out);
/* Steady-state-matched propensity D*k_a/(D h^3 - beta k_a h^2); +inf at or
 * below its pole h_crit = beta*k_a/D. 3D only. */
RDMEC_API rdmec_status rdmec_erban_chapman_q(const rdmec_params *p, double h,
                                             double *out);
RDMEC_API rdmec_status rdmec_erban_chapman_h_crit(const rdmec_params *p,
                                                  double *out);
/* Equilibration-time-matched macroscopic rate (m^dim/s). */
RDMEC_API rdmec_status rdmec_fange_p(const rdmec_params *p, double h,
                                     double *out);
/* Macroscopic rate (m^dim/s) -> per-voxel propensity (1/s). */
RDMEC_API rdmec_status rdmec_to_propensity(double rate, double h, int dim,
                                           double *out);
/* Propensity matched so the mesoscopic mean association time equals
 * tau_micro; asymptotic variant uses the closed-form lattice asymptotics. */
RDMEC_API rdmec_status rdmec_k_meso_matched_asym(const rdmec_params *p,
                                                 double h, double tau_micro,
                                                 double *out);
RDMEC_API rdmec_status rdmec_k_meso_matched_exact(double tau_micro,
                                                  double tau_d,
                                                  double steps_one,
                                                  double *out);
/* Root of tau_D(h) = tau_micro: the mesh size below which no local rate
 * correction can reproduce tau_micro. */
RDMEC_API rdmec_status rdmec_critical_h(const rdmec_params *p,
                                        double tau_micro, double *out);
RDMEC_API rdmec_status rdmec_tau_micro_analytic(const rdmec_params *p,
                                                double *out);
RDMEC_API rdmec_status rdmec_tau_d_asymptotic(const rdmec_params *p, double h,
                                              double *out);
/* Lattice mean first-passage asymptotics for N voxels: uniform-start step
 * count and the one-voxel-away step count. */
RDMEC_API rdmec_status rdmec_montroll_steps(int dim, int64_t voxels,
                                            double *n_steps,
                                            double *n_steps_one);

/* ---------------------------------------------------------------------
 * Stochastic estimates.
 */
typedef struct rdmec_stats {
  double mean;
  double se;   /* sample standard deviation / sqrt(n); 0 for n = 1 */
  double min;
  double max;
  int64_t n;
} rdmec_stats;

/* Exact event-driven simulation of the diffusing pair; returns Monte Carlo
 * statistics of the association time. Deterministic for fixed seed,
 * independent of the thread count. */
RDMEC_API rdmec_status rdmec_ssa_estimate(const rdmec_lattice *l, double diff,
                                          double k_meso, rdmec_start start,
                                          int64_t start_voxel, int64_t samples,
                                          uint64_t seed, int threads,
                                          rdmec_stats *out);

/* Fixed-step Brownian dynamics oracle for the microscopic (continuous-space)
 * pair problem in the absorbing limit. dt_levels must be non-increasing;
 * level_stats must hold n_levels entries. extrapolated returns the
 * linear-in-sqrt(dt) extrapolation of the level means. */
RDMEC_API rdmec_status rdmec_bd_estimate(const rdmec_params *p,
                                         rdmec_boundary bc,
                                         const double *dt_levels, int n_levels,
                                         int64_t samples, uint64_t seed,
                                         int threads, rdmec_stats *level_stats,
                                         double *extrapolated);

/* ---------------------------------------------------------------------
 * Experiment harness: sweeps over mesh resolutions, validation suite and
 * CSV emission. Configs come from built-in presets, flat key = value files,
 * or individual key overrides, in that order.
 */
typedef struct rdmec_config rdmec_config;
/* preset: "coloc" (co-location time sweep), "correction" (corrected-rate
 * sweep), "validate", "micro-bd"; NULL means "coloc". */
RDMEC_API rdmec_status rdmec_config_create(int dim, const char *preset,
                                           rdmec_config **out);
RDMEC_API rdmec_status rdmec_config_load(rdmec_config *c, const char *path);
RDMEC_API rdmec_status rdmec_config_set(rdmec_config *c, const char *key,
                                        const char *value);
RDMEC_API void rdmec_config_destroy(rdmec_config *c);

typedef struct rdmec_crossing {
  double closed_form_h_star; /* root of asymptotic tau_D(h) = tau_micro */
  double ec_h_crit;          /* Erban-Chapman pole (0 when undefined) */
  double bracket_hi;         /* sweep h values straddling the sign change */
  double bracket_lo;         /* (0,0 when the sweep found none)          */
  double interpolated;       /* linear interpolation of the crossing */
  int found;
} rdmec_crossing;

/* Mesh sweep of the exact co-location time tau_D against tau_micro; writes
 * one CSV row per mesh size. primary reports the crossing for the configured
 * boundary, other_boundary (optional) for the complementary one. */
RDMEC_API rdmec_status rdmec_run_coloc_sweep(const rdmec_config *c,
                                             const char *csv_path,
                                             rdmec_crossing *primary,
                                             rdmec_crossing *other_boundary);
/* Mesh sweep of the mean association time under each configured rate model. */
RDMEC_API rdmec_status rdmec_run_correction_sweep(const rdmec_config *c,
                                                  const char *csv_path);
/* Rate-model catalogue per mesh size (no absorption solves). */
RDMEC_API rdmec_status rdmec_run_rates_table(const rdmec_config *c,
                                             const char *csv_path);
RDMEC_API rdmec_status rdmec_run_critical_h(const rdmec_config *c,
                                            rdmec_crossing *out);
/* Runs the validation suite; *report receives a pass/fail line per check
 * (free with rdmec_free_string). Returns RDMEC_ERR_VALIDATION and sets
 * *n_failed when any check fails. */
RDMEC_API rdmec_status rdmec_validate(const rdmec_config *c, char **report,
                                      int *n_failed);
/* Brownian-dynamics oracle run per configured dt level plus extrapolation. */
RDMEC_API rdmec_status rdmec_run_micro_bd(const rdmec_config *c, char **report);

#ifdef __cplusplus
}
#endif

#endif /* RDMECRIT_H */
