/* specrange — numerical ranges of complex matrices and Monte Carlo studies
 * of random-matrix ensembles.
 *
 * C interface of the shared library.  All functions return sr_status;
 * SR_OK is 0.  On failure sr_last_error() returns a thread-local message.
 * Objects returned through sr_*_create / sr_sample / sr_analyze are owned
 * by the caller and released with the matching sr_*_free.
 *
 * Complex data crosses this interface as interleaved double pairs
 * (re, im), row-major for matrices.
 */
#ifndef SPECRANGE_H
#define SPECRANGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_ERR_NULL_ARGUMENT = 1,
  SR_ERR_INVALID_ARGUMENT = 2,
  SR_ERR_DIMENSION_MISMATCH = 3,
  SR_ERR_NON_CONVERGENCE = 4,
  SR_ERR_INVALID_SPEC = 5,
  SR_ERR_GRID_MISMATCH = 6,
  SR_ERR_DEGENERATE_RANGE = 7,
  SR_ERR_DOMAIN = 8,
  SR_ERR_IO = 9,
  SR_ERR_CHECK_FAILED = 10,
  SR_ERR_INTERNAL = 11
} sr_status;

const char* sr_status_name(sr_status status);
const char* sr_last_error(void);
const char* sr_version(void);

/* ---- matrices ---------------------------------------------------------- */

typedef struct sr_matrix sr_matrix;

/* entries may be NULL for a zero matrix; otherwise 2*n*n doubles. */
sr_status sr_matrix_create(uint64_t n, const double* entries, sr_matrix** out);
void sr_matrix_free(sr_matrix* m);
uint64_t sr_matrix_dim(const sr_matrix* m);
sr_status sr_matrix_get(const sr_matrix* m, uint64_t i, uint64_t j, double* re,
                        double* im);
sr_status sr_matrix_copy_data(const sr_matrix* m, double* out);

/* Ensemble tokens: ginibre-complex, ginibre-real, triangular-strict,
 * triangular-bar, triangular-block:<k>, diagonalized-ginibre,
 * diagonal-unitary, jordan, mixture:<base>:<a>, diag-plus-triangular,
 * unitary-plus-triangular, ellipse:<a>:<b>. */
sr_status sr_sample(const char* ensemble, uint64_t n, uint64_t master_seed,
                    uint64_t stream_index, sr_matrix** out);

sr_status sr_matrix_write_csv(const sr_matrix* m, const char* path);
sr_status sr_matrix_read_csv(const char* path, sr_matrix** out);
sr_status sr_matrix_write_binary(const sr_matrix* m, const char* path);
sr_status sr_matrix_read_binary(const char* path, sr_matrix** out);

sr_status sr_operator_norm(const sr_matrix* m, double* out);

/* ---- range analysis ----------------------------------------------------- */

/* Bundles the support profile (grid m), the spectrum, the metrics report and
 * the inner range polygon of one matrix. */
typedef struct sr_analysis sr_analysis;

sr_status sr_analyze(const sr_matrix* m, uint64_t grid, int has_target,
                     double target_radius, uint64_t threads, sr_analysis** out);
void sr_analysis_free(sr_analysis* a);

uint64_t sr_analysis_grid(const sr_analysis* a);
uint64_t sr_analysis_dim(const sr_analysis* a);

/* Any output pointer may be NULL.  thetas/lambdas/norms hold grid values;
 * boundary holds grid interleaved pairs. */
sr_status sr_analysis_profile(const sr_analysis* a, double* thetas, double* lambdas,
                              double* norms, double* boundary);
/* 2*dim doubles, eigenvalues sorted lexicographically by (re, im). */
sr_status sr_analysis_spectrum(const sr_analysis* a, double* out);
/* Inner range polygon: up to grid vertices; *count is set to the number
 * written.  out must hold 2*grid doubles. */
sr_status sr_analysis_inner_hull(const sr_analysis* a, double* out, uint64_t* count);

/* Named scalars: n, operator_norm, numerical_radius, spectral_radius, mu3,
 * mu3_squared_over_n, alpha, hs_norm, target_radius, hausdorff_to_target,
 * hausdorff_certified, area_ratio, discretization_gap.  Returns
 * SR_ERR_DEGENERATE_RANGE for optional scalars that are undefined here. */
sr_status sr_analysis_metric(const sr_analysis* a, const char* name, double* out);

sr_status sr_analysis_write_profile_csv(const sr_analysis* a, const char* path);
sr_status sr_analysis_write_spectrum_csv(const sr_analysis* a, const char* path);
sr_status sr_analysis_write_metrics_json(const sr_analysis* a, const char* path);
sr_status sr_analysis_write_metrics_csv(const sr_analysis* a, const char* path);

/* Membership test for the star body with radial samples R(theta_j) on the
 * uniform grid (convention: the point in direction e^{-i theta} has radius
 * R(theta); linear interpolation between nodes). */
sr_status sr_star_membership(const double* radial, uint64_t grid, double z_re,
                             double z_im, double slack, int* member);

/* sqrt(2 ln(2n)) */
double sr_max_abs_gaussian_bound(uint64_t n);

/* p_N + 7 R eps^-2 q_N(eps^2); domain-checked. */
sr_status sr_mega_bound(double r, double a, double eps, double p_n,
                        double q_n_at_eps_sq, double* out);

/* ---- experiment runners -------------------------------------------------
 * Each runner writes manifest.json first, then its data files, into outdir:
 *   sweep:   records.csv, summary.json
 *   tail:    tail.csv, summary.json
 *   norms:   norms.csv, summary.json
 *   moments: moments.csv, summary.json
 * With check != 0 the calibrated threshold checks run; *check_failures
 * receives the number of failed checks (0 when passing) and the summary
 * records every verdict. */

sr_status sr_run_sweep(const char* ensemble, const uint64_t* n_list, uint64_t n_count,
                       uint64_t trials, uint64_t grid, int has_target,
                       double target_radius, uint64_t master_seed, uint64_t threads,
                       int check, const char* outdir, int* check_failures);

sr_status sr_run_tail(const char* ensemble, uint64_t n, uint64_t trials,
                      const char* statistic /* "hausdorff" | "re-norm" */,
                      double target_radius, const double* epsilons,
                      uint64_t eps_count, int has_bound, double bound_big_c,
                      double bound_small_c, uint64_t grid, uint64_t master_seed,
                      uint64_t threads, int check, const char* outdir,
                      int* check_failures);

sr_status sr_run_norms(const uint64_t* n_list, uint64_t n_count,
                       const uint64_t* k_list, uint64_t k_count, uint64_t trials,
                       uint64_t master_seed, uint64_t threads, int check,
                       const char* outdir, int* check_failures);

sr_status sr_run_moments(uint64_t n, uint64_t trials, uint64_t lmax,
                         uint64_t master_seed, uint64_t threads, int check,
                         const char* outdir, int* check_failures);

/* Manifest for commands that do not go through a runner (gen, range). */
sr_status sr_write_manifest(const char* outdir, const char* command,
                            const char* ensemble /* may be NULL */,
                            const uint64_t* n_list, uint64_t n_count,
                            uint64_t trials, uint64_t grid, uint64_t master_seed,
                            int has_target, double target_radius);

/* Stream index used for trial t at size n (mix64(n) ^ mix64(t << 32)). */
uint64_t sr_stream_index(uint64_t n, uint64_t trial);

#ifdef __cplusplus
}
#endif

#endif /* SPECRANGE_H */
