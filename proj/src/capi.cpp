#include "specrange/specrange.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "ensembles.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "metrics.hpp"
#include "numrange.hpp"
#include "version.hpp"

using namespace specrange;

namespace {

thread_local std::string g_last_error;

sr_status fail(sr_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
sr_status guarded(Fn&& fn) {
  try {
    fn();
    return SR_OK;
  } catch (const NonConvergence& e) {
    return fail(SR_ERR_NON_CONVERGENCE, e.what());
  } catch (const DimensionMismatch& e) {
    return fail(SR_ERR_DIMENSION_MISMATCH, e.what());
  } catch (const InvalidSpec& e) {
    return fail(SR_ERR_INVALID_SPEC, e.what());
  } catch (const GridMismatch& e) {
    return fail(SR_ERR_GRID_MISMATCH, e.what());
  } catch (const DegenerateRange& e) {
    return fail(SR_ERR_DEGENERATE_RANGE, e.what());
  } catch (const DomainError& e) {
    return fail(SR_ERR_DOMAIN, e.what());
  } catch (const IoError& e) {
    return fail(SR_ERR_IO, e.what());
  } catch (const InvalidArgument& e) {
    return fail(SR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SR_ERR_INTERNAL, "unknown error");
  }
}

std::string join_path(const char* dir, const char* name) {
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace

struct sr_matrix {
  ComplexMatrix m;
};

struct sr_analysis {
  std::size_t n = 0;
  SupportProfile profile;
  Spectrum spectrum;
  MetricsReport metrics;
  std::optional<double> area_ratio;
  ConvexPolygon inner;
  double gap = 0.0;
};

extern "C" {

const char* sr_status_name(sr_status status) {
  switch (status) {
    case SR_OK: return "ok";
    case SR_ERR_NULL_ARGUMENT: return "null argument";
    case SR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SR_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case SR_ERR_NON_CONVERGENCE: return "eigensolver did not converge";
    case SR_ERR_INVALID_SPEC: return "invalid ensemble spec";
    case SR_ERR_GRID_MISMATCH: return "grid mismatch";
    case SR_ERR_DEGENERATE_RANGE: return "degenerate range";
    case SR_ERR_DOMAIN: return "domain error";
    case SR_ERR_IO: return "io error";
    case SR_ERR_CHECK_FAILED: return "check failed";
    case SR_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* sr_last_error(void) { return g_last_error.c_str(); }

const char* sr_version(void) { return kCodeVersion; }

sr_status sr_matrix_create(uint64_t n, const double* entries, sr_matrix** out) {
  if (!out) return fail(SR_ERR_NULL_ARGUMENT, "out is null");
  *out = nullptr;
  return guarded([&] {
    auto* h = new sr_matrix{ComplexMatrix(n)};
    if (entries) {
      try {
        h->m = ComplexMatrix::from_entries(
            n, std::span<const cx>(reinterpret_cast<const cx*>(entries), n * n));
      } catch (...) {
        delete h;
        throw;
      }
    }
    *out = h;
  });
}

void sr_matrix_free(sr_matrix* m) { delete m; }

uint64_t sr_matrix_dim(const sr_matrix* m) { return m ? m->m.dim() : 0; }

sr_status sr_matrix_get(const sr_matrix* m, uint64_t i, uint64_t j, double* re,
                        double* im) {
  if (!m || !re || !im) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  if (i >= m->m.dim() || j >= m->m.dim())
    return fail(SR_ERR_INVALID_ARGUMENT, "index out of range");
  *re = m->m(i, j).real();
  *im = m->m(i, j).imag();
  return SR_OK;
}

sr_status sr_matrix_copy_data(const sr_matrix* m, double* out) {
  if (!m || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  std::memcpy(out, m->m.data(), m->m.dim() * m->m.dim() * sizeof(cx));
  return SR_OK;
}

sr_status sr_sample(const char* ensemble, uint64_t n, uint64_t master_seed,
                    uint64_t stream_index, sr_matrix** out) {
  if (!ensemble || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const EnsembleSpec spec = EnsembleSpec::parse(ensemble, n);
    RngStream stream(master_seed, stream_index);
    *out = new sr_matrix{sample(spec, stream)};
  });
}

sr_status sr_matrix_write_csv(const sr_matrix* m, const char* path) {
  if (!m || !path) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { write_matrix_csv(m->m, path); });
}

sr_status sr_matrix_read_csv(const char* path, sr_matrix** out) {
  if (!path || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sr_matrix{read_matrix_csv(path)}; });
}

sr_status sr_matrix_write_binary(const sr_matrix* m, const char* path) {
  if (!m || !path) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { write_matrix_binary(m->m, path); });
}

sr_status sr_matrix_read_binary(const char* path, sr_matrix** out) {
  if (!path || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sr_matrix{read_matrix_binary(path)}; });
}

sr_status sr_operator_norm(const sr_matrix* m, double* out) {
  if (!m || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = operator_norm(m->m); });
}

sr_status sr_analyze(const sr_matrix* m, uint64_t grid, int has_target,
                     double target_radius, uint64_t threads, sr_analysis** out) {
  if (!m || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto a = std::make_unique<sr_analysis>();
    a->n = m->m.dim();
    a->profile = support_profile(m->m, grid, unsigned(threads));
    a->spectrum = eigenvalues_general(m->m);
    const RangePolygons rp = inner_outer_range(a->profile);
    a->inner = rp.inner;
    a->gap = rp.gap;

    MetricsReport& r = a->metrics;
    r.n = a->n;
    r.hs_norm = hs_norm(m->m);
    r.operator_norm = operator_norm(m->m);
    r.alpha = alpha_scaling(m->m);
    r.nonzero_trace = std::abs(trace(m->m)) >
                      1e-8 * double(a->n) * std::max(r.operator_norm, 1e-300);
    r.spectral_radius = spectral_radius(a->spectrum);
    double eig2 = 0.0;
    for (const cx& z : a->spectrum.eigenvalues) eig2 += std::norm(z);
    r.mu3 = std::sqrt(std::max(0.0, r.hs_norm * r.hs_norm - eig2));
    r.mu3_squared_over_n = r.mu3 * r.mu3 / double(a->n);
    r.numerical_radius = numerical_radius(a->profile);
    if (has_target) {
      r.target_radius = target_radius;
      const DiskDistance d = hausdorff_to_disk(a->profile, target_radius);
      r.hausdorff_to_target = d.raw;
      r.hausdorff_certified = d.certified;
    }
    try {
      a->area_ratio = area_ratio(a->profile, a->spectrum);
    } catch (const DegenerateRange&) {
      a->area_ratio.reset();
    }
    *out = a.release();
  });
}

void sr_analysis_free(sr_analysis* a) { delete a; }

uint64_t sr_analysis_grid(const sr_analysis* a) { return a ? a->profile.grid_size : 0; }

uint64_t sr_analysis_dim(const sr_analysis* a) { return a ? a->n : 0; }

sr_status sr_analysis_profile(const sr_analysis* a, double* thetas, double* lambdas,
                              double* norms, double* boundary) {
  if (!a) return fail(SR_ERR_NULL_ARGUMENT, "null analysis");
  const std::size_t m = a->profile.grid_size;
  if (thetas) std::memcpy(thetas, a->profile.thetas.data(), m * sizeof(double));
  if (lambdas) std::memcpy(lambdas, a->profile.lambdas.data(), m * sizeof(double));
  if (norms) std::memcpy(norms, a->profile.norms.data(), m * sizeof(double));
  if (boundary) std::memcpy(boundary, a->profile.boundary.data(), m * sizeof(cx));
  return SR_OK;
}

sr_status sr_analysis_spectrum(const sr_analysis* a, double* out) {
  if (!a || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  std::memcpy(out, a->spectrum.eigenvalues.data(), a->n * sizeof(cx));
  return SR_OK;
}

sr_status sr_analysis_inner_hull(const sr_analysis* a, double* out, uint64_t* count) {
  if (!a || !out || !count) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  if (a->inner.vertices.size() > a->profile.grid_size)
    return fail(SR_ERR_INTERNAL, "hull larger than grid");
  std::memcpy(out, a->inner.vertices.data(), a->inner.vertices.size() * sizeof(cx));
  *count = a->inner.vertices.size();
  return SR_OK;
}

sr_status sr_analysis_metric(const sr_analysis* a, const char* name, double* out) {
  if (!a || !name || !out) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  const std::string key(name);
  const MetricsReport& r = a->metrics;
  auto opt = [&](const std::optional<double>& v) {
    if (!v) return fail(SR_ERR_DEGENERATE_RANGE, "metric undefined for this matrix");
    *out = *v;
    return SR_OK;
  };
  if (key == "n") { *out = double(r.n); return SR_OK; }
  if (key == "operator_norm") { *out = r.operator_norm; return SR_OK; }
  if (key == "numerical_radius") { *out = r.numerical_radius; return SR_OK; }
  if (key == "spectral_radius") { *out = r.spectral_radius; return SR_OK; }
  if (key == "mu3") { *out = r.mu3; return SR_OK; }
  if (key == "mu3_squared_over_n") { *out = r.mu3_squared_over_n; return SR_OK; }
  if (key == "alpha") { *out = r.alpha; return SR_OK; }
  if (key == "hs_norm") { *out = r.hs_norm; return SR_OK; }
  if (key == "discretization_gap") { *out = a->gap; return SR_OK; }
  if (key == "target_radius") return opt(r.target_radius);
  if (key == "hausdorff_to_target") return opt(r.hausdorff_to_target);
  if (key == "hausdorff_certified") return opt(r.hausdorff_certified);
  if (key == "area_ratio") return opt(a->area_ratio);
  return fail(SR_ERR_INVALID_ARGUMENT, "unknown metric name");
}

sr_status sr_analysis_write_profile_csv(const sr_analysis* a, const char* path) {
  if (!a || !path) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { write_profile_csv(a->profile, path); });
}

sr_status sr_analysis_write_spectrum_csv(const sr_analysis* a, const char* path) {
  if (!a || !path) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { write_spectrum_csv(a->spectrum.eigenvalues, path); });
}

sr_status sr_analysis_write_metrics_json(const sr_analysis* a, const char* path) {
  if (!a || !path) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { write_metrics_json(a->metrics, a->area_ratio, path); });
}

sr_status sr_analysis_write_metrics_csv(const sr_analysis* a, const char* path) {
  if (!a || !path) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { write_metrics_csv(a->metrics, a->area_ratio, path); });
}

sr_status sr_star_membership(const double* radial, uint64_t grid, double z_re,
                             double z_im, double slack, int* member) {
  if (!radial || !member) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    StarBody k{std::size_t(grid), std::vector<double>(radial, radial + grid)};
    *member = star_membership(cx(z_re, z_im), k, slack) ? 1 : 0;
  });
}

double sr_max_abs_gaussian_bound(uint64_t n) {
  return max_abs_gaussian_bound(std::size_t(n));
}

sr_status sr_mega_bound(double r, double a, double eps, double p_n,
                        double q_n_at_eps_sq, double* out) {
  if (!out) return fail(SR_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { *out = mega_bound(r, a, eps, p_n, q_n_at_eps_sq); });
}

sr_status sr_run_sweep(const char* ensemble, const uint64_t* n_list, uint64_t n_count,
                       uint64_t trials, uint64_t grid, int has_target,
                       double target_radius, uint64_t master_seed, uint64_t threads,
                       int check, const char* outdir, int* check_failures) {
  if (!ensemble || !n_list || !outdir)
    return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  if (check_failures) *check_failures = 0;
  return guarded([&] {
    std::vector<std::size_t> sizes(n_list, n_list + n_count);
    const EnsembleSpec proto =
        EnsembleSpec::parse(ensemble, sizes.empty() ? 2 : sizes.front());
    const std::optional<double> target =
        has_target ? std::optional<double>(target_radius) : std::nullopt;

    ManifestInfo info;
    info.command = "sweep";
    info.ensemble = proto.to_string();
    info.n_list = sizes;
    info.trials = trials;
    info.m = grid;
    info.master_seed = master_seed;
    info.target_radius = target;
    write_manifest(info, join_path(outdir, "manifest.json"));

    const SweepResult res =
        run_sweep(proto, sizes, trials, grid, target, master_seed, unsigned(threads));
    std::vector<CheckResult> checks;
    if (check) checks = sweep_checks(proto, res, target);
    write_records_csv(res.records, join_path(outdir, "records.csv"));
    write_sweep_summary_json(proto, res, checks, join_path(outdir, "summary.json"));

    std::size_t failed_trials = 0;
    for (const auto& r : res.records)
      if (!r.ok) ++failed_trials;
    if (failed_trials * 100 > res.records.size())
      throw NonConvergence("more than 1% of trials failed", failed_trials);

    int failures = 0;
    for (const auto& c : checks)
      if (!c.pass) ++failures;
    if (check_failures) *check_failures = failures;
  });
}

sr_status sr_run_tail(const char* ensemble, uint64_t n, uint64_t trials,
                      const char* statistic, double target_radius,
                      const double* epsilons, uint64_t eps_count, int has_bound,
                      double bound_big_c, double bound_small_c, uint64_t grid,
                      uint64_t master_seed, uint64_t threads, int check,
                      const char* outdir, int* check_failures) {
  if (!ensemble || !statistic || !epsilons || !outdir)
    return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  if (check_failures) *check_failures = 0;
  return guarded([&] {
    const EnsembleSpec spec = EnsembleSpec::parse(ensemble, n);
    TailStatistic stat;
    const std::string st(statistic);
    if (st == "hausdorff") stat = TailStatistic::HausdorffToDisk;
    else if (st == "re-norm") stat = TailStatistic::RePartNormDeviation;
    else throw InvalidArgument("statistic must be 'hausdorff' or 're-norm'");

    ManifestInfo info;
    info.command = "tail";
    info.ensemble = spec.to_string();
    info.n_list = {std::size_t(n)};
    info.trials = trials;
    info.m = grid;
    info.master_seed = master_seed;
    info.target_radius = target_radius;
    write_manifest(info, join_path(outdir, "manifest.json"));

    std::optional<std::pair<double, double>> bound;
    if (has_bound) bound = std::make_pair(bound_big_c, bound_small_c);
    const TailEstimate t = tail_estimate(
        spec, trials, stat, target_radius,
        std::vector<double>(epsilons, epsilons + eps_count), master_seed, grid,
        bound, unsigned(threads));
    std::vector<CheckResult> checks;
    if (check) checks = tail_checks(t);
    write_tail_csv(t, join_path(outdir, "tail.csv"));
    write_tail_summary_json(spec, t, checks, join_path(outdir, "summary.json"));

    int failures = 0;
    for (const auto& c : checks)
      if (!c.pass) ++failures;
    if (check_failures) *check_failures = failures;
  });
}

sr_status sr_run_norms(const uint64_t* n_list, uint64_t n_count,
                       const uint64_t* k_list, uint64_t k_count, uint64_t trials,
                       uint64_t master_seed, uint64_t threads, int check,
                       const char* outdir, int* check_failures) {
  if (!n_list || !k_list || !outdir) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  if (check_failures) *check_failures = 0;
  return guarded([&] {
    std::vector<std::size_t> sizes(n_list, n_list + n_count);
    std::vector<int> ks;
    for (uint64_t i = 0; i < k_count; ++i) ks.push_back(int(k_list[i]));

    ManifestInfo info;
    info.command = "norms";
    info.n_list = sizes;
    info.trials = trials;
    info.master_seed = master_seed;
    write_manifest(info, join_path(outdir, "manifest.json"));

    const NormStudy s =
        norm_convergence_study(sizes, ks, trials, master_seed, unsigned(threads));
    std::vector<CheckResult> checks;
    if (check) checks = norm_checks(s);
    write_norms_csv(s, join_path(outdir, "norms.csv"));
    write_norms_summary_json(s, checks, join_path(outdir, "summary.json"));

    int failures = 0;
    for (const auto& c : checks)
      if (!c.pass) ++failures;
    if (check_failures) *check_failures = failures;
  });
}

sr_status sr_run_moments(uint64_t n, uint64_t trials, uint64_t lmax,
                         uint64_t master_seed, uint64_t threads, int check,
                         const char* outdir, int* check_failures) {
  if (!outdir) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  if (check_failures) *check_failures = 0;
  return guarded([&] {
    ManifestInfo info;
    info.command = "moments";
    info.ensemble = "triangular-bar";
    info.n_list = {std::size_t(n)};
    info.trials = trials;
    info.master_seed = master_seed;
    write_manifest(info, join_path(outdir, "manifest.json"));

    const MomentStudy s =
        moment_study(std::size_t(n), trials, unsigned(lmax), master_seed,
                     unsigned(threads));
    std::vector<CheckResult> checks;
    if (check) checks = moment_checks(s);
    write_moments_csv(s, join_path(outdir, "moments.csv"));
    write_moments_summary_json(s, checks, join_path(outdir, "summary.json"));

    int failures = 0;
    for (const auto& c : checks)
      if (!c.pass) ++failures;
    if (check_failures) *check_failures = failures;
  });
}

sr_status sr_write_manifest(const char* outdir, const char* command,
                            const char* ensemble, const uint64_t* n_list,
                            uint64_t n_count, uint64_t trials, uint64_t grid,
                            uint64_t master_seed, int has_target,
                            double target_radius) {
  if (!outdir || !command) return fail(SR_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    ManifestInfo info;
    info.command = command;
    if (ensemble) info.ensemble = std::string(ensemble);
    if (n_list)
      info.n_list.assign(n_list, n_list + n_count);
    info.trials = trials;
    info.m = grid;
    info.master_seed = master_seed;
    if (has_target) info.target_radius = target_radius;
    write_manifest(info, join_path(outdir, "manifest.json"));
  });
}

uint64_t sr_stream_index(uint64_t n, uint64_t trial) {
  return derive_stream_index(n, trial);
}

}  // extern "C"
