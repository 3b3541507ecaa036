// specrange CLI: sampling, numerical-range computation, Monte Carlo sweeps,
// tail studies, triangular norm tables and moment tables.  The binary talks
// to the core exclusively through the C API in specrange/specrange.h.
//
// Exit codes: 0 ok, 1 usage error, 2 numerical/IO failure, 3 check failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specrange/specrange.h"
#include "svg_plot.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPECRANGE_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    std::fprintf(stderr, "specrange: ignoring malformed SPECRANGE_SEED '%s'\n", env);
  }
  return kDefaultSeed;
}

int fail_status(sr_status st, const char* what) {
  std::fprintf(stderr, "specrange: %s: %s (%s)\n", what, sr_last_error(),
               sr_status_name(st));
  return 2;
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

struct MatrixHandle {
  sr_matrix* m = nullptr;
  ~MatrixHandle() { sr_matrix_free(m); }
};

struct AnalysisHandle {
  sr_analysis* a = nullptr;
  ~AnalysisHandle() { sr_analysis_free(a); }
};

int write_range_svg(const sr_analysis* a, bool has_target, double target,
                    const std::string& path) {
  const std::uint64_t m = sr_analysis_grid(a);
  const std::uint64_t n = sr_analysis_dim(a);

  std::vector<double> hull(2 * m);
  std::uint64_t hull_count = 0;
  if (sr_analysis_inner_hull(a, hull.data(), &hull_count) != SR_OK) return 2;
  std::vector<double> spectrum(2 * n);
  if (sr_analysis_spectrum(a, spectrum.data()) != SR_OK) return 2;

  double radius = 0.0;
  sr_analysis_metric(a, "numerical_radius", &radius);
  double world = std::max(radius, 1.0);
  if (has_target) world = std::max(world, target);

  svgplot::RangePlot plot(1.1 * world, has_target, target);
  std::vector<svgplot::Point> hull_pts(hull_count);
  for (std::uint64_t i = 0; i < hull_count; ++i)
    hull_pts[i] = {hull[2 * i], hull[2 * i + 1]};
  plot.set_polygon(std::move(hull_pts));
  std::vector<svgplot::Point> dots(n);
  for (std::uint64_t i = 0; i < n; ++i) dots[i] = {spectrum[2 * i], spectrum[2 * i + 1]};
  plot.set_dots(std::move(dots));

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "specrange: cannot write %s\n", path.c_str());
    return 2;
  }
  out << plot.render();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"specrange: numerical ranges of random matrices"};
  app.require_subcommand(1);

  // ---- common option storage ----
  std::string ensemble, matrix_file, statistic = "re-norm";
  std::string outdir = "specrange-out";
  std::uint64_t n = 0, trials = 8, grid = 256, lmax = 5, threads = 0;
  std::uint64_t seed = default_seed();
  std::vector<std::uint64_t> n_list, k_list;
  std::vector<double> epsilons;
  double target_radius = 0.0, bound_C = 0.0, bound_c = 0.0;
  bool check = false;

  auto* gen = app.add_subcommand("gen", "sample one matrix and write CSV + binary");
  gen->add_option("--ensemble", ensemble, "ensemble token")->required();
  gen->add_option("--n", n, "dimension")->required();
  gen->add_option("--seed", seed, "master seed");
  gen->add_option("--out", outdir, "output directory");

  auto* range = app.add_subcommand(
      "range", "support profile, spectrum, metrics and SVG for one matrix");
  range->add_option("--ensemble", ensemble, "ensemble token (sampled input)");
  range->add_option("--matrix", matrix_file, "read matrix from file (.csv or .bin)");
  range->add_option("--n", n, "dimension (with --ensemble)");
  range->add_option("--m", grid, "support grid size (even, >= 8)");
  auto* range_target = range->add_option("--target-radius", target_radius,
                                         "disk radius for Hausdorff distance");
  range->add_option("--seed", seed, "master seed");
  range->add_option("--threads", threads, "worker threads (0 = all cores)");
  range->add_option("--out", outdir, "output directory");

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over matrix sizes");
  sweep->add_option("--ensemble", ensemble, "ensemble token")->required();
  sweep->add_option("--n", n_list, "sizes (comma separated)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--trials", trials, "trials per size");
  sweep->add_option("--m", grid, "support grid size");
  auto* sweep_target = sweep->add_option("--target-radius", target_radius,
                                         "disk radius for Hausdorff distance");
  sweep->add_option("--seed", seed, "master seed");
  sweep->add_option("--threads", threads, "worker threads");
  sweep->add_option("--out", outdir, "output directory");
  sweep->add_flag("--check", check, "evaluate calibrated threshold checks");

  auto* tail = app.add_subcommand("tail", "empirical tail probabilities");
  tail->add_option("--ensemble", ensemble, "ensemble token")->required();
  tail->add_option("--n", n, "dimension")->required();
  tail->add_option("--trials", trials, "number of trials (>= 100)");
  tail->add_option("--statistic", statistic, "hausdorff | re-norm");
  tail->add_option("--target-radius", target_radius, "reference radius R")->required();
  tail->add_option("--epsilons", epsilons, "epsilon grid")->required()->delimiter(',');
  auto* tail_bc = tail->add_option("--bound-C", bound_C, "overlay constant C");
  tail->add_option("--bound-c", bound_c, "overlay constant c")->needs(tail_bc);
  tail->add_option("--m", grid, "support grid size (hausdorff statistic)");
  tail->add_option("--seed", seed, "master seed");
  tail->add_option("--threads", threads, "worker threads");
  tail->add_option("--out", outdir, "output directory");
  tail->add_flag("--check", check, "evaluate monotonicity check");

  auto* norms = app.add_subcommand(
      "norms", "triangular norm convergence (block coupling, sqrt(e) limit)");
  norms->add_option("--n", n_list, "sizes")->required()->delimiter(',');
  norms->add_option("--k", k_list, "block counts")->delimiter(',');
  norms->add_option("--trials", trials, "trials per size");
  norms->add_option("--seed", seed, "master seed");
  norms->add_option("--threads", threads, "worker threads");
  norms->add_option("--out", outdir, "output directory");
  norms->add_flag("--check", check, "evaluate calibrated threshold checks");

  auto* moments = app.add_subcommand(
      "moments", "normalized moments of T-bar vs the l^l/(l+1)! limits");
  moments->add_option("--n", n, "dimension")->required();
  moments->add_option("--trials", trials, "number of trials");
  moments->add_option("--lmax", lmax, "largest moment order");
  moments->add_option("--seed", seed, "master seed");
  moments->add_option("--threads", threads, "worker threads");
  moments->add_option("--out", outdir, "output directory");
  moments->add_flag("--check", check, "evaluate calibrated threshold checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (gen->parsed()) {
    const std::uint64_t nl[] = {n};
    sr_status st = sr_write_manifest(outdir.c_str(), "gen", ensemble.c_str(), nl, 1,
                                     1, 0, seed, 0, 0.0);
    if (st != SR_OK) return fail_status(st, "manifest");
    MatrixHandle h;
    st = sr_sample(ensemble.c_str(), n, seed, sr_stream_index(n, 0), &h.m);
    if (st != SR_OK) {
      if (st == SR_ERR_INVALID_SPEC || st == SR_ERR_INVALID_ARGUMENT) {
        std::fprintf(stderr, "specrange: %s\n", sr_last_error());
        return 1;
      }
      return fail_status(st, "sample");
    }
    if ((st = sr_matrix_write_csv(h.m, join(outdir, "matrix.csv").c_str())) != SR_OK)
      return fail_status(st, "matrix.csv");
    if ((st = sr_matrix_write_binary(h.m, join(outdir, "matrix.bin").c_str())) != SR_OK)
      return fail_status(st, "matrix.bin");
    std::printf("wrote %s and %s (n=%llu, ensemble=%s, seed=%llu)\n",
                join(outdir, "matrix.csv").c_str(), join(outdir, "matrix.bin").c_str(),
                (unsigned long long)n, ensemble.c_str(), (unsigned long long)seed);
    return 0;
  }

  if (range->parsed()) {
    const bool has_target = range_target->count() > 0;
    if (ensemble.empty() == matrix_file.empty()) {
      std::fprintf(stderr, "specrange: range needs exactly one of --ensemble / --matrix\n");
      return 1;
    }
    MatrixHandle h;
    sr_status st;
    if (!matrix_file.empty()) {
      const bool binary = matrix_file.size() > 4 &&
                          matrix_file.compare(matrix_file.size() - 4, 4, ".bin") == 0;
      st = binary ? sr_matrix_read_binary(matrix_file.c_str(), &h.m)
                  : sr_matrix_read_csv(matrix_file.c_str(), &h.m);
      if (st != SR_OK) return fail_status(st, matrix_file.c_str());
      n = sr_matrix_dim(h.m);
    } else {
      if (n == 0) {
        std::fprintf(stderr, "specrange: range --ensemble needs --n\n");
        return 1;
      }
      st = sr_sample(ensemble.c_str(), n, seed, sr_stream_index(n, 0), &h.m);
      if (st == SR_ERR_INVALID_SPEC) {
        std::fprintf(stderr, "specrange: %s\n", sr_last_error());
        return 1;
      }
      if (st != SR_OK) return fail_status(st, "sample");
    }
    const std::uint64_t nl[] = {n};
    st = sr_write_manifest(outdir.c_str(), "range",
                           ensemble.empty() ? nullptr : ensemble.c_str(), nl, 1, 1,
                           grid, seed, has_target ? 1 : 0, target_radius);
    if (st != SR_OK) return fail_status(st, "manifest");

    AnalysisHandle a;
    st = sr_analyze(h.m, grid, has_target ? 1 : 0, target_radius, threads, &a.a);
    if (st == SR_ERR_INVALID_ARGUMENT) {
      std::fprintf(stderr, "specrange: %s\n", sr_last_error());
      return 1;
    }
    if (st != SR_OK) return fail_status(st, "analyze");

    if ((st = sr_analysis_write_profile_csv(a.a, join(outdir, "profile.csv").c_str())) != SR_OK)
      return fail_status(st, "profile.csv");
    if ((st = sr_analysis_write_spectrum_csv(a.a, join(outdir, "spectrum.csv").c_str())) != SR_OK)
      return fail_status(st, "spectrum.csv");
    if ((st = sr_analysis_write_metrics_json(a.a, join(outdir, "metrics.json").c_str())) != SR_OK)
      return fail_status(st, "metrics.json");
    if ((st = sr_analysis_write_metrics_csv(a.a, join(outdir, "metrics.csv").c_str())) != SR_OK)
      return fail_status(st, "metrics.csv");
    const int rc = write_range_svg(a.a, has_target, target_radius,
                                   join(outdir, "range.svg"));
    if (rc != 0) return rc;

    double radius = 0.0, norm = 0.0;
    sr_analysis_metric(a.a, "numerical_radius", &radius);
    sr_analysis_metric(a.a, "operator_norm", &norm);
    std::printf("n=%llu  numerical_radius=%.6f  operator_norm=%.6f\n",
                (unsigned long long)n, radius, norm);
    if (has_target) {
      double d = 0.0;
      sr_analysis_metric(a.a, "hausdorff_to_target", &d);
      std::printf("hausdorff to D(0, %.6f): %.6f\n", target_radius, d);
    }
    return 0;
  }

  int failures = 0;
  sr_status st = SR_OK;

  if (sweep->parsed()) {
    const bool has_target = sweep_target->count() > 0;
    st = sr_run_sweep(ensemble.c_str(), n_list.data(), n_list.size(), trials, grid,
                      has_target ? 1 : 0, target_radius, seed, threads,
                      check ? 1 : 0, outdir.c_str(), &failures);
  } else if (tail->parsed()) {
    st = sr_run_tail(ensemble.c_str(), n, trials, statistic.c_str(), target_radius,
                     epsilons.data(), epsilons.size(), tail_bc->count() > 0 ? 1 : 0,
                     bound_C, bound_c, grid, seed, threads, check ? 1 : 0,
                     outdir.c_str(), &failures);
  } else if (norms->parsed()) {
    if (k_list.empty()) k_list = {4, 16, 64};
    st = sr_run_norms(n_list.data(), n_list.size(), k_list.data(), k_list.size(), trials, seed,
                      threads, check ? 1 : 0, outdir.c_str(), &failures);
  } else if (moments->parsed()) {
    st = sr_run_moments(n, trials, lmax, seed, threads, check ? 1 : 0,
                        outdir.c_str(), &failures);
    if (st == SR_OK) {
      // print the table alongside the files
      std::ifstream in(join(outdir, "moments.csv"));
      std::string line;
      std::printf("%-4s %-22s %-22s\n", "ell", "empirical", "limit l^l/(l+1)!");
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'e') continue;
        unsigned ell, nn, tt;
        double emp, lim, rel;
        if (std::sscanf(line.c_str(), "%u,%u,%u,%lf,%lf,%lf", &ell, &nn, &tt, &emp,
                        &lim, &rel) == 6)
          std::printf("%-4u %-22.10f %-22.10f\n", ell, emp, lim);
      }
    }
  }

  if (st == SR_ERR_INVALID_SPEC || st == SR_ERR_INVALID_ARGUMENT) {
    std::fprintf(stderr, "specrange: %s\n", sr_last_error());
    return 1;
  }
  if (st != SR_OK) return fail_status(st, "run");
  if (failures > 0) {
    std::fprintf(stderr, "specrange: %d check(s) failed; see summary.json\n", failures);
    return 3;
  }
  std::printf("wrote results to %s\n", outdir.c_str());
  return 0;
}
