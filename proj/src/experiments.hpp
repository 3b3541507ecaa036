#ifndef SPECRANGE_EXPERIMENTS_HPP
#define SPECRANGE_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ensembles.hpp"
#include "metrics.hpp"

namespace specrange {

// One Monte Carlo trial.  Fully determined by (spec, n, master_seed,
// trial_index); failed trials keep their error text and are excluded from
// aggregates but never dropped from the record list.
struct ExperimentRecord {
  EnsembleSpec spec;
  std::size_t n = 0;
  std::uint64_t trial_index = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
  bool ok = false;
  std::string error;
  MetricsReport metrics;
  std::optional<double> area_ratio;
  double wall_time_s = 0.0;
};

struct Aggregate {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};
Aggregate aggregate(std::vector<double> values);

// Per-size summary of a sweep.
struct SweepRow {
  std::size_t n = 0;
  std::size_t ok = 0;
  std::size_t failed = 0;
  Aggregate operator_norm, numerical_radius, spectral_radius, mu3_sq_over_n;
  Aggregate hausdorff;  // raw; empty when no target radius was given
  Aggregate area_ratio; // over trials where it is defined
};

struct SweepResult {
  std::vector<ExperimentRecord> records;  // sorted by (n, trial_index)
  std::vector<SweepRow> rows;             // ascending n
};

// Runs trials for every (n, trial) pair; the stream index of a pair is
// derive_stream_index(n, trial), so results do not depend on which sizes are
// swept together or on scheduling.
SweepResult run_sweep(const EnsembleSpec& proto, const std::vector<std::size_t>& n_list,
                      std::size_t trials, std::size_t m,
                      std::optional<double> target_radius, std::uint64_t master_seed,
                      unsigned threads = 0);

enum class TailStatistic {
  HausdorffToDisk,       // raw d_H(W(X), D(0, R)) from the support profile
  RePartNormDeviation,   // |  ||Re X|| - R  |
};

struct TailEstimate {
  std::vector<double> epsilons;
  std::size_t trials = 0;
  std::vector<std::size_t> exceed;  // #{ statistic >= eps }
  std::vector<double> p_hat;
  std::vector<double> wilson_lo, wilson_hi;  // 95% interval
  std::vector<double> bound_form;  // C eps^-2 exp(-c n eps^3); empty if no (C, c)
};

TailEstimate tail_estimate(const EnsembleSpec& spec, std::size_t trials,
                           TailStatistic statistic, double target_radius,
                           std::vector<double> epsilons, std::uint64_t master_seed,
                           std::size_t m,
                           std::optional<std::pair<double, double>> bound_consts,
                           unsigned threads = 0);

// Norm-convergence study for the renormalized triangular ensemble: for each
// trial the block matrices are coupled to the same T-bar sample (identical
// stream draws, blocks zeroed), and the HS-normalized norm ||T_N|| is the
// exact rescaling sqrt(2N/(N-1)) ||T-bar_N|| of the same sample.
struct NormStudyRow {
  std::size_t n = 0;
  int k = 0;
  std::size_t trials = 0;
  double mean_block_norm = 0.0;
  double mean_bar_norm = 0.0;
  double mean_absdiff = 0.0;
  double bound = 0.0;  // 3 / sqrt(k)
};

struct NormStudySizeRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_bar_norm = 0.0;  // limit sqrt(e)
  double mean_tri_norm = 0.0;  // limit sqrt(2e)
};

struct NormStudy {
  std::vector<NormStudyRow> rows;       // one per (n, k)
  std::vector<NormStudySizeRow> sizes;  // one per n
};

NormStudy norm_convergence_study(const std::vector<std::size_t>& n_list,
                                 const std::vector<int>& k_list, std::size_t trials,
                                 std::uint64_t master_seed, unsigned threads = 0);

// Moment table for T-bar: empirical mean of N^{-1} Tr((T T*)^ell) vs the
// limit ell^ell/(ell+1)!.
struct MomentRow {
  unsigned ell = 0;
  double empirical = 0.0;
  double limit = 0.0;
};

struct MomentStudy {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::vector<MomentRow> rows;
};

MomentStudy moment_study(std::size_t n, std::size_t trials, unsigned lmax,
                         std::uint64_t master_seed, unsigned threads = 0);

// p_N + 7 R eps^-2 q_N(eps^2): the quantitative disk-deviation bound.
// Requires A >= max(R, 1) and 0 < eps <= min(1/2, sqrt(R/(A+1))).
double mega_bound(double r, double a, double eps, double p_n, double q_n_at_eps_sq);

// Named pass/fail verdicts evaluated against the calibrated thresholds; used
// by the CLI --check mode.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> sweep_checks(const EnsembleSpec& proto, const SweepResult& s,
                                      std::optional<double> target_radius);
std::vector<CheckResult> tail_checks(const TailEstimate& t);
std::vector<CheckResult> norm_checks(const NormStudy& s);
std::vector<CheckResult> moment_checks(const MomentStudy& s);

}  // namespace specrange

#endif
