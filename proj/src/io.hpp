#ifndef SPECRANGE_IO_HPP
#define SPECRANGE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "complex_matrix.hpp"
#include "experiments.hpp"
#include "metrics.hpp"
#include "numrange.hpp"

namespace specrange {

// All floating-point output uses 17 significant digits so files round-trip.
std::string fmt17(double v);

// --- matrix serialization ---------------------------------------------------
// CSV: schema comment, "i,j,re,im" header, one row per entry (row-major).
// Binary: magic "SPRMAT01", u64 dimension, then n*n little-endian float64
// (re, im) pairs in row-major order.
void write_matrix_csv(const ComplexMatrix& x, const std::string& path);
ComplexMatrix read_matrix_csv(const std::string& path);
void write_matrix_binary(const ComplexMatrix& x, const std::string& path);
ComplexMatrix read_matrix_binary(const std::string& path);

// --- profile / spectrum -----------------------------------------------------
// "theta,lambda,norm,boundary_re,boundary_im", one row per grid node.
void write_profile_csv(const SupportProfile& p, const std::string& path);
void write_spectrum_csv(const std::vector<cx>& eigenvalues, const std::string& path);

// --- metrics ----------------------------------------------------------------
std::string metrics_json(const MetricsReport& r, std::optional<double> area_ratio);
void write_metrics_json(const MetricsReport& r, std::optional<double> area_ratio,
                        const std::string& path);
void write_metrics_csv(const MetricsReport& r, std::optional<double> area_ratio,
                       const std::string& path);

// --- experiment files -------------------------------------------------------
struct ManifestInfo {
  std::string command;
  std::optional<std::string> ensemble;
  std::vector<std::size_t> n_list;
  std::size_t trials = 0;
  std::size_t m = 0;
  std::uint64_t master_seed = 0;
  std::optional<double> target_radius;
};
// Written before any trial runs.
void write_manifest(const ManifestInfo& info, const std::string& path);

void write_records_csv(const std::vector<ExperimentRecord>& records,
                       const std::string& path);
void write_sweep_summary_json(const EnsembleSpec& proto, const SweepResult& s,
                              const std::vector<CheckResult>& checks,
                              const std::string& path);
void write_tail_csv(const TailEstimate& t, const std::string& path);
void write_tail_summary_json(const EnsembleSpec& spec, const TailEstimate& t,
                             const std::vector<CheckResult>& checks,
                             const std::string& path);
void write_norms_csv(const NormStudy& s, const std::string& path);
void write_norms_summary_json(const NormStudy& s,
                              const std::vector<CheckResult>& checks,
                              const std::string& path);
void write_moments_csv(const MomentStudy& s, const std::string& path);
void write_moments_summary_json(const MomentStudy& s,
                                const std::vector<CheckResult>& checks,
                                const std::string& path);

}  // namespace specrange

#endif
