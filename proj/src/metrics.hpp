#ifndef SPECRANGE_METRICS_HPP
#define SPECRANGE_METRICS_HPP

#include <optional>

#include "complex_matrix.hpp"
#include "eigen_general.hpp"
#include "numrange.hpp"

namespace specrange {

// Per-matrix scalar diagnostics.  hausdorff fields are present only when a
// target disk radius was supplied; area_ratio only when the spectral hull is
// non-degenerate.
struct MetricsReport {
  std::size_t n = 0;
  double operator_norm = 0.0;
  double numerical_radius = 0.0;
  double spectral_radius = 0.0;
  double mu3 = 0.0;
  double mu3_squared_over_n = 0.0;
  double alpha = 0.0;
  double hs_norm = 0.0;
  std::optional<double> target_radius;
  std::optional<double> hausdorff_to_target;   // raw support-function distance
  std::optional<double> hausdorff_certified;   // raw + discretization gap
  bool nonzero_trace = false;  // |Tr X| > 1e-8 n ||X|| (alpha assumes traceless)
};

// Non-normality measure sqrt(max(0, ||X||_HS^2 - sum |lambda_i|^2)).
double mu3(const ComplexMatrix& x);

// sqrt((Tr XX* + |Tr X^2|) / 2); reported for any input, traceless or not.
double alpha_scaling(const ComplexMatrix& x);

// N^{-1} Tr((X X*)^ell) by repeated full matrix products.
double normalized_moment(const ComplexMatrix& x, unsigned ell);

// ell^ell / (ell+1)!, the limiting normalized moment of the renormalized
// strictly triangular ensemble.
double triangular_moment_limit(unsigned ell);

MetricsReport metrics_report(const ComplexMatrix& x, std::size_t m,
                             std::optional<double> target_radius,
                             unsigned threads = 0);

// Full per-trial evaluation sharing one support profile and one spectrum:
// the metrics report plus the W/Gamma area ratio when defined.
struct TrialEvaluation {
  MetricsReport metrics;
  std::optional<double> area_ratio;
};
TrialEvaluation evaluate_matrix(const ComplexMatrix& x, std::size_t m,
                                std::optional<double> target_radius,
                                unsigned threads = 0);

}  // namespace specrange

#endif
