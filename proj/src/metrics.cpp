#include "metrics.hpp"

#include <cmath>

#include "errors.hpp"
#include "linalg.hpp"

namespace specrange {

namespace {

double sum_abs2(const Spectrum& s) {
  double t = 0.0;
  for (const cx& z : s.eigenvalues) t += std::norm(z);
  return t;
}

double mu3_from(double hs2, const Spectrum& s) {
  return std::sqrt(std::max(0.0, hs2 - sum_abs2(s)));
}

cx trace_of_square(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  cx t(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t += x(i, j) * x(j, i);
  return t;
}

}  // namespace

double mu3(const ComplexMatrix& x) {
  const double hs = hs_norm(x);
  return mu3_from(hs * hs, eigenvalues_general(x));
}

double alpha_scaling(const ComplexMatrix& x) {
  const double hs = hs_norm(x);
  return std::sqrt(0.5 * (hs * hs + std::abs(trace_of_square(x))));
}

double normalized_moment(const ComplexMatrix& x, unsigned ell) {
  if (ell < 1) throw InvalidArgument("moment order must be >= 1");
  const ComplexMatrix m = gram(x);
  if (ell == 1) return trace(m).real() / double(x.dim());
  ComplexMatrix p = m;
  for (unsigned i = 2; i <= ell; ++i) p = matmul(p, m);
  return trace(p).real() / double(x.dim());
}

double triangular_moment_limit(unsigned ell) {
  if (ell < 1) throw InvalidArgument("moment order must be >= 1");
  double factorial = 1.0;
  for (unsigned i = 2; i <= ell + 1; ++i) factorial *= double(i);
  return std::pow(double(ell), double(ell)) / factorial;
}

TrialEvaluation evaluate_matrix(const ComplexMatrix& x, std::size_t m,
                                std::optional<double> target_radius,
                                unsigned threads) {
  TrialEvaluation out;
  MetricsReport& r = out.metrics;
  const std::size_t n = x.dim();
  r.n = n;
  r.hs_norm = hs_norm(x);
  r.operator_norm = operator_norm(x);
  r.alpha = std::sqrt(0.5 * (r.hs_norm * r.hs_norm + std::abs(trace_of_square(x))));
  r.nonzero_trace =
      std::abs(trace(x)) > 1e-8 * double(n) * std::max(r.operator_norm, 1e-300);

  const Spectrum spec = eigenvalues_general(x);
  r.spectral_radius = spectral_radius(spec);
  r.mu3 = mu3_from(r.hs_norm * r.hs_norm, spec);
  r.mu3_squared_over_n = r.mu3 * r.mu3 / double(n);

  const SupportProfile profile = support_profile(x, m, threads);
  r.numerical_radius = numerical_radius(profile);
  if (target_radius) {
    r.target_radius = *target_radius;
    const DiskDistance d = hausdorff_to_disk(profile, *target_radius);
    r.hausdorff_to_target = d.raw;
    r.hausdorff_certified = d.certified;
  }
  try {
    out.area_ratio = area_ratio(profile, spec);
  } catch (const DegenerateRange&) {
    out.area_ratio.reset();
  }
  return out;
}

MetricsReport metrics_report(const ComplexMatrix& x, std::size_t m,
                             std::optional<double> target_radius, unsigned threads) {
  return evaluate_matrix(x, m, target_radius, threads).metrics;
}

}  // namespace specrange
