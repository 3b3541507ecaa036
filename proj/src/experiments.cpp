#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "calibration.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace specrange {

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

CheckResult band_check(const std::string& name, double value, double lo, double hi) {
  const bool pass = value >= lo && value <= hi;
  return {name, pass,
          fmt(value) + (pass ? " in [" : " outside [") + fmt(lo) + ", " + fmt(hi) + "]"};
}

}  // namespace

Aggregate aggregate(std::vector<double> values) {
  Aggregate a;
  a.count = values.size();
  if (values.empty()) return a;
  std::sort(values.begin(), values.end());
  a.min = values.front();
  a.max = values.back();
  double sum = 0.0;
  for (double v : values) sum += v;
  a.mean = sum / double(values.size());
  const std::size_t h = values.size() / 2;
  a.median = values.size() % 2 ? values[h] : 0.5 * (values[h - 1] + values[h]);
  return a;
}

SweepResult run_sweep(const EnsembleSpec& proto, const std::vector<std::size_t>& n_list,
                      std::size_t trials, std::size_t m,
                      std::optional<double> target_radius, std::uint64_t master_seed,
                      unsigned threads) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (n_list.empty()) throw InvalidArgument("n_list must not be empty");
  if (!std::is_sorted(n_list.begin(), n_list.end()))
    throw InvalidArgument("n_list must be ascending");

  SweepResult out;
  out.records.resize(n_list.size() * trials);
  parallel_for(out.records.size(), threads, [&](std::size_t slot) {
    const std::size_t n = n_list[slot / trials];
    const std::uint64_t trial = slot % trials;
    ExperimentRecord& rec = out.records[slot];
    rec.spec = proto.with_dimension(n);
    rec.n = n;
    rec.trial_index = trial;
    rec.master_seed = master_seed;
    rec.stream_index = derive_stream_index(n, trial);
    const double t0 = now_seconds();
    try {
      RngStream stream(master_seed, rec.stream_index);
      const ComplexMatrix x = sample(rec.spec, stream);
      TrialEvaluation ev = evaluate_matrix(x, m, target_radius, 1);
      rec.metrics = ev.metrics;
      rec.area_ratio = ev.area_ratio;
      rec.ok = true;
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.error = e.what();
    }
    rec.wall_time_s = now_seconds() - t0;
  });

  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    SweepRow row;
    row.n = n_list[ni];
    std::vector<double> norms, radii, rhos, mu3s, hausd, areas;
    for (std::size_t t = 0; t < trials; ++t) {
      const ExperimentRecord& rec = out.records[ni * trials + t];
      if (!rec.ok) {
        ++row.failed;
        continue;
      }
      ++row.ok;
      norms.push_back(rec.metrics.operator_norm);
      radii.push_back(rec.metrics.numerical_radius);
      rhos.push_back(rec.metrics.spectral_radius);
      mu3s.push_back(rec.metrics.mu3_squared_over_n);
      if (rec.metrics.hausdorff_to_target) hausd.push_back(*rec.metrics.hausdorff_to_target);
      if (rec.area_ratio) areas.push_back(*rec.area_ratio);
    }
    row.operator_norm = aggregate(std::move(norms));
    row.numerical_radius = aggregate(std::move(radii));
    row.spectral_radius = aggregate(std::move(rhos));
    row.mu3_sq_over_n = aggregate(std::move(mu3s));
    row.hausdorff = aggregate(std::move(hausd));
    row.area_ratio = aggregate(std::move(areas));
    out.rows.push_back(row);
  }
  return out;
}

TailEstimate tail_estimate(const EnsembleSpec& spec, std::size_t trials,
                           TailStatistic statistic, double target_radius,
                           std::vector<double> epsilons, std::uint64_t master_seed,
                           std::size_t m,
                           std::optional<std::pair<double, double>> bound_consts,
                           unsigned threads) {
  if (trials < 100)
    throw InvalidArgument("tail estimation needs at least 100 trials");
  if (epsilons.empty()) throw InvalidArgument("epsilon grid must not be empty");
  std::sort(epsilons.begin(), epsilons.end());

  std::vector<double> stats(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    RngStream stream(master_seed, derive_stream_index(spec.n, t));
    const ComplexMatrix x = sample(spec, stream);
    if (statistic == TailStatistic::HausdorffToDisk) {
      const SupportProfile p = support_profile(x, m, 1);
      stats[t] = hausdorff_to_disk(p, target_radius).raw;
    } else {
      const std::vector<double> ev = hermitian_eigenvalues(hermitian_part(x, 0.0));
      const double nrm = std::max(std::abs(ev.front()), std::abs(ev.back()));
      stats[t] = std::abs(nrm - target_radius);
    }
  });

  TailEstimate out;
  out.epsilons = epsilons;
  out.trials = trials;
  const double z = 1.959963984540054;  // 95% normal quantile
  for (double eps : epsilons) {
    std::size_t count = 0;
    for (double s : stats)
      if (s >= eps) ++count;
    out.exceed.push_back(count);
    const double p = double(count) / double(trials);
    out.p_hat.push_back(p);
    const double nn = double(trials);
    const double denom = 1.0 + z * z / nn;
    const double center = (p + z * z / (2.0 * nn)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / nn + z * z / (4.0 * nn * nn)) / denom;
    out.wilson_lo.push_back(std::max(0.0, center - half));
    out.wilson_hi.push_back(std::min(1.0, center + half));
    if (bound_consts) {
      const auto [cc, c] = *bound_consts;
      out.bound_form.push_back(cc / (eps * eps) *
                               std::exp(-c * double(spec.n) * eps * eps * eps));
    }
  }
  return out;
}

NormStudy norm_convergence_study(const std::vector<std::size_t>& n_list,
                                 const std::vector<int>& k_list, std::size_t trials,
                                 std::uint64_t master_seed, unsigned threads) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (n_list.empty()) throw InvalidArgument("n_list must not be empty");
  const std::size_t n_min = *std::min_element(n_list.begin(), n_list.end());
  for (int k : k_list) {
    if (k < 1 || std::size_t(k) > n_min)
      throw InvalidSpec("block count " + std::to_string(k) +
                        " exceeds the smallest matrix size");
  }

  struct TrialNorms {
    double bar = 0.0;
    std::vector<double> blocks;
    bool ok = false;
    std::string error;
  };
  std::vector<TrialNorms> all(n_list.size() * trials);

  parallel_for(all.size(), threads, [&](std::size_t slot) {
    const std::size_t n = n_list[slot / trials];
    const std::uint64_t trial = slot % trials;
    TrialNorms& tn = all[slot];
    try {
      RngStream stream(master_seed, derive_stream_index(n, trial));
      EnsembleSpec bar;
      bar.kind = EnsembleKind::TriangularBar;
      bar.n = n;
      const ComplexMatrix t = sample(bar, stream);
      tn.bar = operator_norm(t);
      tn.blocks.reserve(k_list.size());
      for (int k : k_list) {
        ComplexMatrix tk = t;
        zero_block_pattern(tk, k);
        tn.blocks.push_back(operator_norm(tk));
      }
      tn.ok = true;
    } catch (const std::exception& e) {
      tn.error = e.what();
    }
  });

  NormStudy out;
  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    const std::size_t n = n_list[ni];
    std::vector<double> bars;
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialNorms& tn = all[ni * trials + t];
      if (tn.ok) bars.push_back(tn.bar);
    }
    NormStudySizeRow srow;
    srow.n = n;
    srow.trials = bars.size();
    srow.mean_bar_norm = aggregate(bars).mean;
    // ||T_N|| = sqrt(2N/(N-1)) ||T-bar_N|| entrywise-exactly for the coupled sample
    srow.mean_tri_norm =
        srow.mean_bar_norm * std::sqrt(2.0 * double(n) / double(n - 1));
    out.sizes.push_back(srow);

    for (std::size_t ki = 0; ki < k_list.size(); ++ki) {
      NormStudyRow row;
      row.n = n;
      row.k = k_list[ki];
      std::vector<double> blocks, diffs;
      for (std::size_t t = 0; t < trials; ++t) {
        const TrialNorms& tn = all[ni * trials + t];
        if (!tn.ok) continue;
        blocks.push_back(tn.blocks[ki]);
        diffs.push_back(std::abs(tn.blocks[ki] - tn.bar));
      }
      row.trials = blocks.size();
      row.mean_block_norm = aggregate(blocks).mean;
      row.mean_bar_norm = srow.mean_bar_norm;
      row.mean_absdiff = aggregate(diffs).mean;
      row.bound = 3.0 / std::sqrt(double(row.k));
      out.rows.push_back(row);
    }
  }
  return out;
}

MomentStudy moment_study(std::size_t n, std::size_t trials, unsigned lmax,
                         std::uint64_t master_seed, unsigned threads) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (lmax < 1) throw InvalidArgument("lmax must be >= 1");

  std::vector<std::vector<double>> per_trial(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    RngStream stream(master_seed, derive_stream_index(n, t));
    EnsembleSpec bar;
    bar.kind = EnsembleKind::TriangularBar;
    bar.n = n;
    const ComplexMatrix x = sample(bar, stream);
    const ComplexMatrix m = gram(x);
    std::vector<double>& vals = per_trial[t];
    vals.resize(lmax);
    ComplexMatrix p = m;
    vals[0] = trace(p).real() / double(n);
    for (unsigned ell = 2; ell <= lmax; ++ell) {
      p = matmul(p, m);
      vals[ell - 1] = trace(p).real() / double(n);
    }
  });

  MomentStudy out;
  out.n = n;
  out.trials = trials;
  for (unsigned ell = 1; ell <= lmax; ++ell) {
    double sum = 0.0;
    for (const auto& vals : per_trial) sum += vals[ell - 1];
    out.rows.push_back({ell, sum / double(trials), triangular_moment_limit(ell)});
  }
  return out;
}

double mega_bound(double r, double a, double eps, double p_n, double q_n_at_eps_sq) {
  if (!(r > 0.0)) throw DomainError("R must be positive");
  if (!(a >= std::max(r, 1.0))) throw DomainError("A must be >= max(R, 1)");
  const double eps_cap = std::min(0.5, std::sqrt(r / (a + 1.0)));
  if (!(eps > 0.0 && eps <= eps_cap))
    throw DomainError("eps must lie in (0, min(1/2, sqrt(R/(A+1)))]");
  return p_n + 7.0 * r / (eps * eps) * q_n_at_eps_sq;
}

std::vector<CheckResult> sweep_checks(const EnsembleSpec& proto, const SweepResult& s,
                                      std::optional<double> target_radius) {
  namespace cal = calibration;
  std::vector<CheckResult> out;

  if (target_radius && s.rows.size() >= 2) {
    // medians of d_H must decrease along n, allowing one small inversion
    std::size_t inversions = 0;
    double worst = 0.0;
    bool have = true;
    for (const SweepRow& row : s.rows) have = have && row.hausdorff.count > 0;
    if (have) {
      for (std::size_t i = 1; i < s.rows.size(); ++i) {
        const double prev = s.rows[i - 1].hausdorff.median;
        const double cur = s.rows[i].hausdorff.median;
        if (cur >= prev) {
          ++inversions;
          worst = std::max(worst, prev > 0 ? (cur - prev) / prev : 1.0);
        }
      }
      const bool pass =
          inversions == 0 || (inversions == 1 && worst <= cal::kTrendInversionTol);
      out.push_back({"hausdorff-medians-decreasing", pass,
                     std::to_string(inversions) + " inversion(s), worst +" +
                         fmt(100.0 * worst) + "%"});
      out.push_back(band_check("hausdorff-final-median",
                               s.rows.back().hausdorff.median, 0.0,
                               cal::kDiskDistanceTol1024));
    }
  }

  const bool ginibre = proto.kind == EnsembleKind::GinibreComplex;
  for (const SweepRow& row : s.rows) {
    if (row.n != 1024 || row.ok == 0) continue;
    if (ginibre) {
      out.push_back(band_check("ginibre-norm-mean", row.operator_norm.mean,
                               cal::kGinibreNormLo, cal::kGinibreNormHi));
      out.push_back(band_check("ginibre-radius-mean", row.numerical_radius.mean,
                               std::sqrt(2.0) - cal::kRadiusTol1024,
                               std::sqrt(2.0) + cal::kRadiusTol1024));
      out.push_back(band_check("ginibre-rho-mean", row.spectral_radius.mean,
                               cal::kGinibreRhoLo, cal::kGinibreRhoHi));
      out.push_back(band_check("ginibre-mu3sq-mean", row.mu3_sq_over_n.mean,
                               cal::kGinibreMu3SqLo, cal::kGinibreMu3SqHi));
      if (row.area_ratio.count > 0)
        out.push_back(band_check("ginibre-area-ratio-mean", row.area_ratio.mean,
                                 cal::kAreaRatioLo, cal::kAreaRatioHi));
    }
  }
  return out;
}

std::vector<CheckResult> tail_checks(const TailEstimate& t) {
  std::vector<CheckResult> out;
  bool monotone = true;
  for (std::size_t i = 1; i < t.epsilons.size(); ++i) {
    const double allowance = (t.wilson_hi[i - 1] - t.wilson_lo[i - 1]) +
                             (t.wilson_hi[i] - t.wilson_lo[i]);
    if (t.p_hat[i] > t.p_hat[i - 1] + allowance) monotone = false;
  }
  out.push_back({"tail-monotone", monotone,
                 monotone ? "exceedance nonincreasing in eps"
                          : "exceedance increased beyond Wilson allowance"});
  return out;
}

std::vector<CheckResult> norm_checks(const NormStudy& s) {
  namespace cal = calibration;
  std::vector<CheckResult> out;
  for (const NormStudySizeRow& row : s.sizes) {
    if (row.n >= 2048) {
      out.push_back(band_check("bar-norm-mean-n" + std::to_string(row.n),
                               row.mean_bar_norm, cal::kBarNormLo, cal::kBarNormHi));
      out.push_back(band_check("tri-norm-mean-n" + std::to_string(row.n),
                               row.mean_tri_norm, cal::kTriNormLo, cal::kTriNormHi));
    }
  }
  for (const NormStudyRow& row : s.rows) {
    out.push_back(band_check("block-diff-n" + std::to_string(row.n) + "-k" +
                                 std::to_string(row.k),
                             row.mean_absdiff, 0.0, row.bound));
  }
  return out;
}

std::vector<CheckResult> moment_checks(const MomentStudy& s) {
  namespace cal = calibration;
  std::vector<CheckResult> out;
  for (const MomentRow& row : s.rows) {
    const double tol = row.ell <= 3 ? cal::kMomentTolLow : cal::kMomentTolHigh;
    out.push_back(band_check("moment-l" + std::to_string(row.ell), row.empirical,
                             row.limit * (1.0 - tol), row.limit * (1.0 + tol)));
  }
  return out;
}

}  // namespace specrange
