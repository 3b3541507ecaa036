#include "numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eigen_hermitian.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace specrange {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_grid(std::size_t m) {
  if (m < 8 || m % 2 != 0)
    throw InvalidArgument("grid size must be even and >= 8");
}

// (X y, y) for a unit vector y.
cx quadratic_form(const ComplexMatrix& x, const std::vector<cx>& y) {
  const std::size_t n = x.dim();
  cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cx row(0.0, 0.0);
    const cx* xi = x.row(i);
    for (std::size_t j = 0; j < n; ++j) row += xi[j] * y[j];
    acc += std::conj(y[i]) * row;
  }
  return acc;
}

double profile_scale(const SupportProfile& p) {
  double s = 0.0;
  for (double v : p.norms) s = std::max(s, std::abs(v));
  return std::max(s, 1e-300);
}

}  // namespace

SupportProfile support_profile(const ComplexMatrix& x, std::size_t m, unsigned threads) {
  check_grid(m);
  SupportProfile p;
  p.grid_size = m;
  p.thetas.resize(m);
  p.lambdas.resize(m);
  p.norms.resize(m);
  p.boundary.resize(m);
  for (std::size_t j = 0; j < m; ++j) p.thetas[j] = kTwoPi * double(j) / double(m);

  const std::size_t half = m / 2;
  parallel_for(half, threads, [&](std::size_t j) {
    const cx phase(std::cos(p.thetas[j]), std::sin(p.thetas[j]));
    const ComplexMatrix h = hermitian_part_phase(x, phase);
    const HermitianExtreme ex = hermitian_extreme(h);
    // The Hermitian part at theta_j + pi is exactly -h, so its top eigenpair
    // is (-lambda_min, vec_min) of h.
    p.lambdas[j] = ex.lambda_max;
    p.lambdas[j + half] = -ex.lambda_min;
    const double nrm = std::max(std::abs(ex.lambda_max), std::abs(ex.lambda_min));
    p.norms[j] = nrm;
    p.norms[j + half] = nrm;
    p.boundary[j] = quadratic_form(x, ex.vec_max);
    p.boundary[j + half] = quadratic_form(x, ex.vec_min);
  });
  return p;
}

std::vector<double> norm_profile(const ComplexMatrix& x, std::size_t m, unsigned threads) {
  check_grid(m);
  std::vector<double> norms(m);
  const std::size_t half = m / 2;
  parallel_for(half, threads, [&](std::size_t j) {
    const double theta = kTwoPi * double(j) / double(m);
    const ComplexMatrix h = hermitian_part_phase(x, cx(std::cos(theta), std::sin(theta)));
    const std::vector<double> ev = hermitian_eigenvalues(h);
    const double nrm = std::max(std::abs(ev.front()), std::abs(ev.back()));
    norms[j] = nrm;
    norms[j + half] = nrm;
  });
  return norms;
}

RangePolygons inner_outer_range(const SupportProfile& profile) {
  const std::size_t m = profile.grid_size;
  check_grid(m);
  RangePolygons out;

  const double scale = profile_scale(profile);
  bool all_same = true;
  for (const cx& b : profile.boundary)
    if (std::abs(b - profile.boundary.front()) > 1e-12 * scale) {
      all_same = false;
      break;
    }

  out.inner = convex_hull(profile.boundary);
  out.degenerate = all_same || out.inner.vertices.size() < 3;

  // Outer polygon: consecutive halfplane boundaries intersect; the halfplane
  // at theta_j is { z : Re(e^{i theta_j} z) <= lambda_j } with boundary line
  // cos(theta_j) x - sin(theta_j) y = lambda_j.
  std::vector<cx> corners(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t j2 = (j + 1) % m;
    const double c1 = std::cos(profile.thetas[j]), s1 = -std::sin(profile.thetas[j]);
    const double c2 = std::cos(profile.thetas[j2]), s2 = -std::sin(profile.thetas[j2]);
    const double det = c1 * s2 - s1 * c2;
    const double l1 = profile.lambdas[j], l2 = profile.lambdas[j2];
    corners[j] = cx((l1 * s2 - s1 * l2) / det, (c1 * l2 - l1 * c2) / det);
  }
  out.outer = convex_hull(std::move(corners));
  out.gap = polygon_hausdorff(out.inner, out.outer);
  return out;
}

DiskDistance hausdorff_to_disk(const SupportProfile& profile, double radius) {
  if (radius < 0.0) throw InvalidArgument("disk radius must be >= 0");
  DiskDistance d;
  for (double l : profile.lambdas) d.raw = std::max(d.raw, std::abs(l - radius));
  d.certified = d.raw + inner_outer_range(profile).gap;
  return d;
}

double hausdorff_convex(const SupportProfile& p, const SupportProfile& q) {
  if (p.grid_size != q.grid_size)
    throw GridMismatch("support profiles use different grids");
  double d = 0.0;
  for (std::size_t j = 0; j < p.grid_size; ++j)
    d = std::max(d, std::abs(p.lambdas[j] - q.lambdas[j]));
  return d;
}

double numerical_radius(const SupportProfile& profile) {
  double r = -std::numeric_limits<double>::infinity();
  for (double l : profile.lambdas) r = std::max(r, l);
  return r;
}

double area_ratio(const SupportProfile& profile, const Spectrum& spectrum) {
  const ConvexPolygon gamma = convex_hull(spectrum.eigenvalues);
  double scale = 1e-300;
  for (const cx& z : spectrum.eigenvalues) scale = std::max(scale, std::abs(z));
  const double gamma_area = polygon_area(gamma);
  if (gamma.vertices.size() < 3 || gamma_area <= 1e-12 * scale * scale)
    throw DegenerateRange("spectral hull has zero area");
  const RangePolygons rp = inner_outer_range(profile);
  return polygon_area(rp.inner) / gamma_area;
}

double area_ratio(const ComplexMatrix& x, std::size_t m, unsigned threads) {
  return area_ratio(support_profile(x, m, threads), eigenvalues_general(x));
}

StarBody star_from_norms(const SupportProfile& profile) {
  return StarBody{profile.grid_size, profile.norms};
}

bool star_membership(cx z, const StarBody& k, double slack) {
  if (k.grid_size < 1 || k.radial.size() != k.grid_size)
    throw InvalidArgument("star body has an empty or inconsistent grid");
  const double rho = std::abs(z);
  if (rho == 0.0) return true;
  // z = rho e^{-i theta}  =>  theta = -arg(z) mod 2pi
  double theta = -std::atan2(z.imag(), z.real());
  if (theta < 0.0) theta += kTwoPi;
  const double pos = theta / (kTwoPi / double(k.grid_size));
  const std::size_t j0 = std::min(std::size_t(pos), k.grid_size - 1);
  const double frac = pos - double(j0);
  const double r = (1.0 - frac) * k.radial[j0] + frac * k.radial[(j0 + 1) % k.grid_size];
  return rho <= r + slack;
}

bool profile_in_star(const SupportProfile& profile, const StarBody& k, double slack) {
  for (const cx& b : profile.boundary)
    if (!star_membership(b, k, slack)) return false;
  return true;
}

SupportProfile polygon_support_profile(const ConvexPolygon& poly, std::size_t m) {
  check_grid(m);
  SupportProfile p;
  p.grid_size = m;
  p.thetas.resize(m);
  p.lambdas.resize(m);
  p.norms.resize(m);
  p.boundary.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    p.thetas[j] = kTwoPi * double(j) / double(m);
    cx arg;
    p.lambdas[j] = polygon_support(poly, p.thetas[j], &arg);
    p.boundary[j] = arg;
  }
  const std::size_t half = m / 2;
  for (std::size_t j = 0; j < half; ++j) {
    const double nrm = std::max(std::abs(p.lambdas[j]), std::abs(p.lambdas[j + half]));
    p.norms[j] = nrm;
    p.norms[j + half] = nrm;
  }
  return p;
}

}  // namespace specrange
