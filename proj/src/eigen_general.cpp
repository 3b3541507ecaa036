#include "eigen_general.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace specrange {

namespace {

constexpr double kSubdiagTol = 1e-12;

inline double abs1(const cx& z) { return std::abs(z.real()) + std::abs(z.imag()); }

struct Givens {
  double c;
  cx s;
  cx r;
};

Givens make_givens(const cx& f, const cx& g) {
  if (g == cx(0.0, 0.0)) return {1.0, cx(0.0, 0.0), f};
  if (f == cx(0.0, 0.0)) {
    const double ag = std::abs(g);
    return {0.0, std::conj(g) / ag, cx(ag, 0.0)};
  }
  const double af = std::abs(f);
  const double d = std::sqrt(std::norm(f) + std::norm(g));
  const cx fs = f / af;
  return {af / d, fs * std::conj(g) / d, fs * d};
}

// Householder reduction to upper Hessenberg form (in place, no accumulation).
void hessenberg_reduce(ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<cx> v(n), buf(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t s = n - 1 - k;
    cx alpha = a(k + 1, k);
    for (std::size_t i = 1; i < s; ++i) v[i] = a(k + 1 + i, k);
    // reflector with real beta: H^H (alpha; tail) = (beta; 0)
    double xnorm2 = 0.0;
    for (std::size_t i = 1; i < s; ++i) xnorm2 += std::norm(v[i]);
    cx tau(0.0, 0.0);
    double beta = alpha.real();
    if (!(xnorm2 == 0.0 && alpha.imag() == 0.0)) {
      beta = -std::copysign(std::sqrt(std::norm(alpha) + xnorm2), alpha.real());
      tau = cx((beta - alpha.real()) / beta, -alpha.imag() / beta);
      const cx scal = 1.0 / (alpha - beta);
      for (std::size_t i = 1; i < s; ++i) v[i] *= scal;
    }
    v[0] = cx(1.0, 0.0);

    if (tau != cx(0.0, 0.0)) {
      const cx tauc = std::conj(tau);
      // left: rows k+1..n-1, columns k+1..n-1 (column k handled by beta)
      const std::size_t w = n - (k + 1);
      std::fill(buf.begin(), buf.begin() + w, cx(0.0, 0.0));
      for (std::size_t i = 0; i < s; ++i) {
        const cx vc = std::conj(v[i]);
        const cx* row = &a(k + 1 + i, k + 1);
        for (std::size_t j = 0; j < w; ++j) buf[j] += vc * row[j];
      }
      for (std::size_t i = 0; i < s; ++i) {
        const cx f = tauc * v[i];
        cx* row = &a(k + 1 + i, k + 1);
        for (std::size_t j = 0; j < w; ++j) row[j] -= f * buf[j];
      }
      // right: all rows, columns k+1..n-1
      for (std::size_t r = 0; r < n; ++r) {
        cx* row = &a(r, k + 1);
        cx dot(0.0, 0.0);
        for (std::size_t j = 0; j < s; ++j) dot += row[j] * v[j];
        const cx f = tau * dot;
        for (std::size_t j = 0; j < s; ++j) row[j] -= f * std::conj(v[j]);
      }
    }
    a(k + 1, k) = cx(beta, 0.0);
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = cx(0.0, 0.0);
  }
}

// Eigenvalues of [[p, q], [r, t]].
void eig2x2(const cx& p, const cx& q, const cx& r, const cx& t, cx& l1, cx& l2) {
  const cx m = 0.5 * (p + t);
  const cx disc = std::sqrt(0.25 * (p - t) * (p - t) + q * r);
  const cx a = m + disc, b = m - disc;
  if (std::norm(a) >= std::norm(b)) {
    l1 = a;
    l2 = (a == cx(0.0, 0.0)) ? b : (p * t - q * r) / a;
  } else {
    l1 = b;
    l2 = (b == cx(0.0, 0.0)) ? a : (p * t - q * r) / b;
  }
}

}  // namespace

Spectrum eigenvalues_general(const ComplexMatrix& x) {
  if (!x.all_finite())
    throw InvalidArgument("eigenvalues_general: entries must be finite");
  const std::size_t n = x.dim();
  ComplexMatrix a = x;
  hessenberg_reduce(a);

  std::vector<cx> eig(n);
  std::vector<double> cs(n);
  std::vector<cx> sn(n);
  std::ptrdiff_t hi = std::ptrdiff_t(n) - 1;
  std::size_t total = 0;
  std::size_t block_iters = 0;
  const std::size_t max_total = 40 * n;

  while (hi >= 0) {
    // deflation scan for the active block
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double tol = kSubdiagTol * (abs1(a(lo - 1, lo - 1)) + abs1(a(lo, lo)));
      if (abs1(a(lo, lo - 1)) <= tol) {
        a(lo, lo - 1) = cx(0.0, 0.0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = a(hi, hi);
      --hi;
      block_iters = 0;
      continue;
    }
    if (lo == hi - 1) {
      eig2x2(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1), a(hi, hi),
             eig[hi - 1], eig[hi]);
      hi -= 2;
      block_iters = 0;
      continue;
    }
    if (++total > max_total)
      throw NonConvergence("eigenvalues_general: QR sweep budget exhausted", total);
    ++block_iters;

    cx sigma;
    if (block_iters % 12 == 0) {
      // exceptional shift to break cycling
      sigma = a(hi, hi) + cx(std::abs(a(hi, hi - 1)) + std::abs(a(hi - 1, hi - 2)), 0.0);
    } else {
      cx l1, l2;
      eig2x2(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1), a(hi, hi), l1, l2);
      sigma = (std::norm(l1 - a(hi, hi)) <= std::norm(l2 - a(hi, hi))) ? l1 : l2;
    }

    for (std::ptrdiff_t i = lo; i <= hi; ++i) a(i, i) -= sigma;
    // forward pass: QR factor via Givens rotations on row pairs
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      const Givens g = make_givens(a(i, i), a(i + 1, i));
      cs[i] = g.c;
      sn[i] = g.s;
      a(i, i) = g.r;
      a(i + 1, i) = cx(0.0, 0.0);
      cx* ri = a.row(i);
      cx* rj = a.row(i + 1);
      for (std::ptrdiff_t j = i + 1; j <= hi; ++j) {
        const cx u = ri[j], v = rj[j];
        ri[j] = g.c * u + g.s * v;
        rj[j] = -std::conj(g.s) * u + g.c * v;
      }
    }
    // backward pass: multiply by the adjoint rotations from the right
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      const double c = cs[i];
      const cx s = sn[i];
      for (std::ptrdiff_t r = lo; r <= i + 1; ++r) {
        cx* row = a.row(r);
        const cx u = row[i], v = row[i + 1];
        row[i] = c * u + std::conj(s) * v;
        row[i + 1] = -s * u + c * v;
      }
    }
    for (std::ptrdiff_t i = lo; i <= hi; ++i) a(i, i) += sigma;
  }

  std::sort(eig.begin(), eig.end(), [](const cx& a_, const cx& b_) {
    if (a_.real() != b_.real()) return a_.real() < b_.real();
    return a_.imag() < b_.imag();
  });
  return Spectrum{std::move(eig)};
}

double spectral_radius(const Spectrum& s) {
  double r = 0.0;
  for (const cx& z : s.eigenvalues) r = std::max(r, std::abs(z));
  return r;
}

}  // namespace specrange
