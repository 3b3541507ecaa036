#include "eigen_hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace specrange {

namespace {

constexpr double kDeflateTol = 1e-12;  // relative subdiagonal deflation
constexpr std::size_t kMaxSweeps = 50; // QL sweep cap per eigenvalue

// ---------------------------------------------------------------------------
// Kernels on the lower triangle of a row-major Hermitian matrix.  Hot loops
// work on interleaved (re, im) doubles so the compiler can vectorize them.
// ---------------------------------------------------------------------------

// w = A v using the lower triangle of A (s x s block, leading dimension lda).
void hemv_lower(std::size_t s, const cx* a_, std::size_t lda, const cx* v_, cx* w_) {
  const double* a = reinterpret_cast<const double*>(a_);
  const double* x = reinterpret_cast<const double*>(v_);
  double* y = reinterpret_cast<double*>(w_);
  std::fill(y, y + 2 * s, 0.0);
  for (std::size_t i = 0; i < s; ++i) {
    const double* row = a + 2 * i * lda;
    const double xr = x[2 * i], xi = x[2 * i + 1];
    double accr = 0.0, acci = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      const double ar = row[2 * j], ai = row[2 * j + 1];
      const double vr = x[2 * j], vi = x[2 * j + 1];
      accr += ar * vr - ai * vi;  // A_ij * v_j
      acci += ar * vi + ai * vr;
      y[2 * j] += ar * xr + ai * xi;  // conj(A_ij) * v_i
      y[2 * j + 1] += ar * xi - ai * xr;
    }
    const double dr = row[2 * i];  // diagonal kept exactly real
    y[2 * i] += accr + dr * xr;
    y[2 * i + 1] += acci + dr * xi;
  }
}

// A -= v w^H + w v^H on the lower triangle.
void her2_lower(std::size_t s, cx* a_, std::size_t lda, const cx* v_, const cx* w_) {
  double* a = reinterpret_cast<double*>(a_);
  const double* x = reinterpret_cast<const double*>(v_);
  const double* y = reinterpret_cast<const double*>(w_);
  for (std::size_t i = 0; i < s; ++i) {
    double* row = a + 2 * i * lda;
    const double vir = x[2 * i], vii = x[2 * i + 1];
    const double wir = y[2 * i], wii = y[2 * i + 1];
    for (std::size_t j = 0; j <= i; ++j) {
      const double wjr = y[2 * j], wji = y[2 * j + 1];
      const double vjr = x[2 * j], vji = x[2 * j + 1];
      row[2 * j] -= vir * wjr + vii * wji + wir * vjr + wii * vji;
      row[2 * j + 1] -= vii * wjr - vir * wji + wii * vjr - wir * vji;
    }
    row[2 * i + 1] = 0.0;
  }
}

// Elementary reflector (zlarfg convention): given (alpha, x) returns tau and
// real beta with H^H (alpha; x) = (beta; 0), H = I - tau v v^H, v = (1; x').
// x is scaled in place to the tail of v.
cx make_reflector(std::size_t tail, cx& alpha, cx* x, double& beta_out) {
  double xnorm2 = 0.0;
  for (std::size_t i = 0; i < tail; ++i) xnorm2 += std::norm(x[i]);
  if (xnorm2 == 0.0 && alpha.imag() == 0.0) {
    beta_out = alpha.real();
    return cx(0.0, 0.0);
  }
  const double beta =
      -std::copysign(std::sqrt(std::norm(alpha) + xnorm2), alpha.real());
  const cx tau((beta - alpha.real()) / beta, -alpha.imag() / beta);
  const cx scal = 1.0 / (alpha - beta);
  for (std::size_t i = 0; i < tail; ++i) x[i] *= scal;
  beta_out = beta;
  return tau;
}

struct Tridiagonal {
  std::size_t n = 0;
  std::vector<double> d;   // diagonal
  std::vector<double> e;   // subdiagonal (n-1, real, possibly signed)
  ComplexMatrix refl;      // reflector k in row k, entries k+1..n-1 (v[0]=1)
  std::vector<cx> tau;
};

// Reduce Hermitian h to real symmetric tridiagonal form T = Q^H W Q where
// W is the symmetrized input and Q = H_0 H_1 ... H_{n-2}.
Tridiagonal tridiagonalize(const ComplexMatrix& h, bool keep_reflectors) {
  const std::size_t n = h.dim();

  // Hermiticity gate and symmetrization in one pass (lower triangle only).
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      scale = std::max({scale, std::abs(h(i, j).real()), std::abs(h(i, j).imag()),
                        std::abs(h(j, i).real()), std::abs(h(j, i).imag())});
  ComplexMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const cx lo = h(i, j), up = std::conj(h(j, i));
      if (std::abs(lo - up) > 1e-12 * std::max(scale, 1e-300) * 2.0)
        throw InvalidArgument("hermitian_eigh: input is not Hermitian");
      w(i, j) = 0.5 * (lo + up);
    }
    if (std::abs(h(i, i).imag()) > 1e-12 * std::max(scale, 1e-300))
      throw InvalidArgument("hermitian_eigh: input is not Hermitian");
    w(i, i) = cx(h(i, i).real(), 0.0);
  }

  Tridiagonal t;
  t.n = n;
  t.d.resize(n);
  t.e.assign(n > 0 ? n - 1 : 0, 0.0);
  t.tau.assign(n > 0 ? n - 1 : 0, cx(0.0, 0.0));
  if (keep_reflectors) t.refl = ComplexMatrix(std::max<std::size_t>(n, 1));

  std::vector<cx> v(n), p(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t s = n - 1 - k;  // reflector length
    cx alpha = w(k + 1, k);
    for (std::size_t i = 1; i < s; ++i) v[i] = w(k + 1 + i, k);
    double beta;
    const cx tau = make_reflector(s - 1, alpha, v.data() + 1, beta);
    v[0] = cx(1.0, 0.0);
    t.e[k] = beta;
    t.tau[k] = tau;
    if (keep_reflectors) {
      for (std::size_t i = 0; i < s; ++i) t.refl(k, k + 1 + i) = v[i];
    }
    if (tau != cx(0.0, 0.0)) {
      // x = tau * A22 * v;  w = x - (tau/2)(x^H v) v;  A22 -= v w^H + w v^H
      hemv_lower(s, &w(k + 1, k + 1), n, v.data(), p.data());
      for (std::size_t i = 0; i < s; ++i) p[i] *= tau;
      cx dot(0.0, 0.0);
      for (std::size_t i = 0; i < s; ++i) dot += std::conj(p[i]) * v[i];
      const cx corr = -0.5 * tau * dot;
      for (std::size_t i = 0; i < s; ++i) p[i] += corr * v[i];
      her2_lower(s, &w(k + 1, k + 1), n, v.data(), p.data());
    }
    t.d[k] = w(k, k).real();
  }
  t.d[n - 1] = w(n - 1, n - 1).real();
  return t;
}

// Implicit-shift QL on (d, e).  If rows != nullptr it must hold n rows of
// length n; plane rotations are applied to row pairs (vector-per-row layout).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* rows) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e.push_back(0.0);  // sentinel e[n-1]
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t iter = 0;
    while (true) {
      std::size_t m = l;
      while (m + 1 < n) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kDeflateTol * dd) break;
        ++m;
      }
      if (m == l) break;
      if (++iter > kMaxSweeps)
        throw NonConvergence("hermitian eigensolver: QL sweep budget exhausted", iter);
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {  // recover from underflow by restarting the search
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        if (rows) {
          double* zi = reinterpret_cast<double*>(rows->row(ii));
          double* zj = reinterpret_cast<double*>(rows->row(ii + 1));
          for (std::size_t q = 0; q < 2 * n; ++q) {
            const double fq = zj[q];
            zj[q] = s * zi[q] + c * fq;
            zi[q] = c * zi[q] - s * fq;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  e.pop_back();
}

// Q = H_0 H_1 ... H_{n-2} accumulated into an identity (block grows from the
// bottom-right as k descends).
ComplexMatrix accumulate_q(const Tridiagonal& t) {
  const std::size_t n = t.n;
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<cx> u(n);
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t s = n - 1 - k;
    if (t.tau[k] == cx(0.0, 0.0)) continue;
    const cx* v = &t.refl(k, k + 1);
    // u = v^H * Q[k+1.., k+1..]
    std::fill(u.begin(), u.begin() + s, cx(0.0, 0.0));
    for (std::size_t r = 0; r < s; ++r) {
      const cx vr = std::conj(v[r]);
      const cx* qrow = &q(k + 1 + r, k + 1);
      for (std::size_t cidx = 0; cidx < s; ++cidx) u[cidx] += vr * qrow[cidx];
    }
    for (std::size_t r = 0; r < s; ++r) {
      const cx f = t.tau[k] * v[r];
      cx* qrow = &q(k + 1 + r, k + 1);
      for (std::size_t cidx = 0; cidx < s; ++cidx) qrow[cidx] -= f * u[cidx];
    }
  }
  return q;
}

// y <- Q z for a single vector (descending reflector application).
void apply_q(const Tridiagonal& t, std::vector<cx>& z) {
  const std::size_t n = t.n;
  for (std::size_t k = n - 1; k-- > 0;) {
    if (t.tau[k] == cx(0.0, 0.0)) continue;
    const std::size_t s = n - 1 - k;
    const cx* v = &t.refl(k, k + 1);
    cx dot(0.0, 0.0);
    for (std::size_t i = 0; i < s; ++i) dot += std::conj(v[i]) * z[k + 1 + i];
    const cx f = t.tau[k] * dot;
    for (std::size_t i = 0; i < s; ++i) z[k + 1 + i] -= f * v[i];
  }
}

// Inverse iteration on the tridiagonal (d, e) for the eigenvalue lambda.
// Factorizes (T - shift I) with partial pivoting, Wilkinson-style tiny-pivot
// replacement, deterministic uniform start vector.
std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                        const std::vector<double>& e,
                                        double lambda) {
  const std::size_t n = d.size();
  std::vector<double> z(n, 1.0 / std::sqrt(double(n)));
  if (n == 1) return {1.0};

  double anorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) anorm = std::max(anorm, std::abs(d[i]));
  for (std::size_t i = 0; i + 1 < n; ++i) anorm = std::max(anorm, std::abs(e[i]));
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = eps * std::max(anorm, 1e-300);

  std::vector<double> du(n), u1(n), u2(n), mult(n);
  std::vector<char> swapped(n);

  for (int attempt = 0; attempt < 6; ++attempt) {
    const double shift = lambda + double(attempt) * tiny;
    // LU of (T - shift I) with partial pivoting between adjacent rows.
    double bi = d[0] - shift, ci = e[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double sub = e[i];
      double bn = d[i + 1] - shift;
      double cn = (i + 2 < n) ? e[i + 1] : 0.0;
      if (std::abs(sub) > std::abs(bi)) {
        swapped[i] = 1;
        du[i] = sub;
        u1[i] = bn;
        u2[i] = cn;
        const double m = (du[i] != 0.0) ? bi / du[i] : 0.0;
        mult[i] = m;
        bi = ci - m * bn;
        ci = -m * cn;
      } else {
        swapped[i] = 0;
        du[i] = (bi != 0.0) ? bi : tiny;
        u1[i] = ci;
        u2[i] = 0.0;
        const double m = sub / du[i];
        mult[i] = m;
        bi = bn - m * ci;
        ci = cn;
      }
    }
    du[n - 1] = (bi != 0.0) ? bi : tiny;
    u1[n - 1] = u2[n - 1] = 0.0;

    std::fill(z.begin(), z.end(), 1.0 / std::sqrt(double(n)));
    for (int sweep = 0; sweep < 3; ++sweep) {
      // forward elimination on the right-hand side
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (swapped[i]) std::swap(z[i], z[i + 1]);
        z[i + 1] -= mult[i] * z[i];
      }
      // back substitution
      z[n - 1] /= du[n - 1];
      if (n >= 2) z[n - 2] = (z[n - 2] - u1[n - 2] * z[n - 1]) / du[n - 2];
      for (std::size_t i = n - 1; i-- > 0;) {
        if (i + 2 < n)
          z[i] = (z[i] - u1[i] * z[i + 1] - u2[i] * z[i + 2]) / du[i];
      }
      double mx = 0.0;
      for (double v : z) mx = std::max(mx, std::abs(v));
      if (mx == 0.0) break;
      for (double& v : z) v /= mx;
    }
    double nrm2 = 0.0;
    for (double v : z) nrm2 += v * v;
    if (nrm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(nrm2);
    for (double& v : z) v *= inv;
    // residual of the tridiagonal eigenpair
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = (d[i] - lambda) * z[i];
      if (i > 0) r += e[i - 1] * z[i - 1];
      if (i + 1 < n) r += e[i] * z[i + 1];
      res = std::max(res, std::abs(r));
    }
    if (res <= 1e-10 * std::max(anorm, 1e-300) * double(n)) return z;
  }
  return z;  // best effort; residual invariants are checked by callers/tests
}

std::vector<std::size_t> sorted_order(const std::vector<double>& d) {
  std::vector<std::size_t> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  return idx;
}

}  // namespace

HermitianEigenDecomposition hermitian_eigh(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  Tridiagonal t = tridiagonalize(h, true);
  std::vector<double> d = t.d, e = t.e;

  // Rows of this matrix are the eigenvectors while QL rotates them; this
  // keeps the rotation kernel contiguous.  Start from Q^T.
  ComplexMatrix q = accumulate_q(t);
  ComplexMatrix rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows(j, i) = q(i, j);

  ql_implicit(d, e, &rows);

  const auto order = sorted_order(d);
  HermitianEigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = rows(order[k], i);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  Tridiagonal t = tridiagonalize(h, false);
  std::vector<double> d = t.d, e = t.e;
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

HermitianExtreme hermitian_extreme(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  Tridiagonal t = tridiagonalize(h, true);
  std::vector<double> d = t.d, e = t.e;
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());

  HermitianExtreme out;
  out.values = d;
  out.lambda_min = d.front();
  out.lambda_max = d.back();

  for (int side = 0; side < 2; ++side) {
    const double lambda = side == 0 ? out.lambda_min : out.lambda_max;
    const std::vector<double> zt = tridiag_eigenvector(t.d, t.e, lambda);
    std::vector<cx> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = cx(zt[i], 0.0);
    apply_q(t, z);
    double nrm2 = 0.0;
    for (const cx& v : z) nrm2 += std::norm(v);
    const double inv = 1.0 / std::sqrt(nrm2);
    for (cx& v : z) v *= inv;
    (side == 0 ? out.vec_min : out.vec_max) = std::move(z);
  }
  return out;
}

}  // namespace specrange
