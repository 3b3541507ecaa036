#ifndef SPECRANGE_TEST_UTIL_HPP
#define SPECRANGE_TEST_UTIL_HPP

// Shared helpers for the test suites: independent eigenvalue oracles
// (characteristic polynomial + bisection / Durand-Kerner), Haar unitaries,
// random Hermitian matrices and a two-sample Kolmogorov-Smirnov statistic.
// Everything here is deliberately written against the algebra, not against
// the library's solver path, so it can serve as an oracle for it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "complex_matrix.hpp"
#include "ensembles.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace testutil {

using specrange::ComplexMatrix;
using specrange::cx;
using specrange::RngStream;

inline ComplexMatrix random_ginibre(std::size_t n, RngStream& rng, double scale = 1.0) {
  ComplexMatrix x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      x(i, j) = scale * rng.gaussian_complex(1.0 / double(n));
  return x;
}

inline ComplexMatrix random_hermitian(std::size_t n, RngStream& rng) {
  return specrange::hermitian_part(random_ginibre(n, rng), 0.0);
}

// Characteristic polynomial coefficients by the Faddeev-LeVerrier recursion:
// p(z) = z^n + c[1] z^{n-1} + ... + c[n].
inline std::vector<cx> char_poly(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<cx> c(n + 1, cx(0.0, 0.0));
  c[0] = cx(1.0, 0.0);
  ComplexMatrix m = ComplexMatrix(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I
    ComplexMatrix am = specrange::matmul(a, m);
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[k - 1];
    m = am;
    cx tr(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      cx d(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) d += a(i, j) * m(j, i);
      tr += d;
    }
    c[k] = -tr / double(k);
  }
  return c;
}

inline cx poly_eval(const std::vector<cx>& c, cx z) {
  cx v(0.0, 0.0);
  for (const cx& ck : c) v = v * z + ck;
  return v;
}

// Real roots of a polynomial with (numerically) real coefficients via sign
// scanning + bisection on [lo, hi]; expects simple roots.
inline std::vector<double> real_roots_bisect(const std::vector<cx>& c, double lo,
                                             double hi, std::size_t expected) {
  auto f = [&](double x) { return poly_eval(c, cx(x, 0.0)).real(); };
  std::vector<double> roots;
  const std::size_t grid = 20000;
  double prev_x = lo, prev_f = f(lo);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double x = lo + (hi - lo) * double(i) / double(grid);
    const double fx = f(x);
    if ((prev_f < 0.0) != (fx < 0.0)) {
      double a = prev_x, b = x, fa = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if ((fa < 0.0) != (fm < 0.0)) b = mid;
        else {
          a = mid;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = fx;
  }
  (void)expected;
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Gershgorin interval of a Hermitian matrix.
inline std::pair<double, double> gershgorin(const ComplexMatrix& h) {
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (j != i) r += std::abs(h(i, j));
    lo = std::min(lo, h(i, i).real() - r);
    hi = std::max(hi, h(i, i).real() + r);
  }
  return {lo - 1e-9, hi + 1e-9};
}

// All complex roots via the Durand-Kerner (Weierstrass) iteration from the
// standard (0.4 + 0.9i)^k starting points.
inline std::vector<cx> durand_kerner(const std::vector<cx>& c, int iterations = 600) {
  const std::size_t deg = c.size() - 1;
  std::vector<cx> r(deg);
  const cx seed(0.4, 0.9);
  cx p(1.0, 0.0);
  for (std::size_t k = 0; k < deg; ++k) {
    p *= seed;
    r[k] = p;
  }
  for (int it = 0; it < iterations; ++it) {
    double moved = 0.0;
    for (std::size_t k = 0; k < deg; ++k) {
      cx denom(1.0, 0.0);
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) denom *= (r[k] - r[j]);
      const cx delta = poly_eval(c, r[k]) / denom;
      r[k] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-15) break;
  }
  std::sort(r.begin(), r.end(), [](const cx& a, const cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return r;
}

// Greedy multiset match: largest pairwise distance after optimal-ish pairing
// of two sorted eigenvalue lists.
inline double multiset_distance(std::vector<cx> a, std::vector<cx> b) {
  double worst = 0.0;
  for (const cx& x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    worst = std::max(worst, best);
    b.erase(b.begin() + std::ptrdiff_t(best_j));
  }
  return worst;
}

// Haar unitary via modified Gram-Schmidt QR of a Ginibre sample with the
// R-diagonal phase fixed positive.
inline ComplexMatrix haar_unitary(std::size_t n, RngStream& rng) {
  ComplexMatrix g = random_ginibre(n, rng);
  ComplexMatrix q(n);
  std::vector<cx> col(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) col[i] = g(i, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        cx dot(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, j)) * col[i];
        for (std::size_t i = 0; i < n; ++i) col[i] -= dot * q(i, j);
      }
    }
    double nrm = 0.0;
    for (const cx& v : col) nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    // phase convention: make the pivot entry real positive
    cx piv = col[k];
    const cx phase = std::abs(piv) > 0 ? std::abs(piv) / piv : cx(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) q(i, k) = col[i] * phase / nrm;
  }
  return q;
}

// X = U D U^* for a diagonal of given complex values: a normal matrix.
inline ComplexMatrix normal_from(const std::vector<cx>& diag, RngStream& rng) {
  const std::size_t n = diag.size();
  const ComplexMatrix u = haar_unitary(n, rng);
  ComplexMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = diag[i];
  return specrange::matmul(specrange::matmul(u, d), specrange::conj_transpose(u));
}

// Two-sample Kolmogorov-Smirnov statistic sup |F1 - F2|.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    const double f1 = double(i) / double(a.size());
    const double f2 = double(j) / double(b.size());
    d = std::max(d, std::abs(f1 - f2));
  }
  return d;
}

}  // namespace testutil

#endif
