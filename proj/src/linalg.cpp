#include "linalg.hpp"

#include <algorithm>
#include <cmath>

namespace specrange {

ComplexMatrix hermitian_part_phase(const ComplexMatrix& x, cx phase) {
  const std::size_t n = x.dim();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = cx((phase * x(i, i)).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cx v = 0.5 * (phase * x(i, j) + std::conj(phase * x(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

ComplexMatrix hermitian_part(const ComplexMatrix& x, double theta) {
  return hermitian_part_phase(x, cx(std::cos(theta), std::sin(theta)));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matmul: dimensions differ");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  const double* bp = reinterpret_cast<const double*>(b.data());
  double* cp = reinterpret_cast<double*>(c.data());
  constexpr std::size_t kRowBlock = 32;
  for (std::size_t ib = 0; ib < n; ib += kRowBlock) {
    const std::size_t iend = std::min(ib + kRowBlock, n);
    for (std::size_t k = 0; k < n; ++k) {
      const double* brow = bp + 2 * k * n;
      for (std::size_t i = ib; i < iend; ++i) {
        const cx aik = a(i, k);
        const double ar = aik.real(), ai = aik.imag();
        if (ar == 0.0 && ai == 0.0) continue;
        double* crow = cp + 2 * i * n;
        for (std::size_t j = 0; j < n; ++j) {
          const double br = brow[2 * j], bi = brow[2 * j + 1];
          crow[2 * j] += ar * br - ai * bi;
          crow[2 * j + 1] += ar * bi + ai * br;
        }
      }
    }
  }
  return c;
}

ComplexMatrix gram(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  ComplexMatrix g(n);
  const double* xp = reinterpret_cast<const double*>(x.data());
  constexpr std::size_t kColBlock = 48;
  for (std::size_t jb = 0; jb < n; jb += kColBlock) {
    const std::size_t jend = std::min(jb + kColBlock, n);
    for (std::size_t i = 0; i < n; ++i) {
      const double* ri = xp + 2 * i * n;
      for (std::size_t j = jb; j < std::min(jend, i + 1); ++j) {
        const double* rj = xp + 2 * j * n;
        double accr = 0.0, acci = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double ar = ri[2 * k], ai = ri[2 * k + 1];
          const double br = rj[2 * k], bi = rj[2 * k + 1];
          accr += ar * br + ai * bi;  // x_ik * conj(x_jk)
          acci += ai * br - ar * bi;
        }
        if (i == j) {
          g(i, i) = cx(accr, 0.0);
        } else {
          g(i, j) = cx(accr, acci);
          g(j, i) = cx(accr, -acci);
        }
      }
    }
  }
  return g;
}

ComplexMatrix conj_transpose(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  ComplexMatrix y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(j, i) = std::conj(x(i, j));
  return y;
}

cx trace(const ComplexMatrix& x) {
  cx t(0.0, 0.0);
  for (std::size_t i = 0; i < x.dim(); ++i) t += x(i, i);
  return t;
}

double hs_norm(const ComplexMatrix& x) {
  double s = 0.0;
  const std::size_t n = x.dim();
  const cx* p = x.data();
  for (std::size_t k = 0; k < n * n; ++k) s += std::norm(p[k]);
  return std::sqrt(s);
}

double operator_norm(const ComplexMatrix& x) {
  const std::vector<double> ev = hermitian_eigenvalues(gram(x));
  return std::sqrt(std::max(0.0, ev.back()));
}

}  // namespace specrange
