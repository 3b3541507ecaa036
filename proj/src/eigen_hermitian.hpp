#ifndef SPECRANGE_EIGEN_HERMITIAN_HPP
#define SPECRANGE_EIGEN_HERMITIAN_HPP

#include <vector>

#include "complex_matrix.hpp"

namespace specrange {

// Full Hermitian eigendecomposition.  `values` are nondecreasing, column k of
// `vectors` is a unit eigenvector for values[k].
struct HermitianEigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Householder tridiagonalization followed by implicit-shift QL with Wilkinson
// shifts, eigenvectors accumulated.  Deterministic for identical input bits.
// The input is symmetrized (averaged with its adjoint) before reduction and
// must be Hermitian to 1e-12 * max|entry| elementwise.
// Throws NonConvergence if an eigenvalue needs more than 50 QL sweeps.
HermitianEigenDecomposition hermitian_eigh(const ComplexMatrix& h);

// Eigenvalues only (nondecreasing); skips all vector work.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Extreme eigenpairs plus the full sorted spectrum.  The two vectors come
// from inverse iteration on the reduced tridiagonal form, back-transformed
// through the Householder reflectors; costs one tridiagonalization.
struct HermitianExtreme {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  std::vector<cx> vec_min;
  std::vector<cx> vec_max;
  std::vector<double> values;
};

HermitianExtreme hermitian_extreme(const ComplexMatrix& h);

}  // namespace specrange

#endif
