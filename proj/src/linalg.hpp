#ifndef SPECRANGE_LINALG_HPP
#define SPECRANGE_LINALG_HPP

#include "complex_matrix.hpp"
#include "eigen_general.hpp"
#include "eigen_hermitian.hpp"

namespace specrange {

// (e^{i theta} X + e^{-i theta} X^*) / 2.  The result is exactly Hermitian by
// construction: the mirror entry is assigned as the conjugate of the same sum
// and the diagonal is assigned a real value.
ComplexMatrix hermitian_part(const ComplexMatrix& x, double theta);

// Same, with the unit phase supplied directly.  Negating the phase negates
// every entry of the result bit-for-bit, which the support-function grid
// exploits for antipodal angles.
ComplexMatrix hermitian_part_phase(const ComplexMatrix& x, cx phase);

// Plain dense product, blocked row kernel.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// X X^*, exploiting Hermitian symmetry of the result.
ComplexMatrix gram(const ComplexMatrix& x);

ComplexMatrix conj_transpose(const ComplexMatrix& x);

cx trace(const ComplexMatrix& x);

// Frobenius / Hilbert-Schmidt norm.
double hs_norm(const ComplexMatrix& x);

// Largest singular value via the top eigenvalue of X X^*.
double operator_norm(const ComplexMatrix& x);

}  // namespace specrange

#endif
