#ifndef SPECRANGE_EIGEN_GENERAL_HPP
#define SPECRANGE_EIGEN_GENERAL_HPP

#include <vector>

#include "complex_matrix.hpp"

namespace specrange {

// Complex spectrum, stored sorted lexicographically by (re, im) so that
// downstream files and tests are reproducible.
struct Spectrum {
  std::vector<cx> eigenvalues;
};

// Eigenvalues of a general complex matrix: Householder reduction to upper
// Hessenberg form, then single-shift QR with Wilkinson shifts and relative
// subdiagonal deflation at 1e-12.  No eigenvectors are computed.
// Throws NonConvergence after 40*n total sweeps.
Spectrum eigenvalues_general(const ComplexMatrix& x);

double spectral_radius(const Spectrum& s);

}  // namespace specrange

#endif
