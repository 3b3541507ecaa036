#ifndef SPECRANGE_ENSEMBLES_HPP
#define SPECRANGE_ENSEMBLES_HPP

#include <memory>
#include <string>

#include "complex_matrix.hpp"
#include "rng.hpp"

namespace specrange {

enum class EnsembleKind {
  GinibreComplex,         // i.i.d. complex Gaussian entries, E|xi|^2 = 1/N
  GinibreReal,            // i.i.d. real Gaussian entries, E g^2 = 1/N
  TriangularStrict,       // strict upper triangle, E|xi|^2 = 2/(N-1)
  TriangularBar,          // strict upper triangle, E|xi|^2 = 1/N
  TriangularBlock,        // TriangularBar with k-block pattern zeroed
  DiagonalizedGinibre,    // diag of the (sorted) Ginibre spectrum
  DiagonalUnitary,        // diag(e^{i phi_k}), phi_k uniform on [0, 2pi)
  Jordan,                 // ones on the first superdiagonal
  Mixture,                // sqrt(1-a) base + sqrt(a) T_strict
  DiagPlusTriangular,     // D_N + T_strict / sqrt(2)
  UnitaryPlusTriangular,  // U_N + T_strict
  Ellipse,                // a H1 + i b H2, H1/H2 independent Ginibre
};

// Declarative description of a matrix distribution plus its normalization.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GinibreComplex;
  std::size_t n = 2;
  int block_count = 0;     // TriangularBlock
  double weight = 0.0;     // Mixture, in [0, 1]
  double ellipse_a = 1.0;  // Ellipse
  double ellipse_b = 1.0;
  std::shared_ptr<const EnsembleSpec> base;  // Mixture base distribution

  // Token grammar (also used by the CLI and manifests):
  //   ginibre-complex | ginibre-real | triangular-strict | triangular-bar |
  //   triangular-block:<k> | diagonalized-ginibre | diagonal-unitary |
  //   jordan | mixture:<base>:<a> | diag-plus-triangular |
  //   unitary-plus-triangular | ellipse:<a>:<b>
  static EnsembleSpec parse(const std::string& token, std::size_t n);

  std::string to_string() const;

  // Returns a copy with the dimension replaced (recursively for mixtures).
  EnsembleSpec with_dimension(std::size_t n) const;

  void validate() const;  // throws InvalidSpec
};

// Draws one matrix.  Pure in (spec, stream state); entry order per kind is
// fixed (row-major; composite kinds use substreams 1 and 2) so samples are
// reproducible.
ComplexMatrix sample(const EnsembleSpec& spec, RngStream& stream);

// Zeroes the k-block diagonal pattern (block size m = floor(n/k)): entry
// (i, j) is cleared when i >= l*m, where l = j/m is the block index of
// column j.  Applying this to a TriangularBar sample gives the coupled
// block matrix used by the norm-convergence study.
void zero_block_pattern(ComplexMatrix& t, int k);

// sqrt(2 ln(2n)): expected-maximum bound for n standard Gaussians.
double max_abs_gaussian_bound(std::size_t n);

}  // namespace specrange

#endif
