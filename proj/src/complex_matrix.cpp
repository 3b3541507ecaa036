#include "complex_matrix.hpp"

#include <cmath>

namespace specrange {

ComplexMatrix ComplexMatrix::from_entries(std::size_t n, std::span<const cx> entries) {
  ComplexMatrix m(n);
  if (entries.size() != n * n)
    throw DimensionMismatch("entry count does not match dimension");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const cx v = entries[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InvalidArgument("matrix entries must be finite");
    m.a_[k] = v;
  }
  return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cx(1.0, 0.0);
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cx& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace specrange
