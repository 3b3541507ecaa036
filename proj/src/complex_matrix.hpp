#ifndef SPECRANGE_COMPLEX_MATRIX_HPP
#define SPECRANGE_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"

namespace specrange {

using cx = std::complex<double>;

// Dense square complex matrix, row-major.  The universal carrier for every
// matrix this library touches.
class ComplexMatrix {
public:
  ComplexMatrix() : n_(0) {}
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, cx(0.0, 0.0)) {
    if (n == 0) throw InvalidArgument("matrix dimension must be >= 1");
  }

  // Checked construction from row-major entries; rejects NaN/Inf.
  static ComplexMatrix from_entries(std::size_t n, std::span<const cx> entries);
  static ComplexMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }

  cx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  cx* data() { return a_.data(); }
  const cx* data() const { return a_.data(); }

  cx* row(std::size_t i) { return a_.data() + i * n_; }
  const cx* row(std::size_t i) const { return a_.data() + i * n_; }

  bool all_finite() const;

  bool operator==(const ComplexMatrix& other) const = default;

private:
  std::size_t n_;
  std::vector<cx> a_;
};

}  // namespace specrange

#endif
