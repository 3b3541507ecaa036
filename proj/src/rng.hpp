#ifndef SPECRANGE_RNG_HPP
#define SPECRANGE_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace specrange {

// SplitMix64 step used as the 64-bit mixing function for stream derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream index for trial `t` at matrix size `n`: adding or removing sizes
// from a sweep never changes the draws of another size.
inline std::uint64_t derive_stream_index(std::uint64_t n, std::uint64_t trial) {
  return mix64(n) ^ mix64(trial << 32);
}

// Counter-seeded xoshiro256++ stream.  Identical (master_seed, stream_index)
// always reproduces the same sequence; distinct stream indices give
// statistically independent streams.  State is seeded by SplitMix64 over
// master_seed ^ mix64(stream_index); see README for the pinned contract.
class RngStream {
public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64();

  // Uniform on (0,1]; safe as a Box-Muller log argument.
  double next_unit_pos() {
    return (double(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }
  // Uniform on [0,1).
  double next_unit_half_open() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  // One Box-Muller pair of independent standard normals.
  void gaussian_pair(double& z0, double& z1);

  // Centered complex Gaussian with E|xi|^2 = variance (real and imaginary
  // parts independent N(0, variance/2)); consumes exactly one pair.
  std::complex<double> gaussian_complex(double variance);

  // Single real N(0, variance); consumes a full pair and discards the spare,
  // keeping the draw count independent of call history.
  double gaussian_real(double variance);

  // Fills the span pairwise in index order (one Box-Muller pair per two
  // slots; a trailing odd slot uses the first half of a fresh pair).
  void fill_gaussian_real(std::span<double> out, double variance);

  // Child stream for composite ensembles; tag disambiguates the parts.
  RngStream substream(std::uint64_t tag) const;

private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::array<std::uint64_t, 4> s_;
};

}  // namespace specrange

#endif
