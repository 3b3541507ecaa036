#include "rng.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace specrange {

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  std::uint64_t x = master_seed ^ mix64(stream_index);
  for (auto& word : s_) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    word = z ^ (z >> 31);
  }
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ull;
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

void RngStream::gaussian_pair(double& z0, double& z1) {
  const double u1 = next_unit_pos();
  const double u2 = next_unit_half_open();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  z0 = r * std::cos(a);
  z1 = r * std::sin(a);
}

std::complex<double> RngStream::gaussian_complex(double variance) {
  if (!(variance > 0.0)) throw InvalidArgument("variance must be positive");
  const double sd = std::sqrt(0.5 * variance);
  double z0, z1;
  gaussian_pair(z0, z1);
  return {sd * z0, sd * z1};
}

double RngStream::gaussian_real(double variance) {
  if (!(variance > 0.0)) throw InvalidArgument("variance must be positive");
  double z0, z1;
  gaussian_pair(z0, z1);
  return std::sqrt(variance) * z0;
}

void RngStream::fill_gaussian_real(std::span<double> out, double variance) {
  if (!(variance > 0.0)) throw InvalidArgument("variance must be positive");
  const double sd = std::sqrt(variance);
  std::size_t i = 0;
  while (i + 1 < out.size()) {
    double z0, z1;
    gaussian_pair(z0, z1);
    out[i++] = sd * z0;
    out[i++] = sd * z1;
  }
  if (i < out.size()) {
    double z0, z1;
    gaussian_pair(z0, z1);
    out[i] = sd * z0;
  }
}

RngStream RngStream::substream(std::uint64_t tag) const {
  return RngStream(master_seed_,
                   mix64(stream_index_ + 0x9E3779B97F4A7C15ull * (tag + 1)));
}

}  // namespace specrange
