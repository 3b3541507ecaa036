#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ensembles.hpp"
#include "eigen_general.hpp"
#include "eigen_hermitian.hpp"
#include "linalg.hpp"
#include "rng.hpp"
#include "test_util.hpp"

using namespace specrange;

TEST_CASE("streams are reproducible and stream indices separate") {
  RngStream a(123, 45), b(123, 45), c(123, 46);
  for (int i = 0; i < 64; ++i) {
    const auto va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());  // equality would be a 2^-64 accident
  }
  RngStream s(5, 7);
  const RngStream s1 = s.substream(1);
  const RngStream s2 = s.substream(2);
  CHECK(s1.stream_index() != s2.stream_index());
}

TEST_CASE("golden first draws pin the generator contract") {
  // frozen from the reference run of this generator (xoshiro256++ seeded via
  // SplitMix64 over master_seed ^ mix64(stream_index))
  RngStream u(1, 0);
  CHECK(u.next_u64() == 5226295891941712017ULL);

  RngStream g(1, 0);
  const cx z = g.gaussian_complex(1.0);
  CHECK(z.real() == doctest::Approx(-0.35175931204727168).epsilon(1e-15));
  CHECK(z.imag() == doctest::Approx(1.0665132365027696).epsilon(1e-15));

  CHECK(derive_stream_index(1024, 3) == 831798979807290935ULL);
}

TEST_CASE("complex gaussian moments") {
  RngStream rng(2, 0);
  const std::size_t draws = 1000000;
  double sum2 = 0.0;
  cx mean(0.0, 0.0);
  for (std::size_t i = 0; i < draws; ++i) {
    const cx z = rng.gaussian_complex(1.0);
    sum2 += std::norm(z);
    mean += z;
  }
  CHECK(std::abs(sum2 / double(draws) - 1.0) < 0.005);
  CHECK(std::abs(mean) / double(draws) < 0.003);
}

TEST_CASE("triangular strict: zeros, spectrum, HS normalization") {
  EnsembleSpec spec = EnsembleSpec::parse("triangular-strict", 16);
  RngStream rng(3, 0);
  const ComplexMatrix t = sample(spec, rng);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j <= i; ++j) CHECK(t(i, j) == cx(0.0, 0.0));
  for (const cx& z : eigenvalues_general(t).eigenvalues) CHECK(std::abs(z) == 0.0);

  // E ||T_N||_HS^2 = N
  const std::size_t n = 128, trials = 32;
  double acc = 0.0;
  EnsembleSpec spec_n = spec.with_dimension(n);
  for (std::size_t tr = 0; tr < trials; ++tr) {
    RngStream s(17, derive_stream_index(n, tr));
    const double hs = hs_norm(sample(spec_n, s));
    acc += hs * hs;
  }
  acc /= double(trials);
  CHECK(acc == doctest::Approx(double(n)).epsilon(0.05));
}

TEST_CASE("ginibre HS normalization") {
  const std::size_t n = 64, trials = 64;
  EnsembleSpec spec = EnsembleSpec::parse("ginibre-complex", n);
  double acc = 0.0;
  for (std::size_t tr = 0; tr < trials; ++tr) {
    RngStream s(19, derive_stream_index(n, tr));
    const double hs = hs_norm(sample(spec, s));
    acc += hs * hs;
  }
  acc /= double(trials);
  CHECK(acc > double(n) - 3.0);
  CHECK(acc < double(n) + 3.0);
}

TEST_CASE("diagonalized ginibre mean squared eigenvalue is 1/2") {
  const std::size_t n = 128, trials = 64;
  EnsembleSpec spec = EnsembleSpec::parse("diagonalized-ginibre", n);
  double acc = 0.0;
  for (std::size_t tr = 0; tr < trials; ++tr) {
    RngStream s(23, derive_stream_index(n, tr));
    const ComplexMatrix d = sample(spec, s);
    const double hs = hs_norm(d);
    acc += hs * hs / double(n);
  }
  acc /= double(trials);
  CHECK(acc == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("jordan ensemble is the deterministic shift matrix") {
  EnsembleSpec spec = EnsembleSpec::parse("jordan", 3);
  RngStream rng(1, 0);
  const ComplexMatrix j = sample(spec, rng);
  CHECK(j(0, 1) == cx(1.0, 0.0));
  CHECK(j(1, 2) == cx(1.0, 0.0));
  CHECK(j(0, 0) == cx(0.0, 0.0));
  CHECK(j(1, 0) == cx(0.0, 0.0));
}

TEST_CASE("max abs gaussian bound and its empirical behavior") {
  CHECK(max_abs_gaussian_bound(1) ==
        doctest::Approx(std::sqrt(2.0 * std::log(2.0))).epsilon(1e-15));

  const std::size_t n = 1000;
  const double bound = max_abs_gaussian_bound(n);
  CHECK(bound == doctest::Approx(3.899).epsilon(1e-3));

  double mean_max = 0.0;
  const std::size_t trials = 200;
  std::vector<double> g(n);
  for (std::size_t tr = 0; tr < trials; ++tr) {
    RngStream s(29, tr);
    s.fill_gaussian_real(g, 1.0);
    double mx = 0.0;
    for (double v : g) mx = std::max(mx, std::abs(v));
    mean_max += mx;
  }
  mean_max /= double(trials);
  CHECK(mean_max <= bound);

  // P(max > bound + 1) <= e^{-1/2}
  std::size_t exceed = 0;
  const std::size_t tail_trials = 500;
  for (std::size_t tr = 0; tr < tail_trials; ++tr) {
    RngStream s(31, tr);
    s.fill_gaussian_real(g, 1.0);
    double mx = 0.0;
    for (double v : g) mx = std::max(mx, std::abs(v));
    if (mx > bound + 1.0) ++exceed;
  }
  CHECK(double(exceed) / double(tail_trials) <= std::exp(-0.5));
}

TEST_CASE("rotation invariance of the real-part norm distribution") {
  const std::size_t n = 64, trials = 64;
  EnsembleSpec spec = EnsembleSpec::parse("ginibre-complex", n);
  std::vector<double> at0, at_theta;
  for (std::size_t tr = 0; tr < trials; ++tr) {
    RngStream s0(41, derive_stream_index(n, tr));
    const ComplexMatrix x = sample(spec, s0);
    const auto ev0 = hermitian_eigenvalues(hermitian_part(x, 0.0));
    at0.push_back(std::max(std::abs(ev0.front()), std::abs(ev0.back())));
    RngStream s1(43, derive_stream_index(n, tr));  // independent copy
    const ComplexMatrix y = sample(spec, s1);
    const auto ev1 = hermitian_eigenvalues(hermitian_part(y, 0.9));
    at_theta.push_back(std::max(std::abs(ev1.front()), std::abs(ev1.back())));
  }
  const double d = testutil::ks_statistic(at0, at_theta);
  // 1% two-sample critical value: 1.628 sqrt((m+n)/(mn))
  const double crit = 1.628 * std::sqrt(2.0 / double(trials));
  CHECK(d < crit);
}

TEST_CASE("real part of ginibre matches the scaled GUE variance profile") {
  const std::size_t n = 256, trials = 8;
  EnsembleSpec spec = EnsembleSpec::parse("ginibre-complex", n);
  double diag_var = 0.0, off_var = 0.0;
  std::size_t diag_count = 0, off_count = 0;
  for (std::size_t tr = 0; tr < trials; ++tr) {
    RngStream s(47, derive_stream_index(n, tr));
    const ComplexMatrix h = hermitian_part(sample(spec, s), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      diag_var += h(i, i).real() * h(i, i).real();
      ++diag_count;
      for (std::size_t j = i + 1; j < n; ++j) {
        off_var += std::norm(h(i, j));
        ++off_count;
      }
    }
  }
  diag_var /= double(diag_count);
  off_var /= double(off_count);
  const double expected = 1.0 / (2.0 * double(n));
  CHECK(diag_var == doctest::Approx(expected).epsilon(0.05));
  CHECK(off_var == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("mixture keeps the HS normalization") {
  const std::size_t n = 64, trials = 48;
  EnsembleSpec spec = EnsembleSpec::parse("mixture:diagonal-unitary:0.37", n);
  double acc = 0.0;
  for (std::size_t tr = 0; tr < trials; ++tr) {
    RngStream s(53, derive_stream_index(n, tr));
    const double hs = hs_norm(sample(spec, s));
    acc += hs * hs / double(n);
  }
  acc /= double(trials);
  CHECK(acc == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("block pattern coupling is bit-exact") {
  const std::size_t n = 37;  // not a multiple of k
  const int k = 4;
  EnsembleSpec bar = EnsembleSpec::parse("triangular-bar", n);
  EnsembleSpec block = EnsembleSpec::parse("triangular-block:4", n);
  RngStream s1(61, 9), s2(61, 9);
  const ComplexMatrix t = sample(bar, s1);
  const ComplexMatrix tk = sample(block, s2);

  ComplexMatrix expected = t;
  zero_block_pattern(expected, k);
  CHECK(tk == expected);

  // difference is supported exactly on the zeroed pattern
  const std::size_t m = n / std::size_t(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool zeroed = i >= (j / m) * m;
      const cx diff = t(i, j) - tk(i, j);
      if (zeroed) CHECK(diff == t(i, j));
      else CHECK(diff == cx(0.0, 0.0));
    }
}

TEST_CASE("sampling is independent of trial execution order") {
  const std::size_t n = 24;
  EnsembleSpec spec = EnsembleSpec::parse("ginibre-real", n);
  RngStream a0(71, derive_stream_index(n, 0));
  RngStream a1(71, derive_stream_index(n, 1));
  const ComplexMatrix first0 = sample(spec, a0);
  const ComplexMatrix first1 = sample(spec, a1);
  // reversed order
  RngStream b1(71, derive_stream_index(n, 1));
  RngStream b0(71, derive_stream_index(n, 0));
  const ComplexMatrix second1 = sample(spec, b1);
  const ComplexMatrix second0 = sample(spec, b0);
  CHECK(first0 == second0);
  CHECK(first1 == second1);
}

TEST_CASE("spec validation rejects malformed requests") {
  CHECK_THROWS_AS((void)EnsembleSpec::parse("triangular-strict", 1), InvalidSpec);
  CHECK_THROWS_AS((void)EnsembleSpec::parse("triangular-block:9", 8), InvalidSpec);
  CHECK_THROWS_AS((void)EnsembleSpec::parse("mixture:jordan:1.5", 8), InvalidSpec);
  CHECK_THROWS_AS((void)EnsembleSpec::parse("ellipse:0:1", 8), InvalidSpec);
  CHECK_THROWS_AS((void)EnsembleSpec::parse("no-such-kind", 8), InvalidSpec);
}

TEST_CASE("spec tokens round-trip through parse/to_string") {
  for (const char* token :
       {"ginibre-complex", "ginibre-real", "triangular-strict", "triangular-bar",
        "triangular-block:16", "diagonalized-ginibre", "diagonal-unitary", "jordan",
        "diag-plus-triangular", "unitary-plus-triangular", "ellipse:1:0.5",
        "mixture:diagonal-unitary:0.25"}) {
    const EnsembleSpec spec = EnsembleSpec::parse(token, 32);
    const EnsembleSpec again = EnsembleSpec::parse(spec.to_string(), 32);
    CHECK(again.to_string() == spec.to_string());
  }
}

TEST_CASE("diagonal unitary eigenphases lie on the unit circle") {
  EnsembleSpec spec = EnsembleSpec::parse("diagonal-unitary", 32);
  RngStream s(81, 0);
  const ComplexMatrix u = sample(spec, s);
  for (std::size_t i = 0; i < 32; ++i)
    CHECK(std::abs(u(i, i)) == doctest::Approx(1.0).epsilon(1e-14));
}
