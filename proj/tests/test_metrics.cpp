#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ensembles.hpp"
#include "linalg.hpp"
#include "metrics.hpp"
#include "test_util.hpp"

using namespace specrange;
using testutil::random_ginibre;

namespace {

ComplexMatrix jordan2() {
  ComplexMatrix j(2);
  j(0, 1) = cx(1.0, 0.0);
  return j;
}

}  // namespace

TEST_CASE("mu3 vanishes for normal matrices and is 1 for J2") {
  RngStream rng(3, 9);
  std::vector<cx> eigs;
  for (int i = 0; i < 8; ++i) eigs.push_back(rng.gaussian_complex(1.0));
  const ComplexMatrix x = testutil::normal_from(eigs, rng);
  CHECK(mu3(x) <= 1e-6 * hs_norm(x));
  CHECK(mu3(jordan2()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mu3 of the strict triangular ensemble concentrates at N") {
  const std::size_t n = 512, trials = 16;
  EnsembleSpec spec = EnsembleSpec::parse("triangular-strict", n);
  double acc = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    RngStream s(101, derive_stream_index(n, t));
    const double m3 = mu3(sample(spec, s));
    acc += m3 * m3;
  }
  acc /= double(trials);
  CHECK(acc > double(n) - 26.0);
  CHECK(acc < double(n) + 26.0);
}

TEST_CASE("alpha scaling closed forms") {
  CHECK(alpha_scaling(jordan2()) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  ComplexMatrix d(2);
  d(0, 0) = cx(1, 0);
  d(1, 1) = cx(-1, 0);
  CHECK(alpha_scaling(d) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("alpha of ginibre approaches sqrt(N/2)") {
  const std::size_t n = 512, trials = 16;
  EnsembleSpec spec = EnsembleSpec::parse("ginibre-complex", n);
  double acc = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    RngStream s(103, derive_stream_index(n, t));
    acc += alpha_scaling(sample(spec, s)) / std::sqrt(double(n) / 2.0);
  }
  acc /= double(trials);
  CHECK(acc == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("first normalized moment of T-bar matches the exact mean") {
  const std::size_t n = 256, trials = 32;
  EnsembleSpec spec = EnsembleSpec::parse("triangular-bar", n);
  double acc = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    RngStream s(107, derive_stream_index(n, t));
    acc += normalized_moment(sample(spec, s), 1);
  }
  acc /= double(trials);
  // E N^{-1} Tr(T T*) = (N(N-1)/2) (1/N) / N = (N-1)/(2N)
  const double expected = double(n - 1) / (2.0 * double(n));
  CHECK(acc == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("second normalized moment approaches 2/3 already at N=256") {
  const std::size_t n = 256, trials = 16;
  EnsembleSpec spec = EnsembleSpec::parse("triangular-bar", n);
  double acc = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    RngStream s(109, derive_stream_index(n, t));
    acc += normalized_moment(sample(spec, s), 2);
  }
  acc /= double(trials);
  CHECK(acc == doctest::Approx(2.0 / 3.0).epsilon(0.03));
}

TEST_CASE("moment limits") {
  CHECK(triangular_moment_limit(1) == doctest::Approx(0.5));
  CHECK(triangular_moment_limit(2) == doctest::Approx(2.0 / 3.0));
  CHECK(triangular_moment_limit(3) == doctest::Approx(9.0 / 8.0));
  CHECK(triangular_moment_limit(4) == doctest::Approx(32.0 / 15.0));
  CHECK(triangular_moment_limit(5) == doctest::Approx(3125.0 / 720.0));
}

TEST_CASE("normalized_moment: identity, eigenvalue cross-check, errors") {
  RngStream rng(113, 0);
  const ComplexMatrix x = random_ginibre(64, rng);
  const double hs = hs_norm(x);
  CHECK(normalized_moment(x, 1) ==
        doctest::Approx(hs * hs / 64.0).epsilon(1e-10));

  // repeated-matmul route vs eigenvalues of XX* (independent code path)
  const std::vector<double> ev = hermitian_eigenvalues(gram(x));
  for (unsigned ell = 2; ell <= 5; ++ell) {
    double ref = 0.0;
    for (double v : ev) ref += std::pow(v, double(ell));
    ref /= 64.0;
    CHECK(normalized_moment(x, ell) == doctest::Approx(ref).epsilon(1e-8));
  }
  CHECK_THROWS_AS((void)normalized_moment(x, 0), InvalidArgument);
}

TEST_CASE("metrics_report ordering chain and power inequality") {
  for (const char* token :
       {"ginibre-complex", "triangular-strict", "diagonal-unitary",
        "unitary-plus-triangular"}) {
    EnsembleSpec spec = EnsembleSpec::parse(token, 32);
    RngStream s(131, derive_stream_index(32, 0));
    const ComplexMatrix x = sample(spec, s);
    const MetricsReport r = metrics_report(x, 64, std::nullopt);
    // the sampled numerical radius can undershoot by the discretization gap
    const double gap = inner_outer_range(support_profile(x, 64)).gap;
    const double slack = 1e-8 * r.operator_norm + gap + 1e-9;
    CHECK(r.spectral_radius <= r.numerical_radius + slack);
    CHECK(r.numerical_radius <= r.operator_norm + slack);
    CHECK(r.operator_norm <= 2.0 * r.numerical_radius + slack);
  }
}

TEST_CASE("mu3 is unitarily invariant") {
  RngStream rng(137, 2);
  const ComplexMatrix x = random_ginibre(40, rng);
  const ComplexMatrix u = testutil::haar_unitary(40, rng);
  const ComplexMatrix y = matmul(matmul(u, x), conj_transpose(u));
  CHECK(std::abs(mu3(x) - mu3(y)) <= 1e-6 * hs_norm(x));
}

TEST_CASE("triangular metrics report: zero spectral radius, mu3^2 ~ N") {
  const std::size_t n = 128;
  EnsembleSpec spec = EnsembleSpec::parse("triangular-strict", n);
  RngStream s(139, derive_stream_index(n, 0));
  const ComplexMatrix x = sample(spec, s);
  const MetricsReport r = metrics_report(x, 64, std::sqrt(2.0));
  CHECK(r.spectral_radius <= 1e-6);
  CHECK(r.hausdorff_to_target.has_value());
  CHECK(r.mu3_squared_over_n == doctest::Approx(1.0).epsilon(0.25));
}
