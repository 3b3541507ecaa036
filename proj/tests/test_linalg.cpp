#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eigen_general.hpp"
#include "eigen_hermitian.hpp"
#include "linalg.hpp"
#include "test_util.hpp"

using namespace specrange;
using testutil::random_ginibre;
using testutil::random_hermitian;

namespace {

ComplexMatrix jordan2() {
  ComplexMatrix j(2);
  j(0, 1) = cx(1.0, 0.0);
  return j;
}

double eigh_residual(const ComplexMatrix& h, const HermitianEigenDecomposition& d) {
  const std::size_t n = h.dim();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      cx r(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) r += h(i, j) * d.vectors(j, k);
      r -= d.values[k] * d.vectors(i, k);
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double unitarity_defect(const ComplexMatrix& v) {
  const std::size_t n = v.dim();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      cx dot(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(v(i, a)) * v(i, b);
      if (a == b) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  return worst;
}

}  // namespace

TEST_CASE("hermitian_part on reference matrices") {
  const ComplexMatrix j2 = jordan2();
  const ComplexMatrix h = hermitian_part(j2, 0.0);
  CHECK(h(0, 0) == cx(0.0, 0.0));
  CHECK(h(0, 1) == cx(0.5, 0.0));
  CHECK(h(1, 0) == cx(0.5, 0.0));

  const ComplexMatrix id = ComplexMatrix::identity(3);
  const ComplexMatrix hc = hermitian_part(id, 0.7);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(hc(i, i).real() == doctest::Approx(std::cos(0.7)).epsilon(1e-15));

  ComplexMatrix ii(2);
  ii(0, 0) = ii(1, 1) = cx(0.0, 1.0);
  const ComplexMatrix hm = hermitian_part(ii, std::numbers::pi / 2.0);
  CHECK(hm(0, 0).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(hm(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(hm(0, 1)) == 0.0);
}

TEST_CASE("hermitian_part phase negation is bit-exact") {
  RngStream rng(42, 0);
  const ComplexMatrix x = random_ginibre(17, rng);
  const cx phase(std::cos(1.234), std::sin(1.234));
  const ComplexMatrix a = hermitian_part_phase(x, phase);
  const ComplexMatrix b = hermitian_part_phase(x, -phase);
  for (std::size_t i = 0; i < 17; ++i)
    for (std::size_t j = 0; j < 17; ++j) {
      CHECK(a(i, j).real() == -b(i, j).real());
      CHECK(a(i, j).imag() == -b(i, j).imag());
    }
}

TEST_CASE("hermitian_eigh diagonal and 2x2 closed forms") {
  ComplexMatrix d(3);
  d(0, 0) = cx(3, 0);
  d(1, 1) = cx(1, 0);
  d(2, 2) = cx(2, 0);
  const auto e = hermitian_eigh(d);
  REQUIRE(e.values.size() == 3);
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e.values[2] == doctest::Approx(3.0).epsilon(1e-14));
  // columns are permuted identity vectors
  CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e.vectors(2, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e.vectors(0, 2)) == doctest::Approx(1.0).epsilon(1e-12));

  ComplexMatrix s(2);
  s(0, 1) = s(1, 0) = cx(1, 0);
  const auto e2 = hermitian_eigh(s);
  CHECK(e2.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e2.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigh matches the characteristic-polynomial bisection oracle") {
  RngStream rng(2024, 5);
  const ComplexMatrix h = random_hermitian(4, rng);
  const auto e = hermitian_eigh(h);
  const auto coeffs = testutil::char_poly(h);
  const auto [lo, hi] = testutil::gershgorin(h);
  const auto roots = testutil::real_roots_bisect(coeffs, lo, hi, 4);
  REQUIRE(roots.size() == 4);
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(std::abs(e.values[k] - roots[k]) < 1e-9);
}

TEST_CASE("hermitian_eigh invariants across sizes") {
  for (std::size_t n : {2ul, 3ul, 5ul, 8ul, 16ul, 33ul, 64ul, 128ul}) {
    RngStream rng(7, n);
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto d = hermitian_eigh(h);
    double hnorm = 0.0;
    for (double v : d.values) hnorm = std::max(hnorm, std::abs(v));
    hnorm = std::max(hnorm, 1e-30);

    CHECK(std::is_sorted(d.values.begin(), d.values.end()));
    CHECK(eigh_residual(h, d) <= 1e-10 * double(n) * hnorm);
    CHECK(unitarity_defect(d.vectors) <= 1e-10 * double(n));

    double sum = 0.0, tr = 0.0;
    for (double v : d.values) sum += v;
    for (std::size_t i = 0; i < n; ++i) tr += h(i, i).real();
    CHECK(std::abs(sum - tr) <= 1e-10 * double(n) * hnorm);

    // the extreme-pair fast path agrees with the full decomposition
    const auto ex = hermitian_extreme(h);
    CHECK(ex.lambda_max == doctest::Approx(d.values.back()).epsilon(1e-13));
    CHECK(ex.lambda_min == doctest::Approx(d.values.front()).epsilon(1e-13));
  }
}

TEST_CASE("hermitian_eigh rejects non-Hermitian input") {
  RngStream rng(1, 1);
  const ComplexMatrix x = random_ginibre(5, rng);
  CHECK_THROWS_AS((void)hermitian_eigh(x), InvalidArgument);
}

TEST_CASE("eigenvalues_general on structured matrices") {
  const Spectrum sj = eigenvalues_general(jordan2());
  CHECK(std::abs(sj.eigenvalues[0]) == 0.0);
  CHECK(std::abs(sj.eigenvalues[1]) == 0.0);

  // upper triangular: spectrum equals the diagonal
  RngStream rng(3, 3);
  ComplexMatrix t(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) t(i, j) = rng.gaussian_complex(1.0);
  std::vector<cx> diag;
  for (std::size_t i = 0; i < 6; ++i) diag.push_back(t(i, i));
  std::sort(diag.begin(), diag.end(), [](const cx& a, const cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  const Spectrum st = eigenvalues_general(t);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(st.eigenvalues[i] - diag[i]) < 1e-12);

  // nilpotent Jordan block of size 8 deflates to exact zeros
  ComplexMatrix j8(8);
  for (std::size_t i = 0; i + 1 < 8; ++i) j8(i, i + 1) = cx(1, 0);
  for (const cx& z : eigenvalues_general(j8).eigenvalues) CHECK(std::abs(z) == 0.0);
}

TEST_CASE("eigenvalues_general matches the Durand-Kerner oracle on a 5x5") {
  RngStream rng(99, 1);
  const ComplexMatrix x = random_ginibre(5, rng);
  const Spectrum s = eigenvalues_general(x);
  const auto roots = testutil::durand_kerner(testutil::char_poly(x));
  CHECK(testutil::multiset_distance(s.eigenvalues, roots) < 1e-8);
}

TEST_CASE("eigenvalues_general trace and Hermitian-input invariants") {
  for (std::size_t n : {3ul, 17ul, 48ul}) {
    RngStream rng(11, n);
    const ComplexMatrix x = random_ginibre(n, rng);
    const Spectrum s = eigenvalues_general(x);
    cx sum(0, 0);
    for (const cx& z : s.eigenvalues) sum += z;
    const double xnorm = operator_norm(x);
    CHECK(std::abs(sum - trace(x)) <= 1e-8 * double(n) * std::max(xnorm, 1e-30));

    const ComplexMatrix h = hermitian_part(x, 0.4);
    const Spectrum sh = eigenvalues_general(h);
    for (const cx& z : sh.eigenvalues)
      CHECK(std::abs(z.imag()) <= 1e-10 * std::max(operator_norm(h), 1e-30));
  }
}

TEST_CASE("operator_norm reference values") {
  CHECK(operator_norm(ComplexMatrix::identity(7)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(jordan2()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hs_norm, trace and matmul basics") {
  CHECK(hs_norm(ComplexMatrix::identity(9)) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(std::abs(trace(jordan2())) == 0.0);

  RngStream rng(5, 0);
  const ComplexMatrix a = random_ginibre(4, rng);
  const ComplexMatrix b = random_ginibre(3, rng);
  CHECK_THROWS_AS((void)matmul(a, b), DimensionMismatch);
}

TEST_CASE("matmul and gram agree with a naive reference") {
  RngStream rng(8, 0);
  const std::size_t n = 37;
  const ComplexMatrix a = random_ginibre(n, rng);
  const ComplexMatrix b = random_ginibre(n, rng);
  const ComplexMatrix c = matmul(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cx ref(0, 0);
      for (std::size_t k = 0; k < n; ++k) ref += a(i, k) * b(k, j);
      worst = std::max(worst, std::abs(ref - c(i, j)));
    }
  CHECK(worst < 1e-13);

  const ComplexMatrix g = gram(a);
  const ComplexMatrix ref = matmul(a, conj_transpose(a));
  double worst2 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst2 = std::max(worst2, std::abs(g(i, j) - ref(i, j)));
  CHECK(worst2 < 1e-13);
}

TEST_CASE("unitary invariance of norm and spectrum") {
  RngStream rng(13, 2);
  const std::size_t n = 48;
  const ComplexMatrix x = random_ginibre(n, rng);
  const ComplexMatrix u = testutil::haar_unitary(n, rng);
  const ComplexMatrix y = matmul(matmul(u, x), conj_transpose(u));
  const double nx = operator_norm(x);
  CHECK(std::abs(operator_norm(y) - nx) <= 1e-8 * nx);
  CHECK(testutil::multiset_distance(eigenvalues_general(x).eigenvalues,
                                    eigenvalues_general(y).eigenvalues) <= 1e-7 * nx);
}

TEST_CASE("hs_norm squared equals the sum of squared singular values") {
  RngStream rng(21, 0);
  const ComplexMatrix x = random_ginibre(40, rng);
  const double hs2 = hs_norm(x) * hs_norm(x);
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(gram(x))) sum += v;
  CHECK(std::abs(hs2 - sum) <= 1e-8 * hs2);
}
