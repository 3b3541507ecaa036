#include "ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "eigen_general.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace specrange {

namespace {

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ComplexMatrix sample_full_gaussian_complex(std::size_t n, double variance,
                                           RngStream& stream) {
  ComplexMatrix x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = stream.gaussian_complex(variance);
  return x;
}

ComplexMatrix sample_strict_upper(std::size_t n, double variance, RngStream& stream) {
  ComplexMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) t(i, j) = stream.gaussian_complex(variance);
  return t;
}

ComplexMatrix sample_diagonalized_ginibre(std::size_t n, RngStream& stream) {
  const ComplexMatrix g = sample_full_gaussian_complex(n, 1.0 / double(n), stream);
  const Spectrum s = eigenvalues_general(g);
  ComplexMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = s.eigenvalues[i];
  return d;
}

void add_scaled(ComplexMatrix& dst, const ComplexMatrix& src, double factor) {
  const std::size_t n = dst.dim();
  for (std::size_t k = 0; k < n * n; ++k) dst.data()[k] += factor * src.data()[k];
}

}  // namespace

EnsembleSpec EnsembleSpec::parse(const std::string& token, std::size_t n) {
  EnsembleSpec s;
  s.n = n;
  auto bad = [&](const std::string& why) -> EnsembleSpec& {
    throw InvalidSpec("ensemble '" + token + "': " + why);
  };
  const auto colon = token.find(':');
  const std::string head = token.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : token.substr(colon + 1);

  if (head == "ginibre-complex") s.kind = EnsembleKind::GinibreComplex;
  else if (head == "ginibre-real") s.kind = EnsembleKind::GinibreReal;
  else if (head == "triangular-strict") s.kind = EnsembleKind::TriangularStrict;
  else if (head == "triangular-bar") s.kind = EnsembleKind::TriangularBar;
  else if (head == "diagonalized-ginibre") s.kind = EnsembleKind::DiagonalizedGinibre;
  else if (head == "diagonal-unitary") s.kind = EnsembleKind::DiagonalUnitary;
  else if (head == "jordan") s.kind = EnsembleKind::Jordan;
  else if (head == "diag-plus-triangular") s.kind = EnsembleKind::DiagPlusTriangular;
  else if (head == "unitary-plus-triangular") s.kind = EnsembleKind::UnitaryPlusTriangular;
  else if (head == "triangular-block") {
    s.kind = EnsembleKind::TriangularBlock;
    if (rest.empty()) bad("expected triangular-block:<k>");
    s.block_count = std::atoi(rest.c_str());
  } else if (head == "ellipse") {
    s.kind = EnsembleKind::Ellipse;
    const auto mid = rest.find(':');
    if (mid == std::string::npos) bad("expected ellipse:<a>:<b>");
    s.ellipse_a = std::atof(rest.substr(0, mid).c_str());
    s.ellipse_b = std::atof(rest.substr(mid + 1).c_str());
  } else if (head == "mixture") {
    s.kind = EnsembleKind::Mixture;
    const auto last = rest.rfind(':');
    if (last == std::string::npos) bad("expected mixture:<base>:<a>");
    s.weight = std::atof(rest.substr(last + 1).c_str());
    s.base = std::make_shared<EnsembleSpec>(parse(rest.substr(0, last), n));
  } else {
    bad("unknown ensemble kind");
  }
  if (colon != std::string::npos && s.kind != EnsembleKind::TriangularBlock &&
      s.kind != EnsembleKind::Ellipse && s.kind != EnsembleKind::Mixture)
    bad("kind takes no parameters");
  s.validate();
  return s;
}

std::string EnsembleSpec::to_string() const {
  switch (kind) {
    case EnsembleKind::GinibreComplex: return "ginibre-complex";
    case EnsembleKind::GinibreReal: return "ginibre-real";
    case EnsembleKind::TriangularStrict: return "triangular-strict";
    case EnsembleKind::TriangularBar: return "triangular-bar";
    case EnsembleKind::TriangularBlock:
      return "triangular-block:" + std::to_string(block_count);
    case EnsembleKind::DiagonalizedGinibre: return "diagonalized-ginibre";
    case EnsembleKind::DiagonalUnitary: return "diagonal-unitary";
    case EnsembleKind::Jordan: return "jordan";
    case EnsembleKind::Mixture:
      return "mixture:" + (base ? base->to_string() : "?") + ":" + fmt_param(weight);
    case EnsembleKind::DiagPlusTriangular: return "diag-plus-triangular";
    case EnsembleKind::UnitaryPlusTriangular: return "unitary-plus-triangular";
    case EnsembleKind::Ellipse:
      return "ellipse:" + fmt_param(ellipse_a) + ":" + fmt_param(ellipse_b);
  }
  return "?";
}

EnsembleSpec EnsembleSpec::with_dimension(std::size_t dim) const {
  EnsembleSpec s = *this;
  s.n = dim;
  if (s.base) s.base = std::make_shared<EnsembleSpec>(s.base->with_dimension(dim));
  return s;
}

void EnsembleSpec::validate() const {
  if (n < 1) throw InvalidSpec("dimension must be >= 1");
  const bool triangular =
      kind == EnsembleKind::TriangularStrict || kind == EnsembleKind::TriangularBar ||
      kind == EnsembleKind::TriangularBlock || kind == EnsembleKind::Mixture ||
      kind == EnsembleKind::DiagPlusTriangular ||
      kind == EnsembleKind::UnitaryPlusTriangular;
  if (triangular && n < 2)
    throw InvalidSpec("triangular ensembles need dimension >= 2");
  if (kind == EnsembleKind::TriangularBlock) {
    if (block_count < 1) throw InvalidSpec("block count must be >= 1");
    if (std::size_t(block_count) > n)
      throw InvalidSpec("block count exceeds dimension");
  }
  if (kind == EnsembleKind::Mixture) {
    if (!base) throw InvalidSpec("mixture needs a base ensemble");
    if (!(weight >= 0.0 && weight <= 1.0))
      throw InvalidSpec("mixture weight must lie in [0, 1]");
    base->validate();
  }
  if (kind == EnsembleKind::Ellipse && !(ellipse_a > 0.0 && ellipse_b > 0.0))
    throw InvalidSpec("ellipse parameters must be positive");
}

ComplexMatrix sample(const EnsembleSpec& spec, RngStream& stream) {
  spec.validate();
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case EnsembleKind::GinibreComplex:
      return sample_full_gaussian_complex(n, 1.0 / double(n), stream);
    case EnsembleKind::GinibreReal: {
      ComplexMatrix x(n);
      std::vector<double> g(n * n);
      stream.fill_gaussian_real(g, 1.0 / double(n));
      for (std::size_t k = 0; k < n * n; ++k) x.data()[k] = cx(g[k], 0.0);
      return x;
    }
    case EnsembleKind::TriangularStrict:
      return sample_strict_upper(n, 2.0 / double(n - 1), stream);
    case EnsembleKind::TriangularBar:
      return sample_strict_upper(n, 1.0 / double(n), stream);
    case EnsembleKind::TriangularBlock: {
      ComplexMatrix t = sample_strict_upper(n, 1.0 / double(n), stream);
      zero_block_pattern(t, spec.block_count);
      return t;
    }
    case EnsembleKind::DiagonalizedGinibre:
      return sample_diagonalized_ginibre(n, stream);
    case EnsembleKind::DiagonalUnitary: {
      ComplexMatrix u(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double phi = 2.0 * std::numbers::pi * stream.next_unit_half_open();
        u(i, i) = cx(std::cos(phi), std::sin(phi));
      }
      return u;
    }
    case EnsembleKind::Jordan: {
      ComplexMatrix j(n);
      for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = cx(1.0, 0.0);
      return j;
    }
    case EnsembleKind::Mixture: {
      RngStream bs = stream.substream(1);
      RngStream ts = stream.substream(2);
      ComplexMatrix y = sample(*spec.base, bs);
      const double a = spec.weight;
      for (std::size_t k = 0; k < n * n; ++k) y.data()[k] *= std::sqrt(1.0 - a);
      const ComplexMatrix t = sample_strict_upper(n, 2.0 / double(n - 1), ts);
      add_scaled(y, t, std::sqrt(a));
      return y;
    }
    case EnsembleKind::DiagPlusTriangular: {
      RngStream ds = stream.substream(1);
      RngStream ts = stream.substream(2);
      ComplexMatrix y = sample_diagonalized_ginibre(n, ds);
      const ComplexMatrix t = sample_strict_upper(n, 2.0 / double(n - 1), ts);
      add_scaled(y, t, 1.0 / std::sqrt(2.0));
      return y;
    }
    case EnsembleKind::UnitaryPlusTriangular: {
      RngStream us = stream.substream(1);
      RngStream ts = stream.substream(2);
      EnsembleSpec unit;
      unit.kind = EnsembleKind::DiagonalUnitary;
      unit.n = n;
      ComplexMatrix y = sample(unit, us);
      const ComplexMatrix t = sample_strict_upper(n, 2.0 / double(n - 1), ts);
      add_scaled(y, t, 1.0);
      return y;
    }
    case EnsembleKind::Ellipse: {
      // a H1 + i b H2 with H1, H2 independent Hermitian parts of Ginibre
      // samples (scaled GUE).  Hermitian components are what make
      // Re(e^{i theta} A) = a cos(theta) H1 - b sin(theta) H2, i.e. a
      // r(theta)-scaled GUE, so the range is asymptotically elliptical.
      RngStream s1 = stream.substream(1);
      RngStream s2 = stream.substream(2);
      ComplexMatrix h1 =
          hermitian_part(sample_full_gaussian_complex(n, 1.0 / double(n), s1), 0.0);
      const ComplexMatrix h2 =
          hermitian_part(sample_full_gaussian_complex(n, 1.0 / double(n), s2), 0.0);
      const cx ib(0.0, spec.ellipse_b);
      for (std::size_t k = 0; k < n * n; ++k)
        h1.data()[k] = spec.ellipse_a * h1.data()[k] + ib * h2.data()[k];
      return h1;
    }
  }
  throw InvalidSpec("unhandled ensemble kind");
}

void zero_block_pattern(ComplexMatrix& t, int k) {
  const std::size_t n = t.dim();
  if (k < 1 || std::size_t(k) > n) throw InvalidSpec("block count must lie in [1, n]");
  const std::size_t m = n / std::size_t(k);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t block = j / m;
    const std::size_t cut = block * m;  // rows >= cut are zeroed in column j
    for (std::size_t i = cut; i < n; ++i) t(i, j) = cx(0.0, 0.0);
  }
}

double max_abs_gaussian_bound(std::size_t n) {
  if (n < 1) throw InvalidArgument("count must be >= 1");
  return std::sqrt(2.0 * std::log(2.0 * double(n)));
}

}  // namespace specrange
