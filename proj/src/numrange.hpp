#ifndef SPECRANGE_NUMRANGE_HPP
#define SPECRANGE_NUMRANGE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "complex_matrix.hpp"
#include "convex.hpp"
#include "eigen_general.hpp"

namespace specrange {

// Sampled support function of the numerical range on the uniform angle grid
// theta_j = 2 pi j / m:
//   lambdas[j]  = lambda_max(Re(e^{i theta_j} X))   (support value)
//   norms[j]    = ||Re(e^{i theta_j} X)||           (max of |extreme| eigenvalues)
//   boundary[j] = (X y_j, y_j) for the top unit eigenvector y_j
struct SupportProfile {
  std::size_t grid_size = 0;
  std::vector<double> thetas;
  std::vector<double> lambdas;
  std::vector<double> norms;
  std::vector<cx> boundary;
};

// Computes lambda/norm/boundary for every grid node.  m must be even and
// >= 8; antipodal angles share one eigensolve since the Hermitian part at
// theta + pi is the exact negation of the one at theta.  Solves are
// independent across nodes and parallelized over `threads`.
SupportProfile support_profile(const ComplexMatrix& x, std::size_t m,
                               unsigned threads = 0);

// ||Re(e^{i theta_j} X)|| per node; values-only solves.
std::vector<double> norm_profile(const ComplexMatrix& x, std::size_t m,
                                 unsigned threads = 0);

// Inner approximation (hull of boundary points) and outer approximation
// (intersection of the m sampled halfplanes).  `gap` is their Hausdorff
// distance and bounds the discretization error of either polygon.
struct RangePolygons {
  ConvexPolygon inner;
  ConvexPolygon outer;
  double gap = 0.0;
  bool degenerate = false;  // all boundary points coincide
};
RangePolygons inner_outer_range(const SupportProfile& profile);

// Sup-norm distance of the sampled support function to the disk D(0, R):
// raw = max_j |lambda_j - R|; certified adds the inner/outer gap.
struct DiskDistance {
  double raw = 0.0;
  double certified = 0.0;
};
DiskDistance hausdorff_to_disk(const SupportProfile& profile, double radius);

// Hausdorff distance between two convex sets sampled on the same grid.
double hausdorff_convex(const SupportProfile& p, const SupportProfile& q);

// max_j lambda_j; equals max{|z| : z in W} up to grid discretization.
double numerical_radius(const SupportProfile& profile);

// area(inner range polygon) / area(conv spectrum); throws DegenerateRange
// when the spectral hull has (numerically) zero area.
double area_ratio(const SupportProfile& profile, const Spectrum& spectrum);
double area_ratio(const ComplexMatrix& x, std::size_t m, unsigned threads = 0);

// Star-shaped set with radial function R on the grid, under the convention
// that the point in direction e^{-i theta} has radius R(theta); R is
// 2pi-periodic and linearly interpolated between nodes.
struct StarBody {
  std::size_t grid_size = 0;
  std::vector<double> radial;
};

StarBody star_from_norms(const SupportProfile& profile);

// z = rho e^{-i theta} is a member iff rho <= R(theta) + slack.
bool star_membership(cx z, const StarBody& k, double slack);

// Tests every boundary point of the profile.
bool profile_in_star(const SupportProfile& profile, const StarBody& k, double slack);

// Support profile of a polygon on the same grid convention (used to compare
// numerical ranges against spectral hulls).
SupportProfile polygon_support_profile(const ConvexPolygon& poly, std::size_t m);

}  // namespace specrange

#endif
