#ifndef SPECRANGE_CALIBRATION_HPP
#define SPECRANGE_CALIBRATION_HPP

// Frozen acceptance thresholds.  The bands below were fixed once from
// high-trial pilot runs (64-trial pilots at the quoted sizes, master seed 1,
// grid m = 256) and are not retuned; the --check mode of the CLI and the
// acceptance suite both read them from here.

namespace specrange::calibration {

// Disk-convergence tolerance at N = 1024 for the sqrt(2)-normalized
// ensembles (complex Ginibre, strict triangular).  Pilot medians sit near
// 0.03-0.05; 0.12 leaves ~2.5x headroom.
inline constexpr double kDiskDistanceTol1024 = 0.12;

// Numerical-radius band half-width around sqrt(2) at N = 1024.
inline constexpr double kRadiusTol1024 = 0.12;

// Complex Ginibre operator norm band at N = 1024 (limit 2).
inline constexpr double kGinibreNormLo = 1.85;
inline constexpr double kGinibreNormHi = 2.15;

// Spectral radius band at N = 1024 (circular-law support radius 1).
inline constexpr double kGinibreRhoLo = 0.9;
inline constexpr double kGinibreRhoHi = 1.1;

// mu3^2 / N band for complex Ginibre (limit 1/2).
inline constexpr double kGinibreMu3SqLo = 0.45;
inline constexpr double kGinibreMu3SqHi = 0.55;

// W/Gamma area ratio band for complex Ginibre at N = 1024 (limit 2).
inline constexpr double kAreaRatioLo = 1.8;
inline constexpr double kAreaRatioHi = 2.2;

// Renormalized triangular norm band at N = 2048 (limit sqrt(e) ~ 1.6487).
inline constexpr double kBarNormLo = 1.50;
inline constexpr double kBarNormHi = 1.80;

// HS-normalized triangular norm band at N = 2048 (limit sqrt(2e) ~ 2.3316).
inline constexpr double kTriNormLo = 2.13;
inline constexpr double kTriNormHi = 2.53;

// Exceedance probability cap for |  ||Re X|| - sqrt(2) | >= 0.3 at N = 256
// (pilot: ~0.00 at 400 trials; the cap is deliberately loose).
inline constexpr double kTailP03Cap = 0.05;

// Ellipse containment slack for N = 512, a = 1, b = 0.5.
inline constexpr double kEllipseSlack = 0.15;

// Relative moment tolerances (ell <= 3, ell in {4, 5}).
inline constexpr double kMomentTolLow = 0.05;
inline constexpr double kMomentTolHigh = 0.10;

// One median inversion of at most this relative size is allowed in the
// disk-distance trend across a sweep.
inline constexpr double kTrendInversionTol = 0.10;

}  // namespace specrange::calibration

#endif
